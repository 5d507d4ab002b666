#include <algorithm>

#include "doctest.h"
#include "querent/concepts.hpp"
#include "querent/errors.hpp"
#include "querent/kb.hpp"
#include "querent/sexpr.hpp"

using namespace querent;

namespace {

// Running example role box: t subrole of inv(t), inv(s) subrole of r,
// r and t transitive.
RBox exampleRBox() {
  RBox rb;
  rb.inclusions.push_back(RoleInclusion{Role("t"), Role("t", true)});
  rb.inclusions.push_back(RoleInclusion{Role("s", true), Role("r")});
  rb.transitiveNames.insert("r");
  rb.transitiveNames.insert("t");
  return rb;
}

}  // namespace

TEST_CASE("role order and inversion") {
  Role r("r"), ri("r", true), s("s");
  CHECK(inv(r) == ri);
  CHECK(inv(ri) == r);
  CHECK(r < ri);
  CHECK(ri < s);
}

TEST_CASE("hierarchy closes inclusions under inverses and reflexivity") {
  RoleHierarchy h(exampleRBox());
  const Role t("t"), ti("t", true), s("s"), si("s", true), r("r"), ri("r", true);

  CHECK(h.subsumed(t, t));
  CHECK(h.subsumed(t, ti));
  CHECK(h.subsumed(ti, t));  // inverse of the declared inclusion
  CHECK(h.subsumed(si, r));
  CHECK(h.subsumed(s, ri));
  CHECK_FALSE(h.subsumed(r, s));
  CHECK_FALSE(h.subsumed(s, r));
  // Roles never mentioned subsume only themselves.
  CHECK(h.subsumed(Role("q"), Role("q")));
  CHECK_FALSE(h.subsumed(Role("q"), r));
}

TEST_CASE("transitivity spreads over equivalence and inverses") {
  RoleHierarchy h(exampleRBox());
  CHECK(h.isTransitive(Role("r")));
  CHECK(h.isTransitive(Role("r", true)));
  CHECK(h.isTransitive(Role("t")));
  CHECK(h.isTransitive(Role("t", true)));  // t and inv(t) are equivalent
  CHECK_FALSE(h.isTransitive(Role("s")));
  CHECK_FALSE(h.isTransitive(Role("s", true)));
}

TEST_CASE("simplicity") {
  RoleHierarchy h(exampleRBox());
  CHECK_FALSE(h.isSimple(Role("r")));   // r itself is transitive
  CHECK(h.isSimple(Role("s")));
  CHECK(h.isSimple(Role("s", true)));   // inv(s) below r does not matter; nothing below inv(s)
  CHECK_FALSE(h.isSimple(Role("t")));
  const auto belowR = h.transitiveSubRoles(Role("r"));
  CHECK(belowR == std::vector<Role>{Role("r")});
}

TEST_CASE("concept constructors normalize") {
  const Concept a = Concept::atomic("A");
  const Concept b = Concept::atomic("B");
  CHECK(Concept::conj({a, b}) == Concept::conj({b, a, a}));
  CHECK(Concept::conj({a, Concept::top()}) == a);
  CHECK(Concept::conj({a, Concept::bottom()}) == Concept::bottom());
  CHECK(Concept::disj({a, Concept::bottom()}) == a);
  CHECK(Concept::disj({a, Concept::top()}) == Concept::top());
  CHECK(Concept::conj({}) == Concept::top());
  CHECK(Concept::negation(Concept::negation(a)) == a);
  CHECK(Concept::negation(Concept::top()) == Concept::bottom());
  CHECK(Concept::atLeast(0, RoleExpr(Role("p")), a) == Concept::top());
  // Nested conjunction flattens.
  CHECK(Concept::conj({a, Concept::conj({b, a})}) == Concept::conj({a, b}));
}

TEST_CASE("nnf pushes negation to atoms") {
  const Concept a = Concept::atomic("A");
  const RoleExpr p{Role("p")};
  const Concept c = Concept::negation(Concept::atMost(2, p, a));
  CHECK(nnf(c) == Concept::atLeast(3, p, a));

  const Concept d = Concept::negation(Concept::some(p, Concept::negation(a)));
  CHECK(nnf(d) == Concept::all(p, a));

  const Concept e = Concept::negation(Concept::conj({a, Concept::some(p, a)}));
  CHECK(nnf(e) == Concept::disj({Concept::negation(a), Concept::all(p, Concept::negation(a))}));

  // not(at-least 1) = at-most 0.
  CHECK(nnf(Concept::negation(Concept::atLeast(1, p, a))) == Concept::atMost(0, p, a));
  CHECK(nnfNeg(Concept::atMost(0, p, a)) == Concept::atLeast(1, p, a));
}

TEST_CASE("closure contains subconcepts, negations and transitive foralls") {
  RoleHierarchy h(exampleRBox());
  const Concept a = Concept::atomic("A");
  const Concept c = Concept::all(RoleExpr(Role("r")), a);
  const auto cl = closure(c, h);
  const auto has = [&](const Concept& x) {
    return std::find(cl.begin(), cl.end(), x) != cl.end();
  };
  CHECK(has(c));
  CHECK(has(a));
  CHECK(has(Concept::negation(a)));
  CHECK(has(Concept::some(RoleExpr(Role("r")), Concept::negation(a))));

  // Universal over a role with a transitive sub-role pulls in the shifted
  // universal: all over inv(t) adds all over t and inv(t) tuples.
  const Concept d = Concept::all(RoleExpr(Role("t", true)), a);
  const auto cl2 = closure(d, h);
  const auto has2 = [&](const Concept& x) {
    return std::find(cl2.begin(), cl2.end(), x) != cl2.end();
  };
  CHECK(has2(Concept::all(RoleExpr(Role("t")), a)));
  CHECK(has2(Concept::all(RoleExpr(Role("t", true)), a)));
}

TEST_CASE("closure is finite and closed under nnf negation") {
  RoleHierarchy h(exampleRBox());
  const Concept c = parseConcept(
      "(and (some r (at-least 2 s (not A))) (or B (all (rconj r (inv s)) bottom)))");
  const auto cl = closure(c, h);
  for (const auto& m : cl) {
    CHECK(std::find(cl.begin(), cl.end(), nnfNeg(m)) != cl.end());
    CHECK(m == nnf(m));
  }
}

TEST_CASE("kb load validates number restrictions") {
  RBox rb = exampleRBox();
  ABox ab;
  ab.concepts.push_back(ConceptAssertion{"a", Concept::atomic("A")});
  // at-least over transitive r is rejected.
  std::vector<GCI> bad = {
      GCI{Concept::atomic("A"), Concept::atLeast(2, RoleExpr(Role("r")), Concept::top())}};
  CHECK_THROWS_AS(KB::create(bad, rb, ab), InvalidInput);
  // over simple s it is accepted.
  std::vector<GCI> good = {
      GCI{Concept::atomic("A"), Concept::atLeast(2, RoleExpr(Role("s")), Concept::top())}};
  CHECK_NOTHROW(KB::create(good, rb, ab));
}

TEST_CASE("empty abox is seeded with an anonymous individual") {
  KB kb = KB::create({}, RBox{}, ABox{});
  REQUIRE(kb.individuals().size() == 1);
  CHECK(kb.individuals().front() == kAnonymousIndividual);
}

TEST_CASE("role expression dnf and safety") {
  const RoleExpr r{Role("r")}, s{Role("s")};
  const RoleExpr e = RoleExpr::conj({r, RoleExpr::neg(s)});
  const auto d = e.dnf();
  REQUIRE(d.size() == 1);
  CHECK(d[0] == std::vector<RoleLiteral>{{Role("r"), true}, {Role("s"), false}});
  CHECK(e.isSafe());
  CHECK_FALSE(RoleExpr::neg(s).isSafe());
  CHECK(RoleExpr::disj({r, s}).isSafe());
  CHECK_FALSE(RoleExpr::disj({r, RoleExpr::neg(s)}).isSafe());
  // Contradictory disjuncts drop out.
  const RoleExpr contra = RoleExpr::conj({s, RoleExpr::neg(s)});
  CHECK(contra.dnf().empty());
}

TEST_CASE("upClose and tcSet on the running hierarchy") {
  RoleHierarchy h(exampleRBox());
  const RoleExpr upSi = upClose(RoleConjunction(Role("s", true)), h);
  CHECK(upSi.asConjunction() == RoleConjunction({Role("r"), Role("s", true)}));

  const RoleExpr upT = upClose(RoleConjunction(Role("t")), h);
  CHECK(upT.asConjunction() == RoleConjunction({Role("t"), Role("t", true)}));

  const auto tc = tcSet(RoleConjunction({Role("r"), Role("t")}), h);
  // r has transitive sub-role r; t has t and inv(t).
  REQUIRE(tc.size() == 2);
  CHECK(tc[0] == RoleConjunction({Role("r"), Role("t")}));
  CHECK(tc[1] == RoleConjunction({Role("r"), Role("t", true)}));

  CHECK(tcSet(RoleConjunction(Role("s")), h).empty());
}
