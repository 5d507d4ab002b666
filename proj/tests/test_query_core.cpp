#include <algorithm>
#include <map>

#include "doctest.h"
#include "querent/errors.hpp"
#include "querent/query.hpp"

using namespace querent;

namespace {

Term v(const char* n) { return Term::variable(n); }
Term ind(const char* n) { return Term::individual(n); }

// The five-atom query used throughout: a diamond over u,x,y,z with a loop
// at y.
Query diamondQuery() {
  return Query({
      Atom::role(v("u"), v("x"), Role("r")),
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::role(v("y"), v("y"), Role("t")),
      Atom::role(v("z"), v("y"), Role("s")),
      Atom::role(v("u"), v("z"), Role("r")),
  });
}

}  // namespace

TEST_CASE("terms order individuals before variables") {
  CHECK(ind("z") < v("a"));
  CHECK(v("a") < v("b"));
  CHECK(ind("a") < ind("b"));
  CHECK(Term::variable("x") == Term::variable("x"));
  CHECK(Term::variable("x") != Term::individual("x"));
}

TEST_CASE("role atoms normalize inverse roles to name orientation") {
  const Atom fwd = Atom::role(v("x"), v("y"), Role("r"));
  const Atom flipped = Atom::role(v("y"), v("x"), Role("r", true));
  CHECK(fwd == flipped);
  CHECK(fwd.roleValue() == Role("r"));
  CHECK(fwd.first() == v("x"));
  CHECK(fwd.second() == v("y"));
}

TEST_CASE("equality atoms order their endpoints") {
  const Atom e1 = Atom::eq(v("y"), v("x"));
  const Atom e2 = Atom::eq(v("x"), v("y"));
  CHECK(e1 == e2);
  CHECK(e1.first() == v("x"));
}

TEST_CASE("queries sort and deduplicate atoms and reject emptiness") {
  Query q({
      Atom::conceptAtom(v("x"), Concept::atomic("A")),
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::conceptAtom(v("x"), Concept::atomic("A")),
  });
  CHECK(q.atoms().size() == 2);
  CHECK(std::is_sorted(q.atoms().begin(), q.atoms().end()));
  CHECK_THROWS_AS(Query({}), InvalidInput);
}

TEST_CASE("equality closure picks minimal representatives") {
  Query q({
      Atom::eq(v("x"), v("y")),
      Atom::eq(v("y"), v("z")),
      Atom::conceptAtom(v("w"), Concept::atomic("A")),
  });
  CHECK(q.sameClass(v("x"), v("z")));
  CHECK_FALSE(q.sameClass(v("x"), v("w")));
  CHECK(q.rep(v("z")) == v("x"));
  CHECK(q.rep(v("w")) == v("w"));
  REQUIRE(q.eqClasses().size() == 2);
  CHECK(q.eqClasses()[0] == std::vector<Term>{v("w")});
  CHECK(q.eqClasses()[1] == std::vector<Term>{v("x"), v("y"), v("z")});

  // Individuals win the representative role over variables.
  Query q2({Atom::eq(v("x"), ind("a"))});
  CHECK(q2.rep(v("x")) == ind("a"));
}

TEST_CASE("derived membership respects equality and inversion") {
  Query q({
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::eq(v("y"), v("z")),
  });
  CHECK(q.dinHolds(Atom::role(v("x"), v("y"), Role("r"))));
  CHECK(q.dinHolds(Atom::role(v("x"), v("z"), Role("r"))));
  CHECK(q.dinHolds(Atom::role(v("y"), v("x"), Role("r", true))));
  CHECK(q.dinHolds(Atom::role(v("z"), v("x"), Role("r", true))));
  CHECK_FALSE(q.dinHolds(Atom::role(v("x"), v("y"), Role("s"))));
  CHECK_FALSE(q.dinHolds(Atom::role(v("y"), v("x"), Role("r"))));
  CHECK(q.dinHolds(Atom::eq(v("z"), v("y"))));
  CHECK_FALSE(q.dinHolds(Atom::eq(v("x"), v("y"))));
}

TEST_CASE("class edges and loop classes of the diamond") {
  const Query q = diamondQuery();
  const auto edges = q.classEdges();
  const std::vector<std::pair<Term, Term>> want = {
      {v("u"), v("x")}, {v("u"), v("z")}, {v("x"), v("y")}, {v("y"), v("z")}};
  CHECK(edges == want);
  CHECK(q.loopClasses() == std::vector<Term>{v("y")});
}

TEST_CASE("equality can turn a role atom into a loop") {
  Query q({
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::eq(v("x"), v("y")),
  });
  CHECK(q.classEdges().empty());
  CHECK(q.loopClasses() == std::vector<Term>{v("x")});
}

TEST_CASE("connected components partition the atoms") {
  Query q({
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::conceptAtom(v("y"), Concept::atomic("A")),
      Atom::conceptAtom(v("w"), Concept::atomic("B")),
  });
  const auto comps = connectedComponents(q);
  REQUIRE(comps.size() == 2);
  // Components are ordered by smallest atom; the lone concept atom on w
  // sorts before everything mentioning x or y.
  CHECK(comps[0].atoms() == std::vector<Atom>{Atom::conceptAtom(v("w"), Concept::atomic("B"))});
  CHECK(comps[1].atoms().size() == 2);
  CHECK_FALSE(isConnected(q));
  CHECK(isConnected(comps[1]));

  // Equality atoms connect their terms.
  Query q2({
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::eq(v("y"), v("w")),
      Atom::conceptAtom(v("w"), Concept::atomic("B")),
  });
  CHECK(isConnected(q2));
}

TEST_CASE("cycle detection ignores loops and parallel edges") {
  CHECK(isCyclic(diamondQuery()));

  Query path({
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::role(v("y"), v("z"), Role("r")),
  });
  CHECK_FALSE(isCyclic(path));

  Query loop({Atom::role(v("y"), v("y"), Role("t"))});
  CHECK_FALSE(isCyclic(loop));

  Query parallel({
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::role(v("y"), v("x"), Role("s")),
  });
  CHECK_FALSE(isCyclic(parallel));

  Query triangle({
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::role(v("y"), v("z"), Role("r")),
      Atom::role(v("z"), v("x"), Role("r")),
  });
  CHECK(isCyclic(triangle));

  // Equality merging can break a triangle down to parallel edges.
  Query merged({
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::role(v("y"), v("z"), Role("r")),
      Atom::role(v("z"), v("x"), Role("r")),
      Atom::eq(v("x"), v("y")),
  });
  CHECK_FALSE(isCyclic(merged));
}

TEST_CASE("substitution merges terms and renormalizes") {
  const Query q = diamondQuery();
  std::map<Term, Term> sub = {{v("u"), ind("a")}, {v("x"), ind("b")}};
  const Query g = q.substituted(sub);
  CHECK(g.dinHolds(Atom::role(ind("a"), ind("b"), Role("r"))));
  CHECK(g.variables() == std::vector<Term>{v("y"), v("z")});
  CHECK(g.individuals() == std::vector<Term>{ind("a"), ind("b")});
}

TEST_CASE("union disjuncts get disjoint variable namespaces") {
  Query q1({Atom::role(v("x"), v("y"), Role("r"))});
  Query q2({Atom::role(v("x"), v("y"), Role("s"))});
  UCQ u({q1, q2});
  REQUIRE(u.disjuncts().size() == 2);
  CHECK(u.disjuncts()[0] == q1);
  const auto vars0 = u.disjuncts()[0].variables();
  const auto vars1 = u.disjuncts()[1].variables();
  for (const auto& a : vars0)
    CHECK(std::find(vars1.begin(), vars1.end(), a) == vars1.end());
  // Shared individuals are untouched.
  UCQ u2({Query({Atom::conceptAtom(ind("a"), Concept::atomic("A"))}),
          Query({Atom::conceptAtom(ind("a"), Concept::atomic("B"))})});
  CHECK(u2.disjuncts()[0].terms() == u2.disjuncts()[1].terms());
}

TEST_CASE("a union of unconnected queries becomes a conjunction of unions") {
  // First disjunct has two components, second has one: the conjunction has
  // one union per choice of components, so two of them.
  Query q1({
      Atom::role(v("x"), v("y"), Role("r")),
      Atom::conceptAtom(v("w"), Concept::atomic("A")),
  });
  Query q2({Atom::conceptAtom(v("p"), Concept::atomic("B"))});
  const auto cnf = ucqToCNF(UCQ({q1, q2}));
  REQUIRE(cnf.size() == 2);
  for (const auto& u : cnf) {
    REQUIRE(u.disjuncts().size() == 2);
    for (const auto& d : u.disjuncts()) CHECK(isConnected(d));
  }
  // A union of connected queries is returned whole.
  const auto same = ucqToCNF(UCQ({Query({Atom::role(v("x"), v("y"), Role("r"))})}));
  REQUIRE(same.size() == 1);
  REQUIRE(same[0].disjuncts().size() == 1);
}
