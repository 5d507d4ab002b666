#include "querent/kb.hpp"

#include <algorithm>
#include <set>

#include "querent/errors.hpp"

namespace querent {

RoleAssertion makeRoleAssertion(const std::string& from, const std::string& to, const Role& r) {
  if (r.isInverse()) return RoleAssertion{to, from, r.name()};
  return RoleAssertion{from, to, r.name()};
}

Inequality makeInequality(const std::string& a, const std::string& b) {
  if (a <= b) return Inequality{a, b};
  return Inequality{b, a};
}

namespace {

template <typename T>
void sortUnique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void validateConceptForKb(const Concept& c, const RoleHierarchy& h) {
  switch (c.kind()) {
    case ConceptKind::Not:
      validateConceptForKb(c.inner(), h);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      for (const auto& p : c.parts()) validateConceptForKb(p, h);
      return;
    case ConceptKind::Some:
    case ConceptKind::All:
    case ConceptKind::AtLeast:
    case ConceptKind::AtMost: {
      if (!c.roleExpr().isPositiveConjunction())
        throw InvalidInput("quantifier role expression must be a conjunction of roles");
      if (c.kind() == ConceptKind::AtLeast || c.kind() == ConceptKind::AtMost) {
        const RoleConjunction conj = c.roleExpr().asConjunction();
        for (const Role& r : conj.roles()) {
          if (!h.isSimple(r))
            throw InvalidInput("number restriction over non-simple role " + r.name());
        }
      }
      validateConceptForKb(c.inner(), h);
      return;
    }
    default:
      return;
  }
}

KB KB::create(std::vector<GCI> tbox, RBox rbox, ABox abox) {
  KB kb{Raw{}};
  sortUnique(tbox);
  sortUnique(rbox.inclusions);
  sortUnique(abox.concepts);
  sortUnique(abox.roles);
  sortUnique(abox.negatedRoles);
  sortUnique(abox.inequalities);

  std::set<std::string> inds;
  for (const auto& a : abox.concepts) inds.insert(a.individual);
  for (const auto& a : abox.roles) {
    inds.insert(a.from);
    inds.insert(a.to);
  }
  for (const auto& a : abox.negatedRoles) {
    inds.insert(a.from);
    inds.insert(a.to);
  }
  for (const auto& a : abox.inequalities) {
    inds.insert(a.a);
    inds.insert(a.b);
  }
  if (inds.empty()) {
    abox.concepts.push_back(ConceptAssertion{kAnonymousIndividual, Concept::top()});
    inds.insert(kAnonymousIndividual);
  }

  kb.tbox_ = std::move(tbox);
  kb.rbox_ = std::move(rbox);
  kb.abox_ = std::move(abox);
  kb.hierarchy_ = RoleHierarchy(kb.rbox_);
  kb.individuals_.assign(inds.begin(), inds.end());

  for (const auto& g : kb.tbox_) {
    validateConceptForKb(g.lhs, kb.hierarchy_);
    validateConceptForKb(g.rhs, kb.hierarchy_);
  }
  for (const auto& a : kb.abox_.concepts) validateConceptForKb(a.concept_, kb.hierarchy_);
  return kb;
}

bool KB::hasIndividual(const std::string& name) const {
  return std::binary_search(individuals_.begin(), individuals_.end(), name);
}

}  // namespace querent
