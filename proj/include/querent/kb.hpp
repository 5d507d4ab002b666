#pragma once

#include <string>
#include <vector>

#include "querent/concepts.hpp"

namespace querent {

struct GCI {
  Concept lhs;
  Concept rhs;

  friend bool operator==(const GCI& a, const GCI& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
  friend bool operator<(const GCI& a, const GCI& b) {
    if (a.lhs != b.lhs) return a.lhs < b.lhs;
    return a.rhs < b.rhs;
  }
};

struct ConceptAssertion {
  std::string individual;
  Concept concept_;

  friend bool operator==(const ConceptAssertion& a, const ConceptAssertion& b) {
    return a.individual == b.individual && a.concept_ == b.concept_;
  }
  friend bool operator<(const ConceptAssertion& a, const ConceptAssertion& b) {
    if (a.individual != b.individual) return a.individual < b.individual;
    return a.concept_ < b.concept_;
  }
};

// Role assertions are stored in name orientation: an assertion along an
// inverse role is flipped at construction.
struct RoleAssertion {
  std::string from;
  std::string to;
  std::string roleName;

  friend bool operator==(const RoleAssertion& a, const RoleAssertion& b) {
    return a.from == b.from && a.to == b.to && a.roleName == b.roleName;
  }
  friend bool operator<(const RoleAssertion& a, const RoleAssertion& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.roleName < b.roleName;
  }
};

struct Inequality {
  std::string a;  // a < b lexicographically
  std::string b;

  friend bool operator==(const Inequality& x, const Inequality& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const Inequality& x, const Inequality& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

struct ABox {
  std::vector<ConceptAssertion> concepts;
  std::vector<RoleAssertion> roles;
  std::vector<RoleAssertion> negatedRoles;
  std::vector<Inequality> inequalities;

  bool empty() const {
    return concepts.empty() && roles.empty() && negatedRoles.empty() && inequalities.empty();
  }
  friend bool operator==(const ABox& a, const ABox& b) {
    return a.concepts == b.concepts && a.roles == b.roles &&
           a.negatedRoles == b.negatedRoles && a.inequalities == b.inequalities;
  }
};

RoleAssertion makeRoleAssertion(const std::string& from, const std::string& to, const Role& r);
Inequality makeInequality(const std::string& a, const std::string& b);

// Knowledge base with its role hierarchy precomputed. create() sorts and
// dedupes, seeds an anonymous individual when the ABox names none, and
// rejects non-simple roles under number restrictions as well as role
// expressions beyond positive conjunctions.
class KB {
 public:
  KB() : KB(create({}, RBox{}, ABox{})) {}

  static KB create(std::vector<GCI> tbox, RBox rbox, ABox abox);

  const std::vector<GCI>& tbox() const { return tbox_; }
  const RBox& rbox() const { return rbox_; }
  const ABox& abox() const { return abox_; }
  const RoleHierarchy& hierarchy() const { return hierarchy_; }
  const std::vector<std::string>& individuals() const { return individuals_; }
  bool hasIndividual(const std::string& name) const;

  friend bool operator==(const KB& a, const KB& b) {
    return a.tbox_ == b.tbox_ && a.rbox_ == b.rbox_ && a.abox_ == b.abox_;
  }

 private:
  struct Raw {};
  explicit KB(Raw) {}

  std::vector<GCI> tbox_;
  RBox rbox_;
  ABox abox_;
  RoleHierarchy hierarchy_;
  std::vector<std::string> individuals_;
};

// Throws InvalidInput when a number restriction in c uses a non-simple role
// or any quantifier carries a role expression beyond a positive conjunction.
void validateConceptForKb(const Concept& c, const RoleHierarchy& h);

// Name of the individual seeded into empty ABoxes.
inline const char* kAnonymousIndividual = "_i0";

}  // namespace querent
