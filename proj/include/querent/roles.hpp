#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace querent {

// A role is a role name or the inverse of one. Values are immutable and
// totally ordered so they can live in sorted containers.
class Role {
 public:
  Role() = default;
  explicit Role(std::string name, bool inverse = false)
      : name_(std::move(name)), inverse_(inverse) {}

  const std::string& name() const { return name_; }
  bool isInverse() const { return inverse_; }

  Role inverse() const { return Role(name_, !inverse_); }

  friend bool operator==(const Role& a, const Role& b) {
    return a.name_ == b.name_ && a.inverse_ == b.inverse_;
  }
  friend bool operator!=(const Role& a, const Role& b) { return !(a == b); }
  friend bool operator<(const Role& a, const Role& b) {
    if (a.name_ != b.name_) return a.name_ < b.name_;
    return a.inverse_ < b.inverse_;
  }

 private:
  std::string name_;
  bool inverse_ = false;
};

inline Role inv(const Role& r) { return r.inverse(); }

// Non-empty, sorted, duplicate-free set of roles, read as their conjunction.
class RoleConjunction {
 public:
  RoleConjunction() = default;
  explicit RoleConjunction(std::vector<Role> roles);
  explicit RoleConjunction(const Role& r) : roles_{r} {}

  const std::vector<Role>& roles() const { return roles_; }
  bool empty() const { return roles_.empty(); }
  std::size_t size() const { return roles_.size(); }
  bool contains(const Role& r) const;
  bool isSingleton() const { return roles_.size() == 1; }

  friend bool operator==(const RoleConjunction& a, const RoleConjunction& b) {
    return a.roles_ == b.roles_;
  }
  friend bool operator!=(const RoleConjunction& a, const RoleConjunction& b) {
    return !(a == b);
  }
  friend bool operator<(const RoleConjunction& a, const RoleConjunction& b) {
    return a.roles_ < b.roles_;
  }

 private:
  std::vector<Role> roles_;
};

struct RoleInclusion {
  Role sub;
  Role super;

  friend bool operator==(const RoleInclusion& a, const RoleInclusion& b) {
    return a.sub == b.sub && a.super == b.super;
  }
  friend bool operator<(const RoleInclusion& a, const RoleInclusion& b) {
    if (!(a.sub == b.sub)) return a.sub < b.sub;
    return a.super < b.super;
  }
};

// Role box: inclusion axioms plus the set of role names declared transitive.
struct RBox {
  std::vector<RoleInclusion> inclusions;       // sorted, unique
  std::set<std::string> transitiveNames;

  friend bool operator==(const RBox& a, const RBox& b) {
    return a.inclusions == b.inclusions && a.transitiveNames == b.transitiveNames;
  }
};

// Reflexive-transitive closure of the inclusion axioms, closed under
// inverses: r subsumed-by s implies inv(r) subsumed-by inv(s). Also answers
// transitivity and simplicity queries. Built once per knowledge base.
class RoleHierarchy {
 public:
  RoleHierarchy() : RoleHierarchy(RBox{}) {}
  explicit RoleHierarchy(const RBox& rbox);

  // r subsumed-by* s. Roles outside the hierarchy alphabet subsume only
  // themselves.
  bool subsumed(const Role& r, const Role& s) const;

  // All s with r subsumed-by* s (always contains r itself).
  std::vector<Role> superRoles(const Role& r) const;
  // All s with s subsumed-by* r (always contains r itself).
  std::vector<Role> subRoles(const Role& r) const;

  // s is transitive if some role equivalent to s is declared transitive
  // directly or through its inverse.
  bool isTransitive(const Role& s) const;
  std::vector<Role> transitiveRoles() const;

  // Transitive roles subsumed by r; these witness non-simplicity.
  std::vector<Role> transitiveSubRoles(const Role& r) const;

  // r is simple if no transitive role is subsumed by it.
  bool isSimple(const Role& r) const;

  const RBox& rbox() const { return rbox_; }

 private:
  int indexOf(const Role& r) const;  // -1 when outside the alphabet

  RBox rbox_;
  std::vector<Role> alphabet_;                 // sorted
  std::vector<std::vector<bool>> subsumed_;    // subsumed_[i][j]: role i <=* role j
  std::vector<bool> transitive_;
};

}  // namespace querent
