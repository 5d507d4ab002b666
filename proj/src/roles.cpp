#include "querent/roles.hpp"

#include <algorithm>

namespace querent {

RoleConjunction::RoleConjunction(std::vector<Role> roles) : roles_(std::move(roles)) {
  std::sort(roles_.begin(), roles_.end());
  roles_.erase(std::unique(roles_.begin(), roles_.end()), roles_.end());
}

bool RoleConjunction::contains(const Role& r) const {
  return std::binary_search(roles_.begin(), roles_.end(), r);
}

RoleHierarchy::RoleHierarchy(const RBox& rbox) : rbox_(rbox) {
  std::set<std::string> names;
  for (const auto& inc : rbox.inclusions) {
    names.insert(inc.sub.name());
    names.insert(inc.super.name());
  }
  for (const auto& n : rbox.transitiveNames) names.insert(n);

  for (const auto& n : names) {
    alphabet_.push_back(Role(n, false));
    alphabet_.push_back(Role(n, true));
  }
  std::sort(alphabet_.begin(), alphabet_.end());

  const std::size_t n = alphabet_.size();
  subsumed_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) subsumed_[i][i] = true;
  for (const auto& inc : rbox.inclusions) {
    subsumed_[indexOf(inc.sub)][indexOf(inc.super)] = true;
    subsumed_[indexOf(inv(inc.sub))][indexOf(inv(inc.super))] = true;
  }
  // Floyd-Warshall style closure; the alphabet is small.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (subsumed_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (subsumed_[k][j]) subsumed_[i][j] = true;

  // s is transitive if some r equivalent to s has r or inv(r) declared.
  transitive_.assign(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t r = 0; r < n; ++r) {
      if (!subsumed_[r][s] || !subsumed_[s][r]) continue;
      const Role& rr = alphabet_[r];
      if (rbox.transitiveNames.count(rr.name())) {
        transitive_[s] = true;
        break;
      }
    }
  }
}

int RoleHierarchy::indexOf(const Role& r) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), r);
  if (it == alphabet_.end() || !(*it == r)) return -1;
  return static_cast<int>(it - alphabet_.begin());
}

bool RoleHierarchy::subsumed(const Role& r, const Role& s) const {
  if (r == s) return true;
  const int i = indexOf(r), j = indexOf(s);
  if (i < 0 || j < 0) return false;
  return subsumed_[i][j];
}

std::vector<Role> RoleHierarchy::superRoles(const Role& r) const {
  std::vector<Role> out;
  const int i = indexOf(r);
  if (i < 0) return {r};
  for (std::size_t j = 0; j < alphabet_.size(); ++j)
    if (subsumed_[i][j]) out.push_back(alphabet_[j]);
  return out;
}

std::vector<Role> RoleHierarchy::subRoles(const Role& r) const {
  std::vector<Role> out;
  const int i = indexOf(r);
  if (i < 0) return {r};
  for (std::size_t j = 0; j < alphabet_.size(); ++j)
    if (subsumed_[j][i]) out.push_back(alphabet_[j]);
  return out;
}

bool RoleHierarchy::isTransitive(const Role& s) const {
  const int i = indexOf(s);
  if (i < 0) return false;
  return transitive_[i];
}

std::vector<Role> RoleHierarchy::transitiveRoles() const {
  std::vector<Role> out;
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (transitive_[i]) out.push_back(alphabet_[i]);
  return out;
}

std::vector<Role> RoleHierarchy::transitiveSubRoles(const Role& r) const {
  std::vector<Role> out;
  for (const Role& s : subRoles(r))
    if (isTransitive(s)) out.push_back(s);
  return out;
}

bool RoleHierarchy::isSimple(const Role& r) const {
  return transitiveSubRoles(r).empty();
}

}  // namespace querent
