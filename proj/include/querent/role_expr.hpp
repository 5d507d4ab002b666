#pragma once

#include <memory>
#include <vector>

#include "querent/roles.hpp"

namespace querent {

struct RoleLiteral {
  Role role;
  bool positive = true;

  friend bool operator==(const RoleLiteral& a, const RoleLiteral& b) {
    return a.role == b.role && a.positive == b.positive;
  }
  friend bool operator<(const RoleLiteral& a, const RoleLiteral& b) {
    if (!(a.role == b.role)) return a.role < b.role;
    return a.positive < b.positive;
  }
};

// Boolean combination of roles. And/Or children are flattened, sorted and
// deduplicated; double negation cancels at construction. Quantifiers carry
// these; plain SHIQ input restricts them to positive conjunctions.
class RoleExpr {
 public:
  enum class Kind { Literal, And, Or, Not };

  RoleExpr() : RoleExpr(Role()) {}
  explicit RoleExpr(const Role& r);
  explicit RoleExpr(const RoleConjunction& conj);

  static RoleExpr conj(std::vector<RoleExpr> parts);
  static RoleExpr disj(std::vector<RoleExpr> parts);
  static RoleExpr neg(const RoleExpr& e);

  Kind kind() const { return node_->kind; }
  const Role& literal() const { return node_->literal; }
  const std::vector<RoleExpr>& parts() const { return node_->parts; }
  const RoleExpr& inner() const { return node_->parts.front(); }

  bool isPositiveConjunction() const;
  // Only valid on positive conjunctions (and bare literals).
  RoleConjunction asConjunction() const;

  // Disjunctive normal form: one sorted literal vector per disjunct.
  std::vector<std::vector<RoleLiteral>> dnf() const;
  // Safe: every DNF disjunct contains at least one positive literal.
  bool isSafe() const;

  int compare(const RoleExpr& o) const;
  friend bool operator==(const RoleExpr& a, const RoleExpr& b) { return a.compare(b) == 0; }
  friend bool operator!=(const RoleExpr& a, const RoleExpr& b) { return a.compare(b) != 0; }
  friend bool operator<(const RoleExpr& a, const RoleExpr& b) { return a.compare(b) < 0; }

 private:
  struct Node {
    Kind kind;
    Role literal;                 // Kind::Literal
    std::vector<RoleExpr> parts;  // And/Or: >= 2, Not: 1
  };
  explicit RoleExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

// The closure of every conjunct under its super-roles; in models of the
// hierarchy the extension is unchanged.
RoleExpr upClose(const RoleConjunction& conj, const RoleHierarchy& h);

// All per-position tuples of transitive sub-roles, deduplicated as sets.
std::vector<RoleConjunction> tcSet(const RoleConjunction& conj, const RoleHierarchy& h);

}  // namespace querent
