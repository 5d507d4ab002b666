#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "querent/role_expr.hpp"

namespace querent {

enum class ConceptKind {
  Top,
  Bottom,
  Atomic,
  Not,
  And,
  Or,
  Some,
  All,
  AtLeast,
  AtMost,
};

// Immutable concept expression with structural equality and a total order.
// Construction normalizes: And/Or flatten, sort, dedupe and absorb their
// units; double negation cancels; at-least 0 collapses to Top.
class Concept {
 public:
  Concept() : Concept(top()) {}

  static Concept top();
  static Concept bottom();
  static Concept atomic(std::string name);
  static Concept negation(const Concept& c);
  static Concept conj(std::vector<Concept> parts);
  static Concept disj(std::vector<Concept> parts);
  static Concept some(const RoleExpr& w, const Concept& c);
  static Concept all(const RoleExpr& w, const Concept& c);
  static Concept atLeast(std::uint32_t n, const RoleExpr& w, const Concept& c);
  static Concept atMost(std::uint32_t n, const RoleExpr& w, const Concept& c);

  ConceptKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<Concept>& parts() const { return node_->parts; }
  const Concept& inner() const { return node_->parts.front(); }
  const RoleExpr& roleExpr() const { return node_->role; }
  std::uint32_t count() const { return node_->count; }

  bool isQuantifier() const {
    const auto k = kind();
    return k == ConceptKind::Some || k == ConceptKind::All ||
           k == ConceptKind::AtLeast || k == ConceptKind::AtMost;
  }

  int compare(const Concept& o) const;
  friend bool operator==(const Concept& a, const Concept& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Concept& a, const Concept& b) { return a.compare(b) != 0; }
  friend bool operator<(const Concept& a, const Concept& b) { return a.compare(b) < 0; }

 private:
  struct Node {
    ConceptKind kind;
    std::string name;            // Atomic
    std::vector<Concept> parts;  // Not: 1, And/Or: >= 2, quantifiers: 1
    RoleExpr role;               // quantifiers
    std::uint32_t count = 0;     // AtLeast/AtMost
  };
  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Concept make(Node n);

  std::shared_ptr<const Node> node_;
};

// Negation normal form: negation occurs only in front of atomic concepts.
// Role expressions are untouched by the push-down.
Concept nnf(const Concept& c);

// nnf of the negation; written with a dot in the literature.
Concept nnfNeg(const Concept& c);

// Smallest set containing c that is closed under sub-concepts, under
// nnf-negation, and, for every universal restriction it contains, under the
// transitive sub-role tuples of the restriction's role conjunction. Input and
// members are in NNF.
std::vector<Concept> closure(const Concept& c, const RoleHierarchy& h);

// Convenience: closure over several concepts at once.
std::vector<Concept> closure(const std::vector<Concept>& cs, const RoleHierarchy& h);

}  // namespace querent
