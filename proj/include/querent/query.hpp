#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "querent/kb.hpp"

namespace querent {

class Term {
 public:
  enum class Kind { Individual, Variable };

  Term() : kind_(Kind::Variable) {}
  static Term variable(std::string name) { return Term(Kind::Variable, std::move(name)); }
  static Term individual(std::string name) { return Term(Kind::Individual, std::move(name)); }

  Kind kind() const { return kind_; }
  bool isVariable() const { return kind_ == Kind::Variable; }
  bool isIndividual() const { return kind_ == Kind::Individual; }
  const std::string& name() const { return name_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.name_ < b.name_;
  }

 private:
  Term(Kind k, std::string n) : kind_(k), name_(std::move(n)) {}
  Kind kind_;
  std::string name_;
};

enum class AtomKind { Concept, Role, Eq };

// Query atom. Role atoms are normalized to name orientation at construction;
// equality atoms order their endpoints.
class Atom {
 public:
  static Atom conceptAtom(const Term& t, const Concept& c);
  static Atom role(const Term& from, const Term& to, const Role& r);
  static Atom eq(const Term& a, const Term& b);

  AtomKind kind() const { return kind_; }
  const Concept& conceptValue() const { return concept_; }
  const Role& roleValue() const { return role_; }
  const Term& first() const { return first_; }
  const Term& second() const { return second_; }

  bool mentions(const Term& t) const;
  std::vector<Term> terms() const;
  Atom substituted(const std::map<Term, Term>& sub) const;

  int compare(const Atom& o) const;
  friend bool operator==(const Atom& a, const Atom& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Atom& a, const Atom& b) { return a.compare(b) != 0; }
  friend bool operator<(const Atom& a, const Atom& b) { return a.compare(b) < 0; }

 private:
  Atom() = default;
  AtomKind kind_ = AtomKind::Concept;
  Concept concept_;  // Concept atoms
  Role role_;        // Role atoms
  Term first_;
  Term second_;      // Role/Eq atoms
};

// Non-empty set of atoms with the equivalence closure of its equality atoms
// precomputed. Immutable after construction.
class Query {
 public:
  explicit Query(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term> variables() const;
  std::vector<Term> individuals() const;

  // Representative (minimum) of t's equivalence class.
  const Term& rep(const Term& t) const;
  bool sameClass(const Term& a, const Term& b) const;
  // Classes ordered by representative; members sorted.
  const std::vector<std::vector<Term>>& eqClasses() const;
  const std::vector<Term>& classOf(const Term& t) const;

  // The derived-membership relation: the atom holds in the query up to
  // equality and role inversion.
  bool dinHolds(const Atom& at) const;

  // Role atoms as unordered edges between distinct class representatives.
  std::vector<std::pair<Term, Term>> classEdges() const;
  // Class representatives carrying a role atom loop.
  std::vector<Term> loopClasses() const;

  Query substituted(const std::map<Term, Term>& sub) const;

  friend bool operator==(const Query& a, const Query& b) { return a.atoms_ == b.atoms_; }
  friend bool operator!=(const Query& a, const Query& b) { return !(a == b); }
  friend bool operator<(const Query& a, const Query& b) { return a.atoms_ < b.atoms_; }

 private:
  std::vector<Atom> atoms_;
  std::vector<Term> terms_;
  std::map<Term, Term> rep_;
  std::vector<std::vector<Term>> classes_;
};

// Connected components under role-atom edges; equality-merged terms count as
// one node, and atom sets partition accordingly. Components are ordered by
// their smallest atom.
std::vector<Query> connectedComponents(const Query& q);

bool isConnected(const Query& q);

// A chordless walk of length > 3 through distinct class nodes returning to
// its start; equivalently the simple class graph contains a proper cycle.
// Loops and parallel role atoms do not count.
bool isCyclic(const Query& q);

// Union of conjunctive queries. Disjunct variable namespaces are made
// disjoint on construction; disjunct order is preserved.
class UCQ {
 public:
  UCQ() = default;
  explicit UCQ(std::vector<Query> disjuncts);

  const std::vector<Query>& disjuncts() const { return disjuncts_; }
  bool empty() const { return disjuncts_.empty(); }

  friend bool operator==(const UCQ& a, const UCQ& b) { return a.disjuncts_ == b.disjuncts_; }

 private:
  std::vector<Query> disjuncts_;
};

// Rewrites a UCQ whose disjuncts may be unconnected into a conjunction of
// UCQs of connected queries: one conjunct per choice of component indices.
std::vector<UCQ> ucqToCNF(const UCQ& u);

struct AnswerQuery {
  std::vector<Query> disjuncts;
  std::vector<std::string> answerVariables;
};

}  // namespace querent
