#include "querent/query.hpp"

#include <algorithm>
#include <set>

#include "querent/errors.hpp"

namespace querent {

Atom Atom::conceptAtom(const Term& t, const Concept& c) {
  Atom a;
  a.kind_ = AtomKind::Concept;
  a.first_ = t;
  a.concept_ = c;
  return a;
}

Atom Atom::role(const Term& from, const Term& to, const Role& r) {
  Atom a;
  a.kind_ = AtomKind::Role;
  if (r.isInverse()) {
    a.first_ = to;
    a.second_ = from;
    a.role_ = r.inverse();
  } else {
    a.first_ = from;
    a.second_ = to;
    a.role_ = r;
  }
  return a;
}

Atom Atom::eq(const Term& x, const Term& y) {
  Atom a;
  a.kind_ = AtomKind::Eq;
  a.first_ = std::min(x, y);
  a.second_ = std::max(x, y);
  return a;
}

bool Atom::mentions(const Term& t) const {
  if (first_ == t) return true;
  return kind_ != AtomKind::Concept && second_ == t;
}

std::vector<Term> Atom::terms() const {
  if (kind_ == AtomKind::Concept) return {first_};
  if (first_ == second_) return {first_};
  return {first_, second_};
}

Atom Atom::substituted(const std::map<Term, Term>& sub) const {
  const auto apply = [&](const Term& t) {
    auto it = sub.find(t);
    return it == sub.end() ? t : it->second;
  };
  switch (kind_) {
    case AtomKind::Concept:
      return Atom::conceptAtom(apply(first_), concept_);
    case AtomKind::Role:
      return Atom::role(apply(first_), apply(second_), role_);
    case AtomKind::Eq:
      return Atom::eq(apply(first_), apply(second_));
  }
  return *this;
}

int Atom::compare(const Atom& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_ ? -1 : 1;
  if (first_ != o.first_) return first_ < o.first_ ? -1 : 1;
  switch (kind_) {
    case AtomKind::Concept:
      return concept_.compare(o.concept_);
    case AtomKind::Role:
      if (second_ != o.second_) return second_ < o.second_ ? -1 : 1;
      if (role_ == o.role_) return 0;
      return role_ < o.role_ ? -1 : 1;
    case AtomKind::Eq:
      if (second_ == o.second_) return 0;
      return second_ < o.second_ ? -1 : 1;
  }
  return 0;
}

namespace {

class UnionFind {
 public:
  void add(const Term& t) { parent_.emplace(t, t); }
  Term find(const Term& t) {
    auto it = parent_.find(t);
    if (it == parent_.end()) return t;
    if (it->second == t) return t;
    Term root = find(it->second);
    parent_[t] = root;
    return root;
  }
  void unite(const Term& a, const Term& b) {
    Term ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;  // smaller term wins as representative
  }

 private:
  std::map<Term, Term> parent_;
};

}  // namespace

Query::Query(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (atoms_.empty()) throw InvalidInput("query must contain at least one atom");

  std::set<Term> termSet;
  for (const auto& at : atoms_)
    for (const auto& t : at.terms()) termSet.insert(t);
  terms_.assign(termSet.begin(), termSet.end());

  UnionFind uf;
  for (const auto& t : terms_) uf.add(t);
  for (const auto& at : atoms_)
    if (at.kind() == AtomKind::Eq) uf.unite(at.first(), at.second());

  std::map<Term, std::vector<Term>> byRep;
  for (const auto& t : terms_) {
    const Term r = uf.find(t);
    rep_[t] = r;
    byRep[r].push_back(t);
  }
  for (auto& [r, members] : byRep) classes_.push_back(std::move(members));
}

std::vector<Term> Query::variables() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.isVariable()) out.push_back(t);
  return out;
}

std::vector<Term> Query::individuals() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.isIndividual()) out.push_back(t);
  return out;
}

const Term& Query::rep(const Term& t) const {
  auto it = rep_.find(t);
  return it == rep_.end() ? t : it->second;
}

bool Query::sameClass(const Term& a, const Term& b) const { return rep(a) == rep(b); }

const std::vector<std::vector<Term>>& Query::eqClasses() const { return classes_; }

const std::vector<Term>& Query::classOf(const Term& t) const {
  const Term& r = rep(t);
  for (const auto& cls : classes_)
    if (cls.front() == r) return cls;
  static const std::vector<Term> empty;
  return empty;
}

bool Query::dinHolds(const Atom& at) const {
  switch (at.kind()) {
    case AtomKind::Eq:
      return sameClass(at.first(), at.second());
    case AtomKind::Concept: {
      const Term& r = rep(at.first());
      for (const auto& a : atoms_)
        if (a.kind() == AtomKind::Concept && a.conceptValue() == at.conceptValue() &&
            rep(a.first()) == r)
          return true;
      return false;
    }
    case AtomKind::Role: {
      const Term& r1 = rep(at.first());
      const Term& r2 = rep(at.second());
      for (const auto& a : atoms_)
        if (a.kind() == AtomKind::Role && a.roleValue() == at.roleValue() &&
            rep(a.first()) == r1 && rep(a.second()) == r2)
          return true;
      return false;
    }
  }
  return false;
}

std::vector<std::pair<Term, Term>> Query::classEdges() const {
  std::set<std::pair<Term, Term>> edges;
  for (const auto& a : atoms_) {
    if (a.kind() != AtomKind::Role) continue;
    Term x = rep(a.first());
    Term y = rep(a.second());
    if (x == y) continue;
    if (y < x) std::swap(x, y);
    edges.emplace(x, y);
  }
  return std::vector<std::pair<Term, Term>>(edges.begin(), edges.end());
}

std::vector<Term> Query::loopClasses() const {
  std::set<Term> loops;
  for (const auto& a : atoms_)
    if (a.kind() == AtomKind::Role && rep(a.first()) == rep(a.second()))
      loops.insert(rep(a.first()));
  return std::vector<Term>(loops.begin(), loops.end());
}

Query Query::substituted(const std::map<Term, Term>& sub) const {
  std::vector<Atom> atoms;
  atoms.reserve(atoms_.size());
  for (const auto& a : atoms_) atoms.push_back(a.substituted(sub));
  return Query(std::move(atoms));
}

std::vector<Query> connectedComponents(const Query& q) {
  UnionFind uf;
  for (const auto& cls : q.eqClasses()) uf.add(cls.front());
  for (const auto& [x, y] : q.classEdges()) uf.unite(x, y);

  std::map<Term, std::vector<Atom>> groups;
  for (const auto& a : q.atoms()) groups[uf.find(q.rep(a.first()))].push_back(a);

  std::vector<Query> out;
  for (auto& [root, atoms] : groups) out.push_back(Query(std::move(atoms)));
  std::sort(out.begin(), out.end());
  return out;
}

bool isConnected(const Query& q) { return connectedComponents(q).size() == 1; }

bool isCyclic(const Query& q) {
  UnionFind uf;
  for (const auto& cls : q.eqClasses()) uf.add(cls.front());
  for (const auto& [x, y] : q.classEdges()) {
    if (uf.find(x) == uf.find(y)) return true;
    uf.unite(x, y);
  }
  return false;
}

UCQ::UCQ(std::vector<Query> disjuncts) {
  std::set<std::string> used;
  for (std::size_t i = 0; i < disjuncts.size(); ++i) {
    std::map<Term, Term> renaming;
    for (const auto& t : disjuncts[i].terms()) {
      if (!t.isVariable()) continue;
      if (!used.count(t.name())) {
        used.insert(t.name());
        continue;
      }
      std::string fresh;
      for (std::size_t k = i + 1;; ++k) {
        fresh = t.name() + "~" + std::to_string(k);
        if (!used.count(fresh)) break;
      }
      used.insert(fresh);
      renaming[t] = Term::variable(fresh);
    }
    disjuncts_.push_back(renaming.empty() ? disjuncts[i] : disjuncts[i].substituted(renaming));
  }
}

std::vector<UCQ> ucqToCNF(const UCQ& u) {
  std::vector<std::vector<Query>> components;
  components.reserve(u.disjuncts().size());
  for (const auto& q : u.disjuncts()) components.push_back(connectedComponents(q));

  std::vector<std::vector<Query>> tuples = {{}};
  for (const auto& comps : components) {
    std::vector<std::vector<Query>> next;
    for (const auto& base : tuples)
      for (const auto& c : comps) {
        auto tuple = base;
        tuple.push_back(c);
        next.push_back(std::move(tuple));
      }
    tuples = std::move(next);
  }

  std::vector<UCQ> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) out.push_back(UCQ(std::move(t)));
  return out;
}

}  // namespace querent
