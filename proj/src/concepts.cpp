#include "querent/concepts.hpp"

#include <algorithm>
#include <set>

namespace querent {

Concept Concept::make(Node n) { return Concept(std::make_shared<Node>(std::move(n))); }

Concept Concept::top() {
  static const Concept c = make(Node{ConceptKind::Top, "", {}, RoleExpr(), 0});
  return c;
}

Concept Concept::bottom() {
  static const Concept c = make(Node{ConceptKind::Bottom, "", {}, RoleExpr(), 0});
  return c;
}

Concept Concept::atomic(std::string name) {
  return make(Node{ConceptKind::Atomic, std::move(name), {}, RoleExpr(), 0});
}

Concept Concept::negation(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return bottom();
    case ConceptKind::Bottom:
      return top();
    case ConceptKind::Not:
      return c.inner();
    default:
      return make(Node{ConceptKind::Not, "", {c}, RoleExpr(), 0});
  }
}

Concept Concept::conj(std::vector<Concept> parts) {
  std::vector<Concept> flat;
  for (auto& p : parts) {
    if (p.kind() == ConceptKind::And)
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    else if (p.kind() == ConceptKind::Top)
      continue;
    else
      flat.push_back(p);
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  for (const auto& p : flat)
    if (p.kind() == ConceptKind::Bottom) return bottom();
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat.front();
  return make(Node{ConceptKind::And, "", std::move(flat), RoleExpr(), 0});
}

Concept Concept::disj(std::vector<Concept> parts) {
  std::vector<Concept> flat;
  for (auto& p : parts) {
    if (p.kind() == ConceptKind::Or)
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    else if (p.kind() == ConceptKind::Bottom)
      continue;
    else
      flat.push_back(p);
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  for (const auto& p : flat)
    if (p.kind() == ConceptKind::Top) return top();
  if (flat.empty()) return bottom();
  if (flat.size() == 1) return flat.front();
  return make(Node{ConceptKind::Or, "", std::move(flat), RoleExpr(), 0});
}

Concept Concept::some(const RoleExpr& w, const Concept& c) {
  return make(Node{ConceptKind::Some, "", {c}, w, 0});
}

Concept Concept::all(const RoleExpr& w, const Concept& c) {
  return make(Node{ConceptKind::All, "", {c}, w, 0});
}

Concept Concept::atLeast(std::uint32_t n, const RoleExpr& w, const Concept& c) {
  if (n == 0) return top();
  return make(Node{ConceptKind::AtLeast, "", {c}, w, n});
}

Concept Concept::atMost(std::uint32_t n, const RoleExpr& w, const Concept& c) {
  return make(Node{ConceptKind::AtMost, "", {c}, w, n});
}

int Concept::compare(const Concept& o) const {
  if (node_ == o.node_) return 0;
  if (kind() != o.kind()) return kind() < o.kind() ? -1 : 1;
  switch (kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return 0;
    case ConceptKind::Atomic:
      return name().compare(o.name());
    default:
      break;
  }
  if (isQuantifier()) {
    if (count() != o.count()) return count() < o.count() ? -1 : 1;
    const int rc = roleExpr().compare(o.roleExpr());
    if (rc != 0) return rc;
  }
  const auto& a = parts();
  const auto& b = o.parts();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int c = a[i].compare(b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

namespace {

Concept nnfImpl(const Concept& c, bool negated) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return negated ? Concept::bottom() : Concept::top();
    case ConceptKind::Bottom:
      return negated ? Concept::top() : Concept::bottom();
    case ConceptKind::Atomic:
      return negated ? Concept::negation(c) : c;
    case ConceptKind::Not:
      return nnfImpl(c.inner(), !negated);
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> parts;
      parts.reserve(c.parts().size());
      for (const auto& p : c.parts()) parts.push_back(nnfImpl(p, negated));
      const bool conj = (c.kind() == ConceptKind::And) != negated;
      return conj ? Concept::conj(std::move(parts)) : Concept::disj(std::move(parts));
    }
    case ConceptKind::Some:
      return negated ? Concept::all(c.roleExpr(), nnfImpl(c.inner(), true))
                     : Concept::some(c.roleExpr(), nnfImpl(c.inner(), false));
    case ConceptKind::All:
      return negated ? Concept::some(c.roleExpr(), nnfImpl(c.inner(), true))
                     : Concept::all(c.roleExpr(), nnfImpl(c.inner(), false));
    case ConceptKind::AtLeast:
      if (!negated) return Concept::atLeast(c.count(), c.roleExpr(), nnfImpl(c.inner(), false));
      // not(at-least n) = at-most n-1; n is >= 1 after normalization.
      return Concept::atMost(c.count() - 1, c.roleExpr(), nnfImpl(c.inner(), false));
    case ConceptKind::AtMost:
      if (!negated) return Concept::atMost(c.count(), c.roleExpr(), nnfImpl(c.inner(), false));
      return Concept::atLeast(c.count() + 1, c.roleExpr(), nnfImpl(c.inner(), false));
  }
  return c;
}

void collectClosure(const Concept& c, const RoleHierarchy& h, std::set<Concept>& out) {
  if (!out.insert(c).second) return;
  collectClosure(nnfNeg(c), h, out);
  switch (c.kind()) {
    case ConceptKind::And:
    case ConceptKind::Or:
      for (const auto& p : c.parts()) collectClosure(p, h, out);
      break;
    case ConceptKind::Not:
      collectClosure(c.inner(), h, out);
      break;
    case ConceptKind::Some:
    case ConceptKind::AtLeast:
    case ConceptKind::AtMost:
      collectClosure(c.inner(), h, out);
      break;
    case ConceptKind::All: {
      collectClosure(c.inner(), h, out);
      if (c.roleExpr().isPositiveConjunction()) {
        for (const auto& t : tcSet(c.roleExpr().asConjunction(), h))
          collectClosure(Concept::all(RoleExpr(t), c.inner()), h, out);
      }
      break;
    }
    default:
      break;
  }
}

}  // namespace

Concept nnf(const Concept& c) { return nnfImpl(c, false); }

Concept nnfNeg(const Concept& c) { return nnfImpl(c, true); }

std::vector<Concept> closure(const Concept& c, const RoleHierarchy& h) {
  return closure(std::vector<Concept>{c}, h);
}

std::vector<Concept> closure(const std::vector<Concept>& cs, const RoleHierarchy& h) {
  std::set<Concept> out;
  for (const auto& c : cs) collectClosure(nnf(c), h, out);
  return std::vector<Concept>(out.begin(), out.end());
}

}  // namespace querent
