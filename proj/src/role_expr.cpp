#include "querent/role_expr.hpp"

#include <algorithm>

namespace querent {

RoleExpr::RoleExpr(const Role& r)
    : node_(std::make_shared<Node>(Node{Kind::Literal, r, {}})) {}

RoleExpr::RoleExpr(const RoleConjunction& conj) {
  std::vector<RoleExpr> parts;
  parts.reserve(conj.size());
  for (const Role& r : conj.roles()) parts.push_back(RoleExpr(r));
  *this = RoleExpr::conj(std::move(parts));
}

RoleExpr RoleExpr::conj(std::vector<RoleExpr> parts) {
  std::vector<RoleExpr> flat;
  for (auto& p : parts) {
    if (p.kind() == Kind::And)
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    else
      flat.push_back(p);
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.size() == 1) return flat.front();
  return RoleExpr(std::make_shared<Node>(Node{Kind::And, Role(), std::move(flat)}));
}

RoleExpr RoleExpr::disj(std::vector<RoleExpr> parts) {
  std::vector<RoleExpr> flat;
  for (auto& p : parts) {
    if (p.kind() == Kind::Or)
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    else
      flat.push_back(p);
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.size() == 1) return flat.front();
  return RoleExpr(std::make_shared<Node>(Node{Kind::Or, Role(), std::move(flat)}));
}

RoleExpr RoleExpr::neg(const RoleExpr& e) {
  if (e.kind() == Kind::Not) return e.inner();
  return RoleExpr(std::make_shared<Node>(Node{Kind::Not, Role(), {e}}));
}

bool RoleExpr::isPositiveConjunction() const {
  if (kind() == Kind::Literal) return true;
  if (kind() != Kind::And) return false;
  for (const auto& p : parts())
    if (p.kind() != Kind::Literal) return false;
  return true;
}

RoleConjunction RoleExpr::asConjunction() const {
  std::vector<Role> roles;
  if (kind() == Kind::Literal) {
    roles.push_back(literal());
  } else {
    for (const auto& p : parts()) roles.push_back(p.literal());
  }
  return RoleConjunction(std::move(roles));
}

namespace {

void sortUniqueDisjunct(std::vector<RoleLiteral>& d) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
}

// Negation normal form pass: returns DNF of e or of its negation.
std::vector<std::vector<RoleLiteral>> dnfOf(const RoleExpr& e, bool negated) {
  using Disjunct = std::vector<RoleLiteral>;
  switch (e.kind()) {
    case RoleExpr::Kind::Literal:
      return {{RoleLiteral{e.literal(), !negated}}};
    case RoleExpr::Kind::Not:
      return dnfOf(e.inner(), !negated);
    case RoleExpr::Kind::And:
    case RoleExpr::Kind::Or: {
      const bool distribute = (e.kind() == RoleExpr::Kind::And) != negated;
      std::vector<std::vector<Disjunct>> kids;
      for (const auto& p : e.parts()) kids.push_back(dnfOf(p, negated));
      if (!distribute) {
        std::vector<Disjunct> out;
        for (auto& k : kids)
          for (auto& d : k) out.push_back(std::move(d));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }
      std::vector<Disjunct> acc = {{}};
      for (auto& k : kids) {
        std::vector<Disjunct> next;
        for (const auto& base : acc) {
          for (const auto& d : k) {
            Disjunct merged = base;
            merged.insert(merged.end(), d.begin(), d.end());
            sortUniqueDisjunct(merged);
            next.push_back(std::move(merged));
          }
        }
        acc = std::move(next);
      }
      // Drop disjuncts containing a literal and its negation.
      std::vector<Disjunct> out;
      for (auto& d : acc) {
        bool clash = false;
        for (std::size_t i = 0; i + 1 < d.size() && !clash; ++i)
          if (d[i].role == d[i + 1].role && d[i].positive != d[i + 1].positive) clash = true;
        if (!clash) out.push_back(std::move(d));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  return {};
}

}  // namespace

std::vector<std::vector<RoleLiteral>> RoleExpr::dnf() const { return dnfOf(*this, false); }

bool RoleExpr::isSafe() const {
  for (const auto& d : dnf()) {
    bool hasPositive = false;
    for (const auto& lit : d)
      if (lit.positive) {
        hasPositive = true;
        break;
      }
    if (!hasPositive) return false;
  }
  return true;
}

int RoleExpr::compare(const RoleExpr& o) const {
  if (node_ == o.node_) return 0;
  if (kind() != o.kind()) return kind() < o.kind() ? -1 : 1;
  if (kind() == Kind::Literal) {
    if (literal() == o.literal()) return 0;
    return literal() < o.literal() ? -1 : 1;
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

RoleExpr upClose(const RoleConjunction& conj, const RoleHierarchy& h) {
  std::vector<Role> roles;
  for (const Role& r : conj.roles()) {
    const auto supers = h.superRoles(r);
    roles.insert(roles.end(), supers.begin(), supers.end());
  }
  return RoleExpr(RoleConjunction(std::move(roles)));
}

std::vector<RoleConjunction> tcSet(const RoleConjunction& conj, const RoleHierarchy& h) {
  std::vector<std::vector<Role>> perPosition;
  for (const Role& r : conj.roles()) {
    auto ts = h.transitiveSubRoles(r);
    if (ts.empty()) return {};
    perPosition.push_back(std::move(ts));
  }
  std::vector<std::vector<Role>> tuples = {{}};
  for (const auto& options : perPosition) {
    std::vector<std::vector<Role>> next;
    for (const auto& base : tuples)
      for (const Role& t : options) {
        auto tuple = base;
        tuple.push_back(t);
        next.push_back(std::move(tuple));
      }
    tuples = std::move(next);
  }
  std::vector<RoleConjunction> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) out.push_back(RoleConjunction(std::move(t)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace querent
