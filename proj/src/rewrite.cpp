#include "querent/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "querent/errors.hpp"

namespace querent {

namespace {

constexpr const char* kFreshPrefix = "_v";

std::vector<Term> classReps(const Query& q) {
  std::vector<Term> reps;
  for (const auto& cls : q.eqClasses()) reps.push_back(cls.front());
  return reps;
}

std::set<Term> rootRepSet(const Query& q, const std::vector<Term>& roots) {
  std::set<Term> reps;
  for (const Term& t : roots) reps.insert(q.rep(t));
  return reps;
}

std::size_t freshOrdinalOf(const Term& t) {
  const std::string& n = t.name();
  std::size_t v = 0;
  for (std::size_t i = 2; i < n.size(); ++i) v = v * 10 + static_cast<std::size_t>(n[i] - '0');
  return v;
}

std::size_t nextFreshOrdinal(const Query& q) {
  std::size_t next = 1;
  for (const Term& t : q.terms())
    if (isFreshVariable(t)) next = std::max(next, freshOrdinalOf(t) + 1);
  return next;
}

// Renames the fresh variables of (query, roots) to _v1.._vk, choosing the
// assignment whose atom vector is lexicographically least so isomorphic
// candidates collide.
RewriteCandidate canonicalCandidate(const Query& q, std::vector<Term> roots) {
  std::vector<Term> fresh;
  for (const Term& t : q.terms())
    if (isFreshVariable(t)) fresh.push_back(t);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (fresh.empty()) return RewriteCandidate{q, std::move(roots)};

  const std::size_t k = fresh.size();
  auto apply = [&](const std::vector<std::size_t>& perm) {
    std::map<Term, Term> sub;
    for (std::size_t i = 0; i < k; ++i) sub[fresh[i]] = freshVariable(perm[i] + 1);
    Query q2 = q.substituted(sub);
    std::vector<Term> r2;
    for (const Term& t : roots) {
      auto it = sub.find(t);
      r2.push_back(it == sub.end() ? t : it->second);
    }
    std::sort(r2.begin(), r2.end());
    r2.erase(std::unique(r2.begin(), r2.end()), r2.end());
    return RewriteCandidate{std::move(q2), std::move(r2)};
  };

  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  if (k > 5) return apply(perm);
  std::optional<RewriteCandidate> best;
  do {
    RewriteCandidate c = apply(perm);
    if (!best || c < *best) best = std::move(c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

struct Emitter {
  std::set<RewriteCandidate> out;
  std::size_t budget;

  void add(const Query& q, const std::vector<Term>& roots) {
    if (out.size() >= budget)
      throw BudgetExceeded("rewriting candidate budget exhausted");
    out.insert(canonicalCandidate(q, roots));
  }

  std::vector<RewriteCandidate> take() {
    return std::vector<RewriteCandidate>(out.begin(), out.end());
  }
};

// Stored role atoms grouped by role name and endpoint classes; a stage
// choice replaces a whole group at once.
struct Orbit {
  std::string role;
  Term from, to;  // class representatives
  std::vector<Atom> atoms;
};

std::vector<Orbit> roleOrbits(const Query& q) {
  std::map<std::tuple<std::string, Term, Term>, std::vector<Atom>> groups;
  for (const Atom& at : q.atoms())
    if (at.kind() == AtomKind::Role)
      groups[{at.roleValue().name(), q.rep(at.first()), q.rep(at.second())}].push_back(at);
  std::vector<Orbit> orbits;
  for (auto& [key, atoms] : groups)
    orbits.push_back(Orbit{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                           std::move(atoms)});
  return orbits;
}

}  // namespace

bool isFreshVariable(const Term& t) {
  return t.isVariable() && t.name().size() > 2 && t.name().rfind(kFreshPrefix, 0) == 0 &&
         std::all_of(t.name().begin() + 2, t.name().end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

Term freshVariable(std::size_t ordinal) {
  return Term::variable(kFreshPrefix + std::to_string(ordinal));
}

std::vector<Query> collapsings(const Query& q) {
  const std::size_t m = q.eqClasses().size();
  const std::vector<Term> reps = classReps(q);
  std::vector<Query> out;
  std::vector<std::size_t> block(m, 0);

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == m) {
      std::vector<Atom> atoms = q.atoms();
      std::map<std::size_t, Term> first;
      for (std::size_t j = 0; j < m; ++j) {
        auto it = first.find(block[j]);
        if (it == first.end())
          first.emplace(block[j], reps[j]);
        else
          atoms.push_back(Atom::eq(it->second, reps[j]));
      }
      out.push_back(Query(std::move(atoms)));
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Term> reach(const Query& q, const std::vector<Term>& roots, const Term& t) {
  const std::set<Term> rootReps = rootRepSet(q, roots);
  const Term start = q.rep(t);

  std::multimap<Term, Term> adj;
  for (const auto& [a, b] : q.classEdges()) {
    adj.emplace(a, b);
    adj.emplace(b, a);
  }

  std::set<Term> visited{start};
  std::vector<Term> frontier{start};
  while (!frontier.empty()) {
    const Term u = frontier.back();
    frontier.pop_back();
    auto range = adj.equal_range(u);
    for (auto it = range.first; it != range.second; ++it) {
      const Term& v = it->second;
      if (visited.count(v)) continue;
      if (rootReps.count(v) && !(v == start)) continue;
      visited.insert(v);
      frontier.push_back(v);
    }
  }

  std::vector<Term> out;
  for (const Term& rep : visited) {
    const auto& cls = q.classOf(rep);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool isRootSplitting(const Query& q, const std::vector<Term>& roots) {
  if (roots.empty()) return q.individuals().empty();

  std::set<Term> rs(roots.begin(), roots.end());
  for (const Term& i : q.individuals())
    if (!rs.count(i)) return false;
  for (const Term& r : roots)
    for (const Term& m : q.classOf(r))
      if (!rs.count(m)) return false;

  const std::set<Term> reps = rootRepSet(q, roots);
  std::vector<std::set<Term>> reaches;
  for (const Term& rep : reps) {
    const auto r = reach(q, roots, rep);
    reaches.emplace_back(r.begin(), r.end());
  }
  for (std::size_t i = 0; i < reaches.size(); ++i)
    for (std::size_t j = i + 1; j < reaches.size(); ++j)
      for (const Term& t : reaches[i])
        if (reaches[j].count(t)) return false;
  return true;
}

Query subqueryAt(const Query& q, const std::vector<Term>& roots, const Term& t) {
  const auto within = reach(q, roots, t);
  const std::set<Term> in(within.begin(), within.end());
  const Term tr = q.rep(t);

  std::vector<Atom> atoms;
  for (const Atom& at : q.atoms()) {
    bool inside = true;
    for (const Term& x : at.terms())
      if (!in.count(x)) inside = false;
    if (!inside) continue;
    if (at.kind() == AtomKind::Role && q.rep(at.first()) == tr && q.rep(at.second()) == tr)
      continue;
    atoms.push_back(at);
  }
  if (atoms.empty()) atoms.push_back(Atom::conceptAtom(tr, Concept::top()));
  return Query(std::move(atoms));
}

std::optional<TreeMapping> treeMapping(const Query& q) {
  if (!q.loopClasses().empty()) return std::nullopt;
  if (isCyclic(q)) return std::nullopt;
  const auto inds = q.individuals();
  for (const Term& i : inds)
    if (!q.sameClass(i, inds.front())) return std::nullopt;

  const std::vector<Term> reps = classReps(q);
  std::multimap<Term, Term> adj;
  for (const auto& [a, b] : q.classEdges()) {
    adj.emplace(a, b);
    adj.emplace(b, a);
  }

  const Term root = inds.empty() ? reps.front() : q.rep(inds.front());
  std::map<Term, std::vector<int>> word;
  std::vector<Term> order;

  auto bfsFrom = [&](const Term& start, std::vector<int> base) {
    word[start] = std::move(base);
    order.push_back(start);
    for (std::size_t qi = order.size() - 1; qi < order.size(); ++qi) {
      const Term u = order[qi];
      int child = 0;
      auto range = adj.equal_range(u);
      std::set<Term> nbrs;
      for (auto it = range.first; it != range.second; ++it) nbrs.insert(it->second);
      for (const Term& v : nbrs) {
        if (word.count(v)) continue;
        std::vector<int> w = word[u];
        w.push_back(child++);
        word[v] = std::move(w);
        order.push_back(v);
      }
    }
  };

  bfsFrom(root, {});
  int extra = 1000;  // disconnected pieces hang under the root, far from real children
  for (const Term& rep : reps)
    if (!word.count(rep)) bfsFrom(rep, {extra++});

  TreeMapping tm;
  for (const auto& cls : q.eqClasses())
    for (const Term& t : cls) tm.address[t] = word[cls.front()];
  return tm;
}

bool isTreeShaped(const Query& q) {
  if (q.individuals().size() > 1) return false;
  return treeMapping(q).has_value();
}

bool isForestShaped(const Query& q, const std::vector<Term>& roots) {
  if (roots.empty()) return isTreeShaped(q);
  for (const Term& rep : rootRepSet(q, roots))
    if (!isTreeShaped(subqueryAt(q, roots, rep))) return false;
  return true;
}

namespace {

// Root subset enumeration works at class level; queries stay small, so a
// bitmask over classes is plenty.
std::vector<std::vector<Term>> rootChoices(const Query& q, std::size_t maxClasses,
                                           bool requireValid) {
  const auto& classes = q.eqClasses();
  const std::size_t m = classes.size();
  if (m > 16) throw BudgetExceeded("too many term classes for root enumeration");

  std::vector<std::size_t> indClasses;
  for (std::size_t i = 0; i < m; ++i)
    for (const Term& t : classes[i])
      if (t.isIndividual()) {
        indClasses.push_back(i);
        break;
      }

  std::vector<std::vector<Term>> out;
  for (std::size_t mask = 0; mask < (1u << m); ++mask) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) ++count;
    if (count > maxClasses) continue;
    bool coversInds = true;
    for (std::size_t i : indClasses)
      if (!(mask & (1u << i))) coversInds = false;
    if (!coversInds) continue;
    std::vector<Term> roots;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i))
        roots.insert(roots.end(), classes[i].begin(), classes[i].end());
    std::sort(roots.begin(), roots.end());
    if (requireValid && !isRootSplitting(q, roots)) continue;
    out.push_back(std::move(roots));
  }
  return out;
}

}  // namespace

std::vector<RewriteCandidate> splitRewritings(const Query& q, const KB& kb,
                                              const RewriteOptions& opts) {
  if (!isConnected(q)) throw InvalidInput("split rewriting expects a connected query");
  Emitter em{{}, opts.candidateBudget};
  const std::size_t maxRoots = kb.individuals().size();

  for (const Query& qc : collapsings(q)) {
    // Keep everything: pair the collapsing with every valid root splitting,
    // of any size, so later grounding sees all alignments.
    for (const auto& roots : rootChoices(qc, qc.eqClasses().size(), true))
      em.add(qc, roots);

    // Actual splits. Midpoints land on root elements, so they are drawn
    // from the chosen root classes plus fresh variables that join the
    // roots; a grounding maps root classes injectively into the
    // individuals, which caps the useful root classes at their count.
    const auto orbits = roleOrbits(qc);
    const std::size_t freshBase = nextFreshOrdinal(qc);
    for (const auto& seed : rootChoices(qc, maxRoots, false)) {
      const std::set<Term> seedReps = rootRepSet(qc, seed);
      for (std::size_t k = 0; seedReps.size() + k <= maxRoots; ++k) {
        std::vector<Term> pool(seedReps.begin(), seedReps.end());
        for (std::size_t f = 0; f < k; ++f) pool.push_back(freshVariable(freshBase + f));

        std::vector<Atom> chosen;
        std::set<Term> usedFresh;
        bool anySplit = false;

        std::function<void(std::size_t)> rec = [&](std::size_t oi) {
          if (oi == orbits.size()) {
            if (!anySplit || usedFresh.size() != k) return;
            std::vector<Atom> atoms = chosen;
            for (const Atom& at : qc.atoms())
              if (at.kind() != AtomKind::Role) atoms.push_back(at);
            Query qs(atoms);
            std::vector<Term> roots(seed);
            for (const Term& f : usedFresh) roots.push_back(f);
            std::sort(roots.begin(), roots.end());
            if (isRootSplitting(qs, roots)) em.add(qs, roots);
            return;
          }
          const Orbit& ob = orbits[oi];
          const std::size_t keepAt = chosen.size();
          // keep
          chosen.insert(chosen.end(), ob.atoms.begin(), ob.atoms.end());
          rec(oi + 1);
          chosen.resize(keepAt);
          // loops stay for the loop stage; root crossings never help them
          if (ob.from == ob.to) return;
          const bool wasSplit = anySplit;
          for (const Role& s : kb.hierarchy().transitiveSubRoles(Role(ob.role))) {
            for (const Term& u : pool) {
              auto touch = [&](const Term& x) {
                if (isFreshVariable(x) && !qc.rep_has(x)) {}
              };
              (void)touch;
              const bool newU = isFreshVariable(u) && !usedFresh.count(u) &&
                                !std::binary_search(qc.terms().begin(), qc.terms().end(), u);
              chosen.push_back(Atom::role(ob.from, u, s));
              chosen.push_back(Atom::role(u, ob.to, s));
              if (newU) usedFresh.insert(u);
              anySplit = true;
              rec(oi + 1);
              if (newU) usedFresh.erase(u);
              chosen.resize(keepAt);
              for (const Term& u2 : pool) {
                const bool newU1 = isFreshVariable(u) && !usedFresh.count(u) &&
                                   !std::binary_search(qc.terms().begin(), qc.terms().end(), u);
                if (newU1) usedFresh.insert(u);
                const bool newU2 = isFreshVariable(u2) && !usedFresh.count(u2) &&
                                   !std::binary_search(qc.terms().begin(), qc.terms().end(), u2);
                if (newU2) usedFresh.insert(u2);
                chosen.push_back(Atom::role(ob.from, u, s));
                chosen.push_back(Atom::role(u, u2, s));
                chosen.push_back(Atom::role(u2, ob.to, s));
                rec(oi + 1);
                chosen.resize(keepAt);
                if (newU2) usedFresh.erase(u2);
                if (newU1) usedFresh.erase(u);
              }
              anySplit = wasSplit || false;
            }
          }
          anySplit = wasSplit;
        };
        rec(0);
      }
    }
  }
  return em.take();
}

std::vector<RewriteCandidate> loopRewritings(const std::vector<RewriteCandidate>& cands,
                                             const KB& kb, const RewriteOptions& opts) {
  Emitter em{{}, opts.candidateBudget};
  for (const auto& cand : cands) {
    const Query& q0 = cand.query;
    const std::set<Term> rootReps = rootRepSet(q0, cand.roots);

    std::vector<Orbit> loops;
    std::vector<Atom> fixed;
    for (const Orbit& ob : roleOrbits(q0)) {
      if (ob.from == ob.to && !rootReps.count(ob.from))
        loops.push_back(ob);
      else
        fixed.insert(fixed.end(), ob.atoms.begin(), ob.atoms.end());
    }
    for (const Atom& at : q0.atoms())
      if (at.kind() != AtomKind::Role) fixed.push_back(at);

    if (loops.empty()) {
      em.add(q0, cand.roots);
      continue;
    }

    const std::size_t freshBase = nextFreshOrdinal(q0);
    std::vector<Atom> chosen;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t li,
                                                            std::size_t freshUsed) {
      if (li == loops.size()) {
        std::vector<Atom> atoms = fixed;
        atoms.insert(atoms.end(), chosen.begin(), chosen.end());
        Query ql(atoms);
        if (isRootSplitting(ql, cand.roots)) em.add(ql, cand.roots);
        return;
      }
      const Orbit& ob = loops[li];
      std::vector<Term> pool;
      for (const Term& rep : classReps(q0))
        if (!(rep == ob.from)) pool.push_back(rep);
      pool.push_back(freshVariable(freshBase + freshUsed));

      const std::size_t mark = chosen.size();
      for (const Role& s : kb.hierarchy().transitiveSubRoles(Role(ob.role))) {
        for (const Term& t2 : pool) {
          const bool isNewFresh = isFreshVariable(t2) && freshOrdinalOf(t2) >= freshBase;
          chosen.push_back(Atom::role(ob.from, t2, s));
          chosen.push_back(Atom::role(t2, ob.from, s));
          rec(li + 1, freshUsed + (isNewFresh ? 1 : 0));
          chosen.resize(mark);
        }
      }
    };
    rec(0, 0);
  }
  return em.take();
}

namespace {

// Sound partial check used while choosing forest chains: violations only
// ever grow as atoms are added, so a branch whose current atom set already
// breaks the forest conditions can be abandoned.
bool partialForestViolation(const std::vector<Atom>& atoms, const std::set<Term>& rootReps,
                            const std::map<Term, Term>& rep) {
  auto repOf = [&](const Term& t) {
    auto it = rep.find(t);
    return it == rep.end() ? t : it->second;
  };

  std::map<Term, Term> parent;
  std::function<Term(Term)> find = [&](Term x) {
    while (true) {
      auto it = parent.find(x);
      if (it == parent.end() || it->second == x) return x;
      x = it->second;
    }
  };
  // per non-root component: attachments root -> one allowed node
  std::map<Term, std::map<Term, Term>> attach;
  std::set<std::pair<Term, Term>> seenEdges;

  for (const Atom& at : atoms) {
    if (at.kind() != AtomKind::Role) continue;
    Term a = repOf(at.first()), b = repOf(at.second());
    if (a == b) {
      if (!rootReps.count(a)) return true;  // loop off the roots
      continue;
    }
    Term lo = std::min(a, b), hi = std::max(a, b);
    if (!seenEdges.insert({lo, hi}).second) continue;  // parallel edge

    const bool ra = rootReps.count(a) > 0, rb = rootReps.count(b) > 0;
    if (ra && rb) continue;  // ground-level edge
    if (ra || rb) {
      const Term& root = ra ? a : b;
      const Term& node = ra ? b : a;
      Term c = find(node);
      auto& att = attach[c];
      auto it = att.find(root);
      if (it == att.end()) {
        if (!att.empty()) return true;  // second root on one tree
        att.emplace(root, node);
      } else if (!(it->second == node)) {
        return true;  // two attachment points: a cycle through the root
      }
      continue;
    }
    Term ca = find(a), cb = find(b);
    if (ca == cb) return true;  // cycle avoiding the roots
    // merge, folding attachment maps
    parent[ca] = cb;
    auto ita = attach.find(ca);
    if (ita != attach.end()) {
      auto& dst = attach[cb];
      for (const auto& [root, node] : ita->second) {
        auto it = dst.find(root);
        if (it == dst.end()) {
          if (!dst.empty()) return true;
          dst.emplace(root, node);
        } else if (!(it->second == node)) {
          return true;
        }
      }
      attach.erase(ita);
    }
  }
  return false;
}

}  // namespace

std::vector<RewriteCandidate> forestRewritings(const std::vector<RewriteCandidate>& cands,
                                               const KB& kb, const RewriteOptions& opts) {
  Emitter em{{}, opts.candidateBudget};
  std::size_t work = 0;
  const std::size_t workBudget = opts.candidateBudget * 4;

  for (const auto& cand : cands) {
    const Query& q0 = cand.query;
    const std::set<Term> rootReps = rootRepSet(q0, cand.roots);

    // Which stored role atoms may be chain-replaced: those inside some
    // root's sub-query, or all of them when there are no roots.
    std::set<Atom> replaceable;
    if (cand.roots.empty()) {
      for (const Atom& at : q0.atoms())
        if (at.kind() == AtomKind::Role) replaceable.insert(at);
    } else {
      for (const Term& rep : rootReps)
        for (const Atom& at : subqueryAt(q0, cand.roots, rep).atoms())
          if (at.kind() == AtomKind::Role) replaceable.insert(at);
    }

    std::vector<Orbit> flex;
    std::vector<Atom> fixed;
    for (const Orbit& ob : roleOrbits(q0)) {
      if (replaceable.count(ob.atoms.front()))
        flex.push_back(ob);
      else
        fixed.insert(fixed.end(), ob.atoms.begin(), ob.atoms.end());
    }
    for (const Atom& at : q0.atoms())
      if (at.kind() != AtomKind::Role) fixed.push_back(at);

    const std::size_t nVars = q0.variables().size();
    const std::size_t maxChain = nVars;      // atoms per chain
    const std::size_t freshBase = nextFreshOrdinal(q0);

    std::vector<Term> pool = classReps(q0);
    for (std::size_t f = 0; f < nVars; ++f) pool.push_back(freshVariable(freshBase + f));

    std::map<Term, Term> repMap;
    for (const Term& t : q0.terms()) repMap.emplace(t, q0.rep(t));

    std::vector<Atom> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t oi) {
      if (++work > workBudget)
        throw BudgetExceeded("rewriting candidate budget exhausted");
      {
        std::vector<Atom> sofar = fixed;
        sofar.insert(sofar.end(), chosen.begin(), chosen.end());
        if (partialForestViolation(sofar, rootReps, repMap)) return;
      }
      if (oi == flex.size()) {
        std::vector<Atom> atoms = fixed;
        atoms.insert(atoms.end(), chosen.begin(), chosen.end());
        Query qf(atoms);
        if (isRootSplitting(qf, cand.roots) && isForestShaped(qf, cand.roots))
          em.add(qf, cand.roots);
        return;
      }
      const Orbit& ob = flex[oi];
      const std::size_t mark = chosen.size();
      // keep
      chosen.insert(chosen.end(), ob.atoms.begin(), ob.atoms.end());
      rec(oi + 1);
      chosen.resize(mark);
      // chains over a transitive sub-role
      for (const Role& s : kb.hierarchy().transitiveSubRoles(Role(ob.role))) {
        std::vector<Term> interior;
        std::function<void()> grow = [&]() {
          // close the chain: interior.back() (or from) -> to
          const Term& last = interior.empty() ? ob.from : interior.back();
          if (!(last == ob.to) && interior.size() + 1 >= 2 &&
              interior.size() + 1 <= maxChain) {
            const std::size_t m2 = chosen.size();
            Term prev = ob.from;
            for (const Term& t : interior) {
              chosen.push_back(Atom::role(prev, t, s));
              prev = t;
            }
            chosen.push_back(Atom::role(prev, ob.to, s));
            rec(oi + 1);
            chosen.resize(m2);
          }
          if (interior.size() + 1 >= maxChain) return;
          for (const Term& t : pool) {
            const Term& last2 = interior.empty() ? ob.from : interior.back();
            if (t == last2) continue;  // consecutive repeat
            interior.push_back(t);
            grow();
            interior.pop_back();
          }
        };
        grow();
      }
    };
    rec(0);
  }
  return em.take();
}

std::vector<RewriteCandidate> forestCandidates(const Query& q, const KB& kb,
                                               const RewriteOptions& opts) {
  return forestRewritings(loopRewritings(splitRewritings(q, kb, opts), kb, opts), kb, opts);
}

}  // namespace querent
