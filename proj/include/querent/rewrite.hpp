#pragma once

#include <optional>
#include <vector>

#include "querent/query.hpp"

namespace querent {

// Reserved namespace for variables introduced by the rewriting stages.
// The parser rejects user terms starting with '_', so these never clash.
bool isFreshVariable(const Term& t);
Term freshVariable(std::size_t ordinal);  // _v1, _v2, ...

// A query paired with a root splitting. The roots are a sorted, ≈-closed
// term set; candidates are only ever constructed with validated roots.
struct RewriteCandidate {
  Query query;
  std::vector<Term> roots;

  friend bool operator==(const RewriteCandidate& a, const RewriteCandidate& b) {
    return a.query == b.query && a.roots == b.roots;
  }
  friend bool operator<(const RewriteCandidate& a, const RewriteCandidate& b) {
    if (a.query != b.query) return a.query < b.query;
    return a.roots < b.roots;
  }
};

// Witness that a query is tree-shaped: an address in a prefix-closed word
// tree per term, constant on ≈-classes, injective across them, mapping
// role atoms to parent-child pairs and the individual (if any) to the
// root.
struct TreeMapping {
  std::map<Term, std::vector<int>> address;
};

// All ways of identifying terms: the input query plus equality atoms, one
// candidate per partition of the ≈-classes (coarser or equal to the
// input's own). The input itself is the finest one.
std::vector<Query> collapsings(const Query& q);

// Terms reachable from root t by role-atom paths that never pass through
// a root class other than t's own. Contains t's class; ≈-closed.
std::vector<Term> reach(const Query& q, const std::vector<Term>& roots, const Term& t);

// True iff roots is empty, or roots is ≈-closed, contains every
// individual, and the reach sets of distinct root classes are pairwise
// disjoint.
bool isRootSplitting(const Query& q, const std::vector<Term>& roots);

// Atoms whose terms all lie within reach(t), minus loop atoms on t's own
// class. Never empty: a vacuous top-concept atom on t stands in when
// nothing remains.
Query subqueryAt(const Query& q, const std::vector<Term>& roots, const Term& t);

// A witness mapping when one exists. A query admits one iff its class
// graph has no loops and no proper cycles.
std::optional<TreeMapping> treeMapping(const Query& q);

// At most one individual and a tree mapping exists.
bool isTreeShaped(const Query& q);

// Empty roots and tree-shaped, or every root's sub-query is tree-shaped.
bool isForestShaped(const Query& q, const std::vector<Term>& roots);

struct RewriteOptions {
  // Cumulative cap on candidates a stage may emit before deduplication.
  std::size_t candidateBudget = 1000000;
};

// Split stage: per collapsing, role atoms are kept or split into chains
// of two or three atoms over a transitive sub-role, with midpoints drawn
// from the chosen root classes or a fresh pool that joins the roots.
// Every emitted pair carries a valid root splitting; all-keep variants
// are paired with every valid root splitting of the collapsing.
std::vector<RewriteCandidate> splitRewritings(const Query& q, const KB& kb,
                                              const RewriteOptions& opts = {});

// Loop stage: every non-root loop is replaced, per transitive sub-role,
// by a there-and-back pair through an existing term or a fresh variable;
// candidates with a non-root loop admitting no replacement are dropped.
// Root loops and roots pass through unchanged.
std::vector<RewriteCandidate> loopRewritings(const std::vector<RewriteCandidate>& cands,
                                             const KB& kb, const RewriteOptions& opts = {});

// Forest stage: role atoms inside a sub-query (or anywhere when roots are
// empty) are kept or replaced by a chain over a transitive sub-role
// through existing class representatives and a fresh pool; only
// forest-shaped results are retained.
std::vector<RewriteCandidate> forestRewritings(const std::vector<RewriteCandidate>& cands,
                                               const KB& kb, const RewriteOptions& opts = {});

// The composed pipeline: collapse, split, replace loops, forest-rewrite.
std::vector<RewriteCandidate> forestCandidates(const Query& q, const KB& kb,
                                               const RewriteOptions& opts = {});

}  // namespace querent
