#pragma once

#include "blockade/certificates.hpp"
#include "blockade/graph.hpp"

#include <optional>
#include <variant>

namespace blockade {

// ---- comb-or-sparse-cover outcome ------------------------------------------

struct SmallCover {
    Bitset covered;  // the b-vertices with a neighbour in a
};

struct CombFound {
    Comb comb;
    int k = 0;
};

using CombOutcome = std::variant<SmallCover, CombFound>;

// ---- operations -------------------------------------------------------------

// Anticomponents-to-complete-blockade merge. Requires every anticomponent of g
// to have size < |g|/k; returns a complete blockade of length >= k and width
// >= |g|/k^2 (every block is a union of anticomponents, hence blocks are
// pairwise complete).
Blockade complete_blockade_from_anticomponents(const Graph& g, int k);

// Small covering set A' <= a. Requires a,b disjoint and every vertex of b to
// have >= x*|a| neighbours in a, x in (0,1/2). Deterministic mode: greedy
// max-coverage, |A'| <= ceil(1/x). Randomized mode: floor(1/x) uniform picks,
// up to 64 retries, then greedy fallback. Either way >= |b|/2 of b is covered.
Bitset covering_set(const Graph& g, const Bitset& a, const Bitset& b, const Rat& x,
                    bool randomized = false, uint64_t seed = 0);

// Comb dichotomy: requires a,b nonempty disjoint, every vertex of a with at
// most delta neighbours in b. Returns a verified (k,|b|/k^2)-comb with apexes
// in a and blocks in b when the search finds one, else the small-cover arm
// (|covered| <= 20*sqrt(|b|*delta), compared by squaring). Exhaustive over
// apex subsets when |a| <= 12.
CombOutcome comb_or_sparse_cover(const Graph& g, const Bitset& a, const Bitset& b,
                                 const Rat& delta);

// Anticomplete (2, eta*|g|)-blockade in an eta-sparse P5-free graph with
// |g| >= 1/eta. Tries the proof-order splits (components of g, then of
// g minus a closed neighbourhood, then of the second-neighbourhood walk),
// each via an exact subset-sum grouping of components; falls back to all
// vertices; raises InternalInvariantViolated if nothing verifies.
Blockade anticomplete_pair_sparse(const Graph& g, const Rat& eta);

struct RodlOptions {
    int exhaustive_cap = 18;  // exact optimum up to this order
    long budget = 4000;       // recursion node budget beyond the cap
};

// Best-effort eps-restricted induced subgraph: returns S with g[S]
// eps-restricted, preferring |S| >= target when the search reaches it.
// Exhaustive for small graphs, recursive density splitting otherwise.
Bitset rodl_restricted_subgraph(const Graph& g, const Rat& eps, const Rat& target,
                                const RodlOptions& opts = {});

// Exhaustive oracle used by tests: does a comb with apexes in a, blocks in b
// and width >= |b|/k^2 exist for some apex subset of size k? |a| <= 12.
bool comb_exists_exhaustive(const Graph& g, const Bitset& a, const Bitset& b);

}  // namespace blockade
