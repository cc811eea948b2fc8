#pragma once

#include "blockade/certificates.hpp"
#include "blockade/graph.hpp"
#include "blockade/profile.hpp"
#include "blockade/round1.hpp"

#include <functional>

namespace blockade {

enum class R2Kind {
    SparseSubset,                    // S with g[S] sparser than the input bound
    CompleteBlockade,                // pairwise-complete blockade
    AnticompletePair,                // X, Y disjoint with no edges between
    CompleteOrAnticompleteBlockade,  // every pair complete, or every pair anticomplete
    Restricted,                      // S with g[S] eps-restricted
    HomSet,                          // clique or stable set
};

struct Round2Outcome {
    R2Kind kind = R2Kind::Restricted;
    Bitset set;               // SparseSubset / Restricted / HomSet
    Rat threshold = 0;        // sparsity or eps
    Blockade blockade;        // blockade kinds
    Bitset pair_x, pair_y;    // AnticompletePair
    std::string homset_kind;  // "clique" | "stable"
    Certificate cert;
};

// One blockade-densification step in a y-sparse house-free graph: a sparser
// subset, a complete blockade harvested from a semisparse layout via sampled
// anticonnected cores, or an anticomplete pair from a low-mixedness block.
Round2Outcome house6_step(const Graph& g, const Rat& y, const ConstantsProfile& profile,
                          uint64_t seed);

// Accumulates house6_step's anticomplete pairs at parameter y^(1/2) into an
// anticomplete blockade, or forwards a sparser subset / complete blockade.
Round2Outcome house7_iterate(const Graph& g, const Rat& y, const ConstantsProfile& profile,
                             uint64_t seed);

// Endgame dichotomy for a house-free graph: an x-restricted induced subgraph
// of size >= x^a|g|, or a complete-or-anticomplete blockade of length in
// [2, 1/x]. Drops all sparsity hypotheses.
Round2Outcome house_final(const Graph& g, const Rat& x, const ConstantsProfile& profile,
                          uint64_t seed);

// Cotree recursion: in a P4-free graph, stable sets add across a disconnected
// split and cliques add across an anticonnected split, giving a clique or
// stable set of size >= ceil(sqrt(n)).
Round2Outcome cograph_clique_or_stable(const Graph& j, const ConstantsProfile& profile);

// Supplies, for an induced subgraph, either a Restricted escape or a
// complete-or-anticomplete blockade to substitute into the cograph layout.
using CoBlockadeFinder = std::function<Round2Outcome(const Graph& f)>;

// Cograph-layout loop: maintain a cograph pattern J and parts with the
// power-sum invariant sum |A_j|^(1/a) >= |g|^(1/a); substitute each blockade's
// complete/edgeless relation graph, then take a clique or stable set of J and
// trim its parts into an eps-restricted set.
Round2Outcome blocks_extract(const Graph& g, const Rat& eps, long a,
                             const CoBlockadeFinder& finder, const ConstantsProfile& profile);

// eps-restricted induced subgraph of a house-free graph, house_final driving
// blocks_extract; achieved size recorded against the eps^(3a)|g| target.
Round2Outcome polynomial_rodl(const Graph& g, const Rat& eps, const ConstantsProfile& profile,
                              uint64_t seed);

// Clique or stable set extractor. P4-free inputs take the cotree path; house-
// free inputs run the restricted-subgraph recursion at eps = 1/4; all other
// inputs fall back to verified greedy growth. The output is always an exactly
// verified clique or stable set.
Round2Outcome eh_extract(const Graph& g, const ConstantsProfile& profile, uint64_t seed);

}  // namespace blockade
