#pragma once

#include "blockade/certificates.hpp"
#include "blockade/graph.hpp"
#include "blockade/profile.hpp"

#include <functional>
#include <optional>

namespace blockade {

enum class R1Kind {
    Sparser,          // S with g[S] sparser than the input bound
    PureBlockade,     // pure (or complete) blockade
    XSparseBlockade,  // x-sparse blockade
    SparsePair,       // X,Y disjoint, Y x-sparse to X
    Semisparse,       // every pair complete or weakly sparse
};

struct Round1Outcome {
    R1Kind kind = R1Kind::Sparser;
    Bitset sparser_set;       // Sparser
    Rat new_sparsity = 0;     // Sparser
    Blockade blockade;        // blockade kinds
    Rat threshold = 0;        // x (XSparse/SparsePair) or the weak-sparsity bound
    Bitset pair_x, pair_y;    // SparsePair
    PairRelationMatrix tags;  // Semisparse
    Certificate cert;
};

// One comb-driven step in a sparse house-free graph: either the graph is
// already twice as sparse, or an upside-down comb with anticonnected blocks
// yields a pure blockade, or a low-degree-to-the-neighbourhood split yields
// an x-sparse pair to iterate on.
Round1Outcome house1_step(const Graph& g, const Rat& x, const Rat& y,
                          const ConstantsProfile& profile);

// Accumulates house1_step's sparse pairs into an x-sparse blockade, stopping
// after ~1/y rounds or when a sparser subgraph / pure blockade appears.
Round1Outcome house2_iterate(const Graph& g, const Rat& x, const Rat& y,
                             const ConstantsProfile& profile);

// Iterative sparsification: descends a geometric grid of sparsity values,
// maintaining a witness subgraph, and converts the terminal state into a pure
// or x-sparse blockade (including the y < x escape partition).
Round1Outcome house3_sparsify(const Graph& g, const Rat& x, const ConstantsProfile& profile);

// Removes the sparsity hypothesis: restricted-subgraph extraction at xi, then
// either the complement branch (anticomplete pair in the complement = complete
// pair here) or house3 on the sparse side.
Round1Outcome house4_blockade(const Graph& g, const Rat& x, const ConstantsProfile& profile);

// Splits one part of a layout: returns a blockade whose blocks are subsets of
// `part`, in host coordinates, or nullopt when no useful split exists.
using BlockFinder =
    std::function<std::optional<Blockade>(const Graph& g, const Bitset& part)>;

// Layout refinement: grows a pattern graph J with parts A_j (J-edges force
// complete pairs) by substituting each split's relation graph for the split
// part, under exact per-step gates (part sizes, power-sum invariant, wrong <=
// x * decided). Emits the parts as a semisparse blockade.
Round1Outcome refine_layout(const Graph& g, const Rat& eps, long d, const BlockFinder& finder,
                            const ConstantsProfile& profile);

// refine_layout driven by house4_blockade at x = eps^(5d).
Round1Outcome epsone_blockade(const Graph& g, const Rat& eps, const ConstantsProfile& profile);

// Remaps a blockade found in an induced subgraph back into host coordinates;
// map[i] is the host vertex behind subgraph index i.
Blockade lift_blockade(const Blockade& b, const std::vector<int>& map, int host_n);
Bitset lift_set(const Bitset& s, const std::vector<int>& map, int host_n);

}  // namespace blockade
