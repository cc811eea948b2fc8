#pragma once

#include "blockade/graph.hpp"
#include "blockade/profile.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace blockade {

// Oracle size caps; exhaustive enumeration vs branch-and-bound.
inline constexpr int kExhaustiveCap = 18;
inline constexpr int kBranchBoundCap = 64;

enum class Family { Cograph, Substitution, SparseRandomFiltered };

std::string family_name(Family f);

struct GeneratorSpec {
    Family family = Family::Cograph;
    int n = 16;
    uint64_t seed = 0;
    bool complement_of = false;  // emit the complement (house-free from P5-free)
    Rat density = Rat(1, 12);    // sparse-random edge probability
    int branching = 3;           // max cotree arity
    long rejection_budget = 400;
    std::string cache_dir = ".blockade-cache";  // P5-free catalogue location
};

// Deterministic in-class generator; every emitted graph is verified against
// its class (cograph: P4-free; substitution: P5-free; sparse-random: house-
// free; complement flag: complement of a P5-free draw, verified house-free).
Graph generate(const GeneratorSpec& spec);

// Substitutes h for vertex v of g: h's vertices inherit v's outside
// neighbourhood. P5-free (and any substitution-closed class) is preserved.
Graph substitute_vertex(const Graph& g, int v, const Graph& h);

// Catalogue of all P5-free graphs on 1..6 vertices, built by exhaustive
// filtration and cached in a versioned binary file under cache_dir.
const std::vector<Graph>& p5_free_catalogue(const std::string& cache_dir);

// Exact (max clique, max stable set). Branch-and-bound with a greedy
// colouring bound up to kBranchBoundCap; exhaustive mode up to kExhaustiveCap.
std::pair<int, int> brute_max_hom(const Graph& g, bool exhaustive = false);

// Largest S with g[S] eps-restricted; exhaustive over subsets, n <= 18.
Bitset brute_best_restricted(const Graph& g, const Rat& eps);

struct HarnessInstance {
    GeneratorSpec spec;
    std::string pipeline;  // "polynomial_rodl" | "eh_extract"
};

struct HarnessOptions {
    bool include_timing = true;  // false pins millis to 0 for byte-identical output
    int threads = 0;             // 0 = hardware concurrency
};

// One CSV row per instance (ordered by instance index) plus summary rows with
// the median and minimum exponent. Columns: instance_id, family, n, seed,
// pipeline, result_kind, set_size, exponent, certificate_ok, millis.
std::string exponent_harness(const std::vector<HarnessInstance>& batch,
                             const ConstantsProfile& profile, const HarnessOptions& opts = {});

}  // namespace blockade
