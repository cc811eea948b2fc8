#pragma once

#include "blockade/graph.hpp"
#include "blockade/profile.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace blockade {

// ---- blockades -----------------------------------------------------------

struct Blockade {
    std::vector<Bitset> blocks;  // pairwise disjoint sets over the host graph
    int declared_length = 0;
    Rat declared_width = 0;

    int length() const { return int(blocks.size()); }
    int min_block_size() const;
    // blocks pairwise disjoint; length >= declared_length; every block size
    // >= declared_width (exact rational comparison)
    bool structurally_valid(int host_n, std::string* why = nullptr) const;
};

enum class PairRelation { Complete, Anticomplete, Sparse, WeaklySparse, Mixed };

std::string pair_relation_name(PairRelation r);

// One tag per ordered pair i<j. Complete/anticomplete take precedence over
// the sparse tags; Sparse means B_j is x-sparse to B_i (the directed
// definition); Mixed only when nothing else applies.
struct PairRelationMatrix {
    int length = 0;
    Rat threshold = 0;
    std::vector<PairRelation> tags;  // row-major upper triangle, i<j

    PairRelation at(int i, int j) const;  // requires i < j
};

PairRelationMatrix classify_pairs(const Graph& g, const Blockade& b, const Rat& x);

// ---- combs ---------------------------------------------------------------

struct Comb {
    std::vector<int> apexes;
    std::vector<Bitset> blocks;
    int length() const { return int(apexes.size()); }
    bool valid(const Graph& g, std::string* why = nullptr) const;
};

// ---- layouts ---------------------------------------------------------------

// Pattern graph J plus disjoint nonempty parts A_j. J-edges force complete
// pairs in the host. Decided pairs are cross-part pairs among covered
// vertices; wrong pairs are adjacencies contradicting a J-non-edge.
struct Layout {
    Graph pattern;
    std::vector<Bitset> parts;
    long decided_count = 0;
    long wrong_count = 0;

    // Recomputes both counts from scratch.
    std::pair<long, long> recount(const Graph& host) const;
    // J-edge pairs complete, parts disjoint/nonempty, counts consistent.
    bool valid(const Graph& host, std::string* why = nullptr) const;
};

// ---- certificates -----------------------------------------------------------

enum class CertKind {
    RestrictedSubgraph,
    BlockadeCert,
    CombCert,
    AnticompletePair,
    HomSet,
    SparseSubset,
};

enum class BlockadeKind { Pure, Complete, Anticomplete, XSparse, Semisparse };

std::string cert_kind_name(CertKind k);
std::string blockade_kind_name(BlockadeKind k);
CertKind cert_kind_from_name(const std::string& s);
BlockadeKind blockade_kind_from_name(const std::string& s);

struct Claim {
    std::string property;
    std::map<std::string, std::string> params;
};

// Machine-checkable record of a lemma's conclusion. Every field the checker
// uses is re-derived from the graph alone; provenance fields are audit trail.
struct Certificate {
    int version = 1;
    std::string lemma_id;
    std::string profile_name;
    std::map<std::string, Rat> profile_entries;

    CertKind kind = CertKind::RestrictedSubgraph;
    BlockadeKind blockade_kind = BlockadeKind::Pure;  // for BlockadeCert
    std::string homset_kind;                          // "clique" | "stable"

    std::vector<std::vector<int>> blocks;  // vertex lists; [S], [X,Y], or blockade blocks
    std::vector<int> apexes;               // CombCert only
    std::vector<std::pair<int, int>> pattern_edges;

    Rat threshold = 0;       // eps / x / y depending on kind
    Rat declared_width = 0;  // blockade kinds and pair kinds
    int declared_length = 0;

    std::vector<Claim> claims;  // informational audit trail
    uint64_t graph_hash = 0;

    void add_claim(const std::string& property,
                   std::initializer_list<std::pair<std::string, std::string>> params = {});
};

struct Verdict {
    bool accepted = false;
    bool structural_error = false;  // malformed certificate, not a property failure
    std::vector<std::string> failures;
};

Verdict verify_certificate(const Certificate& c, const Graph& g);

// JSON serialization; key order is fixed (alphabetical), no timestamps.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);
void write_certificate_file(const std::string& path, const Certificate& c);
Certificate read_certificate_file(const std::string& path);

// Helpers for building certificates out of pipeline structures.
Certificate make_blockade_cert(const Graph& g, const Blockade& b, BlockadeKind kind,
                               const Rat& threshold, const std::string& lemma_id,
                               const ConstantsProfile& profile);
Certificate make_set_cert(const Graph& g, CertKind kind, const Bitset& s, const Rat& threshold,
                          const std::string& lemma_id, const ConstantsProfile& profile);
Certificate make_homset_cert(const Graph& g, const Bitset& s, const std::string& homset_kind,
                             const std::string& lemma_id, const ConstantsProfile& profile);
Certificate make_anticomplete_pair_cert(const Graph& g, const Bitset& x, const Bitset& y,
                                        const Rat& declared_width, const std::string& lemma_id,
                                        const ConstantsProfile& profile);
Certificate make_comb_cert(const Graph& g, const Comb& comb, const Rat& declared_width,
                           const std::string& lemma_id, const ConstantsProfile& profile);

}  // namespace blockade
