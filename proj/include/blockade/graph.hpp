#pragma once

#include "blockade/bitset.hpp"
#include "blockade/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace blockade {

// Hard cap on graph order; the whole artifact is desk-scale.
inline constexpr int kMaxVertices = 4096;

// Dense undirected simple graph, one bit-packed adjacency row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    const Bitset& row(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    long edge_count() const;
    int max_degree() const;

    Graph complement() const;

    // Induced subgraph on s; map[i] is the original vertex behind new index i.
    Graph induced(const Bitset& s, std::vector<int>* map = nullptr) const;

    // All-vertex set of this graph.
    Bitset full_set() const;

    // FNV-1a 64 over the sorted edge list (u<v, lexicographic).
    uint64_t edge_hash() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

// ---- built-in patterns ------------------------------------------------

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_empty(int n);
// parts[i] = size of part i; parts are pairwise complete, edgeless inside.
Graph make_complete_multipartite(const std::vector<int>& parts);

Graph pattern_p4();
Graph pattern_p5();
Graph pattern_house();  // complement of P5
Graph pattern_c5();
// Lookup by name: "p4" | "p5" | "house" | "c5".
const Graph& named_pattern(const std::string& name);

// ---- induced copy search ----------------------------------------------

// Exhaustive backtracking with bitset domain filtering. Pattern vertices are
// tried in degree-descending order; candidates lowest-index first, so the
// returned map is deterministic. map[u] = image of pattern vertex u.
std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& pattern);

// Memoized freeness check: pipelines re-verify hereditary preconditions on
// the same hosts many times, and negative searches on large graphs dominate.
bool is_free_of(const Graph& g, const Graph& pattern);

// ---- components --------------------------------------------------------

std::vector<Bitset> components(const Graph& g);
// Connected components of the complement, without materializing it.
std::vector<Bitset> anticomponents(const Graph& g);
std::vector<Bitset> components_within(const Graph& g, const Bitset& domain);
std::vector<Bitset> anticomponents_within(const Graph& g, const Bitset& domain);

// ---- sparsity / density predicates (exact rational comparisons) --------

// max degree <= x*|G|
bool is_x_sparse(const Graph& g, const Rat& x);
// one of G, complement(G) is eps-sparse
bool is_restricted(const Graph& g, const Rat& eps);
// restricted to a vertex subset: predicates on g[s] without copying
bool is_x_sparse_on(const Graph& g, const Bitset& s, const Rat& x);
bool is_restricted_on(const Graph& g, const Bitset& s, const Rat& eps);
// every vertex of b has at most x*|a| neighbours in a; a,b disjoint
bool is_sparse_to(const Graph& g, const Bitset& b, const Bitset& a, const Rat& x);
// edge density between a,b at most x; a,b disjoint and nonempty
bool is_weakly_sparse(const Graph& g, const Bitset& a, const Bitset& b, const Rat& x);
bool is_complete_pair(const Graph& g, const Bitset& a, const Bitset& b);
bool is_anticomplete_pair(const Graph& g, const Bitset& a, const Bitset& b);
bool is_mixed_on(const Graph& g, int v, const Bitset& s);
long edges_between(const Graph& g, const Bitset& a, const Bitset& b);

bool is_clique(const Graph& g, const Bitset& s);
bool is_stable_set(const Graph& g, const Bitset& s);

// ---- I/O ----------------------------------------------------------------

// Whitespace edge list "u v" per line (0/1-based autodetected by minimum
// label) or DIMACS "p edge n m" / "e u v". Format chosen by content.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace blockade
