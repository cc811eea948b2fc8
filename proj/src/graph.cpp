#include "blockade/graph.hpp"

#include "blockade/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace blockade {

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0 || n > kMaxVertices)
        throw precondition_violated("graph order out of range: " + std::to_string(n));
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw precondition_violated("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw precondition_violated("edge endpoint out of range: " + std::to_string(u) + "-" +
                                    std::to_string(v));
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[u].reset(v);
    adj_[v].reset(u);
}

long Graph::edge_count() const {
    long deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int v = 0; v < n_; ++v) {
        c.adj_[v] = adj_[v].complemented();
        c.adj_[v].reset(v);
    }
    return c;
}

Graph Graph::induced(const Bitset& s, std::vector<int>* map) const {
    std::vector<int> verts = s.to_vector();
    Graph h(int(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) h.add_edge(int(i), int(j));
    if (map) *map = std::move(verts);
    return h;
}

Bitset Graph::full_set() const {
    Bitset b(n_);
    b.fill();
    return b;
}

uint64_t Graph::edge_hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](uint64_t x) {
        for (int k = 0; k < 8; ++k) {
            h ^= (x >> (8 * k)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) {
            mix(uint64_t(u));
            mix(uint64_t(v));
        }
    return h;
}

// ---- patterns ----------------------------------------------------------

Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    Graph g = make_path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_empty(int n) { return Graph(n); }

Graph make_complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    int off_i = 0;
    for (size_t a = 0; a < parts.size(); ++a) {
        int off_j = off_i + parts[a];
        for (size_t b = a + 1; b < parts.size(); ++b) {
            for (int i = 0; i < parts[a]; ++i)
                for (int j = 0; j < parts[b]; ++j) g.add_edge(off_i + i, off_j + j);
            off_j += parts[b];
        }
        off_i += parts[a];
    }
    return g;
}

Graph pattern_p4() { return make_path(4); }
Graph pattern_p5() { return make_path(5); }
Graph pattern_house() { return make_path(5).complement(); }
Graph pattern_c5() { return make_cycle(5); }

const Graph& named_pattern(const std::string& name) {
    static const std::map<std::string, Graph> patterns = {
        {"p4", pattern_p4()},
        {"p5", pattern_p5()},
        {"house", pattern_house()},
        {"c5", pattern_c5()},
    };
    auto it = patterns.find(name);
    if (it == patterns.end()) throw parse_error("unknown pattern: " + name);
    return it->second;
}

// ---- induced copy search -----------------------------------------------

namespace {

struct CopySearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;     // pattern vertices, degree-descending
    std::vector<int> image;     // image[u] for pattern vertex u, -1 if unset
    Bitset used;

    CopySearch(const Graph& g_, const Graph& h_)
        : g(g_), h(h_), image(h_.size(), -1), used(g_.size()) {
        order.resize(h.size());
        for (int i = 0; i < h.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return h.degree(a) > h.degree(b);
        });
    }

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int u = order[depth];
        // Domain: consistent with every already-placed pattern vertex.
        Bitset dom = used.complemented();
        for (size_t k = 0; k < depth; ++k) {
            int w = order[k];
            if (h.has_edge(u, w))
                dom &= g.row(image[w]);
            else
                dom -= g.row(image[w]);
        }
        for (int v = dom.first(); v >= 0; v = dom.next(v)) {
            image[u] = v;
            used.set(v);
            if (extend(depth + 1)) return true;
            used.reset(v);
            image[u] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& pattern) {
    if (pattern.size() > 8)
        throw precondition_violated("pattern larger than 8 vertices");
    if (pattern.size() == 0) return std::vector<int>{};
    if (pattern.size() > g.size()) return std::nullopt;
    // An induced copy of H in G is an induced copy of complement(H) in
    // complement(G) on the same vertices; searching the sparser side prunes
    // far better on dense inputs.
    if (2 * g.edge_count() > long(g.size()) * (g.size() - 1) / 2) {
        const Graph cg = g.complement();
        const Graph cp = pattern.complement();
        CopySearch s(cg, cp);
        if (s.extend(0)) return s.image;
        return std::nullopt;
    }
    CopySearch s(g, pattern);
    if (s.extend(0)) return s.image;
    return std::nullopt;
}

bool is_free_of(const Graph& g, const Graph& pattern) {
    // Bounded memo keyed by content hashes; hereditary preconditions re-check
    // the same host repeatedly across nested operations.
    static std::mutex mu;
    static std::unordered_map<uint64_t, bool> memo;
    uint64_t key = g.edge_hash() ^ (uint64_t(g.size()) * 0x9e3779b97f4a7c15ULL);
    key ^= pattern.edge_hash() * 0xc2b2ae3d27d4eb4fULL + uint64_t(pattern.size());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    bool free = !find_induced_copy(g, pattern).has_value();
    {
        std::lock_guard<std::mutex> lock(mu);
        if (memo.size() > 200000) memo.clear();
        memo.emplace(key, free);
    }
    return free;
}

// ---- components ----------------------------------------------------------

namespace {

// BFS partition of `domain`; neighbor row of v is adj(v) or its complement.
std::vector<Bitset> partition_bfs(const Graph& g, const Bitset& domain, bool complemented) {
    std::vector<Bitset> comps;
    Bitset left = domain;
    while (left.any()) {
        int start = left.first();
        Bitset comp(g.size());
        Bitset frontier(g.size());
        frontier.set(start);
        left.reset(start);
        while (frontier.any()) {
            comp |= frontier;
            Bitset nxt(g.size());
            for (int v = frontier.first(); v >= 0; v = frontier.next(v)) {
                Bitset nb = complemented ? (g.row(v).complemented() - comp) : g.row(v);
                if (complemented) nb.reset(v);
                nb &= left;
                nxt |= nb;
            }
            left -= nxt;
            frontier = nxt;
        }
        comps.push_back(comp);
    }
    return comps;
}

}  // namespace

std::vector<Bitset> components(const Graph& g) { return partition_bfs(g, g.full_set(), false); }
std::vector<Bitset> anticomponents(const Graph& g) { return partition_bfs(g, g.full_set(), true); }
std::vector<Bitset> components_within(const Graph& g, const Bitset& domain) {
    return partition_bfs(g, domain, false);
}
std::vector<Bitset> anticomponents_within(const Graph& g, const Bitset& domain) {
    return partition_bfs(g, domain, true);
}

// ---- predicates ------------------------------------------------------------

bool is_x_sparse(const Graph& g, const Rat& x) {
    return is_x_sparse_on(g, g.full_set(), x);
}

bool is_x_sparse_on(const Graph& g, const Bitset& s, const Rat& x) {
    long sz = s.count();
    Rat bound = x * sz;
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (Rat(g.row(v).intersection_count(s)) > bound) return false;
    return true;
}

bool is_restricted(const Graph& g, const Rat& eps) {
    return is_restricted_on(g, g.full_set(), eps);
}

bool is_restricted_on(const Graph& g, const Bitset& s, const Rat& eps) {
    long sz = s.count();
    Rat bound = eps * sz;
    bool sparse = true, cosparse = true;
    for (int v = s.first(); v >= 0 && (sparse || cosparse); v = s.next(v)) {
        long d = g.row(v).intersection_count(s);
        if (Rat(d) > bound) sparse = false;
        if (Rat(sz - 1 - d) > bound) cosparse = false;
    }
    return sparse || cosparse;
}

bool is_sparse_to(const Graph& g, const Bitset& b, const Bitset& a, const Rat& x) {
    if (a.intersects(b)) throw precondition_violated("is_sparse_to: sets overlap");
    Rat bound = x * a.count();
    for (int v = b.first(); v >= 0; v = b.next(v))
        if (Rat(g.row(v).intersection_count(a)) > bound) return false;
    return true;
}

long edges_between(const Graph& g, const Bitset& a, const Bitset& b) {
    long e = 0;
    for (int v = a.first(); v >= 0; v = a.next(v)) e += g.row(v).intersection_count(b);
    return e;
}

bool is_weakly_sparse(const Graph& g, const Bitset& a, const Bitset& b, const Rat& x) {
    if (a.intersects(b)) throw precondition_violated("is_weakly_sparse: sets overlap");
    long na = a.count(), nb = b.count();
    if (na == 0 || nb == 0) throw precondition_violated("is_weakly_sparse: empty side");
    return Rat(edges_between(g, a, b)) <= x * na * nb;
}

bool is_complete_pair(const Graph& g, const Bitset& a, const Bitset& b) {
    if (a.intersects(b)) throw precondition_violated("is_complete_pair: sets overlap");
    for (int v = a.first(); v >= 0; v = a.next(v))
        if (!b.is_subset_of(g.row(v))) return false;
    return true;
}

bool is_anticomplete_pair(const Graph& g, const Bitset& a, const Bitset& b) {
    if (a.intersects(b)) throw precondition_violated("is_anticomplete_pair: sets overlap");
    for (int v = a.first(); v >= 0; v = a.next(v))
        if (g.row(v).intersects(b)) return false;
    return true;
}

bool is_mixed_on(const Graph& g, int v, const Bitset& s) {
    if (s.test(v)) throw precondition_violated("is_mixed_on: vertex inside set");
    int d = g.row(v).intersection_count(s);
    return d > 0 && d < s.count();
}

bool is_clique(const Graph& g, const Bitset& s) {
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        Bitset rest = s;
        rest.reset(v);
        if (!rest.is_subset_of(g.row(v))) return false;
    }
    return true;
}

bool is_stable_set(const Graph& g, const Bitset& s) {
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (g.row(v).intersects(s)) return false;
    return true;
}

// ---- I/O --------------------------------------------------------------------

namespace {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        char t;
        iss >> t;
        if (t == 'p') {
            std::string fmt;
            long m;
            if (!(iss >> fmt >> n >> m) || (fmt != "edge" && fmt != "edges" && fmt != "col"))
                throw parse_error("bad DIMACS header at line " + std::to_string(lineno));
        } else if (t == 'e') {
            int u, v;
            if (!(iss >> u >> v))
                throw parse_error("bad DIMACS edge at line " + std::to_string(lineno));
            edges.emplace_back(u, v);
        }
    }
    if (n < 0) throw parse_error("missing DIMACS header");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error("DIMACS edge endpoint out of range");
        if (u != v) g.add_edge(u - 1, v - 1);
    }
    return g;
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<long, long>> edges;
    long minv = -1, maxv = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream iss(line);
        long u, v;
        if (!(iss >> u)) continue;  // blank line
        if (!(iss >> v)) throw parse_error("bad edge at line " + std::to_string(lineno));
        if (u < 0 || v < 0) throw parse_error("negative vertex at line " + std::to_string(lineno));
        edges.emplace_back(u, v);
        minv = (minv < 0) ? std::min(u, v) : std::min({minv, u, v});
        maxv = std::max({maxv, u, v});
    }
    if (edges.empty()) return Graph(0);
    long base = (minv >= 1) ? 1 : 0;  // 1-based iff no zero label appears
    long n = maxv - base + 1;
    if (n > kMaxVertices) throw parse_error("graph exceeds size cap");
    Graph g{int(n)};
    for (auto [u, v] : edges)
        if (u != v) g.add_edge(int(u - base), int(v - base));
    return g;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    // DIMACS if any line starts with 'p' or 'c'
    for (size_t i = 0; i < content.size();) {
        size_t e = content.find('\n', i);
        if (e == std::string::npos) e = content.size();
        if (e > i && (content[i] == 'p' || content[i] == 'c')) {
            std::istringstream s(content);
            return read_dimacs(s);
        }
        i = e + 1;
    }
    std::istringstream s(content);
    return read_edge_list(s);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_graph(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (int u = 0; u < g.size(); ++u)
        for (int v = g.row(u).next(u); v >= 0; v = g.row(u).next(v))
            out << u << " " << v << "\n";
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.size() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.size(); ++u)
        for (int v = g.row(u).next(u); v >= 0; v = g.row(u).next(v))
            out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_dimacs(out, g);
}

}  // namespace blockade
