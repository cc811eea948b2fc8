#include "blockade/lab.hpp"

#include "blockade/certificates.hpp"
#include "blockade/errors.hpp"
#include "blockade/rng.hpp"
#include "blockade/round2.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace blockade {

std::string family_name(Family f) {
    switch (f) {
        case Family::Cograph: return "cograph";
        case Family::Substitution: return "substitution";
        case Family::SparseRandomFiltered: return "sparse-random";
    }
    return "?";
}

// ---- substitution ------------------------------------------------------------

Graph substitute_vertex(const Graph& g, int v, const Graph& h) {
    const int n = g.size(), m = h.size();
    Graph out(n - 1 + m);
    // old vertices keep their index if < v, shift down by one if > v
    auto idx = [&](int u) { return u < v ? u : u - 1; };
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (u != v && w != v && g.has_edge(u, w)) out.add_edge(idx(u), idx(w));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j)
            if (h.has_edge(i, j)) out.add_edge(n - 1 + i, n - 1 + j);
        for (int u = 0; u < n; ++u)
            if (u != v && g.has_edge(u, v)) out.add_edge(n - 1 + i, idx(u));
    }
    return out;
}

// ---- P5-free catalogue ---------------------------------------------------------

namespace {

constexpr char kCatalogueMagic[] = "BLKCATv1";
constexpr int kCatalogueMaxN = 6;

uint16_t pack_graph(const Graph& g) {
    uint16_t mask = 0;
    int bit = 0;
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j, ++bit)
            if (g.has_edge(i, j)) mask |= uint16_t(1u << bit);
    return mask;
}

Graph unpack_graph(int n, uint16_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1u << bit)) g.add_edge(i, j);
    return g;
}

std::vector<Graph> build_catalogue() {
    std::vector<Graph> cat;
    const Graph p5 = pattern_p5();
    for (int n = 1; n <= kCatalogueMaxN; ++n) {
        const int bits = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
            Graph g = unpack_graph(n, uint16_t(mask));
            if (is_free_of(g, p5)) cat.push_back(std::move(g));
        }
    }
    return cat;
}

bool load_catalogue(const std::string& path, std::vector<Graph>* out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[8];
    in.read(magic, 8);
    if (!in || std::string(magic, 8) != kCatalogueMagic) return false;
    uint32_t count = 0;
    in.read(reinterpret_cast<char*>(&count), 4);
    if (!in || count == 0 || count > 2'000'000) return false;
    out->clear();
    for (uint32_t i = 0; i < count; ++i) {
        uint8_t n;
        uint16_t mask;
        in.read(reinterpret_cast<char*>(&n), 1);
        in.read(reinterpret_cast<char*>(&mask), 2);
        if (!in || n < 1 || n > kCatalogueMaxN) return false;
        out->push_back(unpack_graph(n, mask));
    }
    return true;
}

void save_catalogue(const std::string& path, const std::vector<Graph>& cat) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return;  // cache is best-effort
    out.write(kCatalogueMagic, 8);
    uint32_t count = uint32_t(cat.size());
    out.write(reinterpret_cast<const char*>(&count), 4);
    for (const Graph& g : cat) {
        uint8_t n = uint8_t(g.size());
        uint16_t mask = pack_graph(g);
        out.write(reinterpret_cast<const char*>(&n), 1);
        out.write(reinterpret_cast<const char*>(&mask), 2);
    }
}

}  // namespace

const std::vector<Graph>& p5_free_catalogue(const std::string& cache_dir) {
    static std::vector<Graph> cat;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!cat.empty()) return cat;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    const std::string path = (std::filesystem::path(cache_dir) / "p5free-le6.v1.bin").string();
    if (!load_catalogue(path, &cat)) {
        cat = build_catalogue();
        save_catalogue(path, cat);
    }
    return cat;
}

// ---- generator -----------------------------------------------------------------

namespace {

Graph disjoint_union(const std::vector<Graph>& parts, bool join) {
    int total = 0;
    for (const auto& p : parts) total += p.size();
    Graph out(total);
    int off = 0;
    std::vector<int> offsets;
    for (const auto& p : parts) {
        offsets.push_back(off);
        for (int i = 0; i < p.size(); ++i)
            for (int j = i + 1; j < p.size(); ++j)
                if (p.has_edge(i, j)) out.add_edge(off + i, off + j);
        off += p.size();
    }
    if (join)
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = a + 1; b < parts.size(); ++b)
                for (int i = 0; i < parts[a].size(); ++i)
                    for (int j = 0; j < parts[b].size(); ++j)
                        out.add_edge(offsets[a] + i, offsets[b] + j);
    return out;
}

Graph random_cotree(int n, CounterRng& rng, int branching, bool join) {
    if (n <= 1) return Graph(std::max(1, n));
    const int maxk = std::min(std::max(2, branching), n);
    const int k = maxk > 2 ? 2 + int(rng.below(uint64_t(maxk - 1))) : 2;
    std::vector<int> sizes(size_t(k), 1);
    for (int extra = n - k; extra > 0; --extra) ++sizes[size_t(rng.below(uint64_t(k)))];
    std::vector<Graph> parts;
    for (int s : sizes) parts.push_back(random_cotree(s, rng, branching, !join));
    return disjoint_union(parts, join);
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
    if (spec.n < 1 || spec.n > kMaxVertices)
        throw precondition_violated("generator size out of range");
    CounterRng rng(spec.seed, 17);
    Graph g;
    switch (spec.family) {
        case Family::Cograph: {
            g = random_cotree(spec.n, rng, spec.branching, rng.below(2) == 1);
            break;
        }
        case Family::Substitution: {
            const auto& cat = p5_free_catalogue(spec.cache_dir);
            // Growable seeds only (>= 2 vertices) so substitution makes progress.
            std::vector<size_t> grow;
            for (size_t i = 0; i < cat.size(); ++i)
                if (cat[i].size() >= 2) grow.push_back(i);
            g = cat[grow[rng.below(grow.size())]];
            int guard = 0;
            while (g.size() < spec.n && guard++ < 4 * spec.n) {
                int v = int(rng.below(uint64_t(g.size())));
                g = substitute_vertex(g, v, cat[grow[rng.below(grow.size())]]);
            }
            if (g.size() > spec.n) {
                Bitset keep(g.size());
                for (int i = 0; i < spec.n; ++i) keep.set(i);
                g = g.induced(keep);  // hereditary: induced subgraphs stay P5-free
            }
            break;
        }
        case Family::SparseRandomFiltered: {
            const double p = rat_to_double(spec.density);
            const Graph& bad = spec.complement_of ? pattern_p5() : pattern_house();
            bool ok = false;
            for (long tries = 0; tries < spec.rejection_budget && !ok; ++tries) {
                Graph cand(spec.n);
                for (int i = 0; i < spec.n; ++i)
                    for (int j = i + 1; j < spec.n; ++j)
                        if (rng.uniform() < p) cand.add_edge(i, j);
                if (is_free_of(cand, bad)) {
                    g = std::move(cand);
                    ok = true;
                }
            }
            if (!ok)
                throw sampling_budget_exhausted(
                    "sparse-random generator: rejection budget exhausted");
            break;
        }
    }
    // Class audit at emission.
    if (spec.family == Family::Cograph && !is_free_of(g, pattern_p4()))
        throw internal_invariant_violated("cograph generator emitted a P4");
    if (spec.family == Family::Substitution && !is_free_of(g, pattern_p5()))
        throw internal_invariant_violated("substitution generator emitted a P5");
    if (spec.complement_of) {
        g = g.complement();
        if (!is_free_of(g, pattern_house()))
            throw internal_invariant_violated("complement emission is not house-free");
    } else if (spec.family == Family::SparseRandomFiltered &&
               !is_free_of(g, pattern_house())) {
        throw internal_invariant_violated("sparse-random emission is not house-free");
    }
    return g;
}

// ---- brute-force oracles ---------------------------------------------------------

namespace {

struct CliqueSearch {
    const Graph& g;
    Bitset best;

    void expand(Bitset cand, Bitset& cur) {
        // Greedy colouring order: later colour classes first.
        std::vector<int> order, bound;
        Bitset un = cand;
        int col = 0;
        while (un.any()) {
            ++col;
            Bitset avail = un;
            while (avail.any()) {
                int v = avail.first();
                order.push_back(v);
                bound.push_back(col);
                avail -= g.row(v);
                avail.reset(v);
                un.reset(v);
            }
        }
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (int(cur.count()) + bound[size_t(i)] <= int(best.count())) return;
            int v = order[size_t(i)];
            Bitset next = cand;
            next &= g.row(v);
            cur.set(v);
            if (cur.count() > best.count()) best = cur;
            if (next.any()) expand(next, cur);
            cur.reset(v);
            cand.reset(v);
        }
    }
};

int bb_max_clique(const Graph& g) {
    if (g.size() == 0) return 0;
    CliqueSearch cs{g, Bitset(g.size())};
    Bitset cur(g.size());
    cs.expand(g.full_set(), cur);
    return int(cs.best.count());
}

}  // namespace

std::pair<int, int> brute_max_hom(const Graph& g, bool exhaustive) {
    const int n = g.size();
    if (exhaustive) {
        if (n > kExhaustiveCap) throw precondition_violated("exhaustive oracle capped at 18");
        int bc = 0, bs = 0;
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            Bitset s(n);
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s.set(i);
            if (int(s.count()) > bc && is_clique(g, s)) bc = int(s.count());
            if (int(s.count()) > bs && is_stable_set(g, s)) bs = int(s.count());
        }
        return {bc, bs};
    }
    if (n > kBranchBoundCap) throw precondition_violated("branch-and-bound oracle capped at 64");
    return {bb_max_clique(g), bb_max_clique(g.complement())};
}

Bitset brute_best_restricted(const Graph& g, const Rat& eps) {
    const int n = g.size();
    if (n > kExhaustiveCap) throw precondition_violated("exhaustive oracle capped at 18");
    Bitset best(n);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        Bitset s(n);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.set(i);
        if (s.count() > best.count() && is_restricted_on(g, s, eps)) best = s;
    }
    return best;
}

// ---- exponent harness --------------------------------------------------------------

namespace {

struct RowResult {
    std::string result_kind = "error";
    long set_size = 0;
    double exponent = 0.0;
    bool cert_ok = false;
    long millis = 0;
    bool counted = false;  // include in summary statistics
};

std::string fmt6(double v) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << v;
    return os.str();
}

}  // namespace

std::string exponent_harness(const std::vector<HarnessInstance>& batch,
                             const ConstantsProfile& profile, const HarnessOptions& opts) {
    std::vector<RowResult> rows(batch.size());
    std::atomic<size_t> cursor{0};

    auto work = [&]() {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= batch.size()) break;
            const HarnessInstance& inst = batch[i];
            RowResult& r = rows[i];
            const auto t0 = std::chrono::steady_clock::now();
            try {
                Graph g = generate(inst.spec);
                Round2Outcome out;
                if (inst.pipeline == "polynomial_rodl")
                    out = polynomial_rodl(g, Rat(1, 4), profile, inst.spec.seed);
                else if (inst.pipeline == "eh_extract")
                    out = eh_extract(g, profile, inst.spec.seed);
                else
                    throw precondition_violated("unknown pipeline: " + inst.pipeline);
                r.set_size = long(out.set.count());
                r.result_kind = out.kind == R2Kind::HomSet ? out.homset_kind : "restricted";
                r.exponent = g.size() > 1
                                 ? std::log(double(std::max(1L, r.set_size))) /
                                       std::log(double(g.size()))
                                 : 1.0;
                r.cert_ok = verify_certificate(out.cert, g).accepted;
                r.counted = true;
            } catch (const Error& e) {
                r.result_kind = "error";
                (void)e;
            }
            const auto t1 = std::chrono::steady_clock::now();
            r.millis =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        }
    };

    unsigned nthreads = opts.threads > 0 ? unsigned(opts.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, std::max<size_t>(1, batch.size()));
    {
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
    }

    std::ostringstream csv;
    csv << "instance_id,family,n,seed,pipeline,result_kind,set_size,exponent,"
           "certificate_ok,millis\n";
    std::vector<double> exps;
    for (size_t i = 0; i < batch.size(); ++i) {
        const auto& inst = batch[i];
        const auto& r = rows[i];
        csv << i << ',' << family_name(inst.spec.family) << ',' << inst.spec.n << ','
            << inst.spec.seed << ',' << inst.pipeline << ',' << r.result_kind << ','
            << r.set_size << ',' << fmt6(r.exponent) << ',' << (r.cert_ok ? 1 : 0) << ','
            << (opts.include_timing ? r.millis : 0) << '\n';
        if (r.counted) exps.push_back(r.exponent);
    }
    if (!exps.empty()) {
        std::sort(exps.begin(), exps.end());
        double median = exps.size() % 2 ? exps[exps.size() / 2]
                                        : (exps[exps.size() / 2 - 1] + exps[exps.size() / 2]) / 2;
        csv << "summary,,,,,median,," << fmt6(median) << ",,\n";
        csv << "summary,,,,,min,," << fmt6(exps.front()) << ",,\n";
    }
    return csv.str();
}

}  // namespace blockade
