#include "blockade/primitives.hpp"

#include "blockade/errors.hpp"
#include "blockade/rng.hpp"

#include <algorithm>
#include <bitset>

namespace blockade {

// ---- complete blockade from anticomponents ---------------------------------

Blockade complete_blockade_from_anticomponents(const Graph& g, int k) {
    const int n = g.size();
    if (k < 2) throw precondition_violated("k must be at least 2");
    if (n == 0) throw degenerate_input("empty graph has no blockade");
    std::vector<Bitset> parts = anticomponents(g);
    for (const auto& p : parts)
        if (Rat(p.count()) * k >= n)
            throw precondition_violated("anticomponent of size " + std::to_string(p.count()) +
                                        " is not smaller than |G|/k");

    // Merge the two smallest parts while their union stays below |G|/k; at the
    // fixed point all parts but possibly the smallest have size >= |G|/(2k),
    // and there are more than k of them since every part is below |G|/k.
    auto smaller = [&](const Bitset& x, const Bitset& y) {
        if (x.count() != y.count()) return x.count() < y.count();
        return x.first() < y.first();
    };
    while (parts.size() >= 2) {
        size_t i0 = 0, i1 = 1;
        if (smaller(parts[1], parts[0])) std::swap(i0, i1);
        for (size_t i = 2; i < parts.size(); ++i) {
            if (smaller(parts[i], parts[i0])) {
                i1 = i0;
                i0 = i;
            } else if (smaller(parts[i], parts[i1])) {
                i1 = i;
            }
        }
        if (Rat(parts[i0].count() + parts[i1].count()) * k >= n) break;
        parts[i0] |= parts[i1];
        parts.erase(parts.begin() + ptrdiff_t(i1));
    }
    if (int(parts.size()) <= k)
        throw internal_invariant_violated("merge ended with too few parts");
    auto smallest = std::min_element(parts.begin(), parts.end(), smaller);
    parts.erase(smallest);
    std::sort(parts.begin(), parts.end(),
              [](const Bitset& x, const Bitset& y) { return x.first() < y.first(); });

    Blockade b;
    b.blocks = std::move(parts);
    b.declared_length = k;
    b.declared_width = Rat(n, long(k) * k);
    return b;
}

// ---- covering set -----------------------------------------------------------

namespace {

Bitset covering_set_greedy(const Graph& g, const Bitset& a, const Bitset& b, long cap) {
    Bitset picked(g.size()), covered(g.size());
    const int bn = b.count();
    long picks = 0;
    while (2 * covered.count() < bn && picks < cap) {
        int best = -1, best_gain = 0;
        for (int u = a.first(); u >= 0; u = a.next(u)) {
            if (picked.test(u)) continue;
            int gain = (g.row(u) & b).count() - g.row(u).intersection_count(covered);
            if (gain > best_gain) {
                best_gain = gain;
                best = u;
            }
        }
        if (best < 0) break;
        picked.set(best);
        covered |= (g.row(best) & b);
        ++picks;
    }
    if (2 * covered.count() < bn)
        throw internal_invariant_violated("greedy covering fell short of |B|/2");
    return picked;
}

}  // namespace

Bitset covering_set(const Graph& g, const Bitset& a, const Bitset& b, const Rat& x,
                    bool randomized, uint64_t seed) {
    if (x <= 0 || x > Rat(1, 2)) throw precondition_violated("x must lie in (0,1/2]");
    if (a.intersects(b)) throw precondition_violated("a and b must be disjoint");
    const int an = a.count();
    for (int v = b.first(); v >= 0; v = b.next(v))
        if (Rat(g.row(v).intersection_count(a)) < x * an)
            throw precondition_violated("vertex " + std::to_string(v) +
                                        " has fewer than x|A| neighbours in A");
    if (b.none()) return Bitset(g.size());

    if (randomized) {
        long kk = std::max(1L, rat_floor_clamped(Rat(1) / x, long(an)));
        std::vector<int> pool = a.to_vector();
        CounterRng rng(seed);
        for (int attempt = 0; attempt < 64; ++attempt) {
            Bitset picked(g.size()), covered(g.size());
            for (long i = 0; i < kk; ++i) picked.set(pool[rng.below(pool.size())]);
            for (int u = picked.first(); u >= 0; u = picked.next(u)) covered |= (g.row(u) & b);
            if (2 * covered.count() >= b.count()) return picked;
        }
    }
    return covering_set_greedy(g, a, b, rat_ceil_clamped(Rat(1) / x, long(an)));
}

// ---- comb or sparse cover -----------------------------------------------------

namespace {

// Maximal blocks for a fixed apex set: block_i collects the b-vertices adjacent
// to apex i and to no other chosen apex. Any valid comb on these apexes has
// blocks contained in them.
std::vector<Bitset> maximal_blocks(const Graph& g, const std::vector<int>& apexes,
                                   const Bitset& b) {
    std::vector<Bitset> blocks;
    for (size_t i = 0; i < apexes.size(); ++i) {
        Bitset blk = g.row(apexes[i]) & b;
        for (size_t j = 0; j < apexes.size(); ++j)
            if (j != i) blk -= g.row(apexes[j]);
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

int min_block_count(const std::vector<Bitset>& blocks) {
    int m = blocks.empty() ? 0 : blocks[0].count();
    for (const auto& blk : blocks) m = std::min(m, blk.count());
    return m;
}

}  // namespace

CombOutcome comb_or_sparse_cover(const Graph& g, const Bitset& a, const Bitset& b,
                                 const Rat& delta) {
    if (a.none() || b.none()) throw precondition_violated("a and b must be nonempty");
    if (a.intersects(b)) throw precondition_violated("a and b must be disjoint");
    if (delta <= 0) throw precondition_violated("delta must be positive");
    for (int u = a.first(); u >= 0; u = a.next(u))
        if (Rat(g.row(u).intersection_count(b)) > delta)
            throw precondition_violated("vertex " + std::to_string(u) +
                                        " has more than delta neighbours in B");

    const long bn = b.count();
    Bitset covered(g.size());
    for (int u = a.first(); u >= 0; u = a.next(u)) covered |= (g.row(u) & b);

    std::optional<CombFound> best;
    Rat best_width = -1;
    auto consider = [&](const std::vector<int>& apexes) {
        auto blocks = maximal_blocks(g, apexes, b);
        int w = min_block_count(blocks);
        long k = long(apexes.size());
        if (w == 0 || Rat(w) * k * k < bn) return;
        if (Rat(w) > best_width) {
            best_width = Rat(w);
            best = CombFound{Comb{apexes, std::move(blocks)}, int(k)};
        }
    };

    // Greedy apex peeling: keep extending by the apex with the most b-vertices
    // not seen by any chosen apex, and test every prefix as a candidate.
    {
        std::vector<int> chosen;
        Bitset seen(g.size()), used(g.size());
        const int prefix_cap = 64;
        while (int(chosen.size()) < prefix_cap) {
            int pick = -1, gain = 0;
            for (int u = a.first(); u >= 0; u = a.next(u)) {
                if (used.test(u)) continue;
                int gn = (g.row(u) & b).count() - g.row(u).intersection_count(seen);
                if (gn > gain) {
                    gain = gn;
                    pick = u;
                }
            }
            if (pick < 0) break;
            used.set(pick);
            chosen.push_back(pick);
            seen |= (g.row(pick) & b);
            consider(chosen);
        }
    }
    if (a.count() <= 12) {
        std::vector<int> av = a.to_vector();
        for (unsigned mask = 1; mask < (1u << av.size()); ++mask) {
            std::vector<int> apexes;
            for (size_t i = 0; i < av.size(); ++i)
                if (mask & (1u << i)) apexes.push_back(av[i]);
            consider(apexes);
        }
    }
    if (best) {
        std::string why;
        if (!best->comb.valid(g, &why)) throw internal_invariant_violated("comb search: " + why);
        return *best;
    }
    long cov = covered.count();
    if (Rat(cov) * cov <= Rat(400) * bn * delta) return SmallCover{covered};
    throw internal_invariant_violated(
        "neither a verifiable comb nor the small-cover bound is available");
}

bool comb_exists_exhaustive(const Graph& g, const Bitset& a, const Bitset& b) {
    std::vector<int> av = a.to_vector();
    if (av.size() > 12) throw precondition_violated("exhaustive comb oracle wants |A| <= 12");
    const long bn = b.count();
    for (unsigned mask = 1; mask < (1u << av.size()); ++mask) {
        std::vector<int> apexes;
        for (size_t i = 0; i < av.size(); ++i)
            if (mask & (1u << i)) apexes.push_back(av[i]);
        auto blocks = maximal_blocks(g, apexes, b);
        long k = long(apexes.size());
        int w = min_block_count(blocks);
        if (w > 0 && Rat(w) * k * k >= bn) return true;
    }
    return false;
}

// ---- anticomplete pair in a sparse P5-free graph ---------------------------

namespace {

// Exact grouping of pairwise-anticomplete pieces into two sides both of size
// >= w, via bitset subset-sum over piece sizes (complete, not greedy).
std::optional<std::pair<Bitset, Bitset>> group_pieces(int n, const std::vector<Bitset>& pieces,
                                                      const Rat& w) {
    if (pieces.size() < 2) return std::nullopt;
    long total = 0;
    for (const auto& p : pieces) total += p.count();
    long lo = rat_ceil(w);
    if (lo < 1) lo = 1;
    if (2 * lo > total) return std::nullopt;

    std::vector<std::bitset<kMaxVertices + 1>> reach(pieces.size() + 1);
    reach[0][0] = true;
    for (size_t i = 0; i < pieces.size(); ++i)
        reach[i + 1] = reach[i] | (reach[i] << pieces[i].count());

    long t = -1;
    for (long s = lo; s <= total - lo; ++s)
        if (reach[pieces.size()][size_t(s)]) {
            t = s;
            break;
        }
    if (t < 0) return std::nullopt;

    Bitset x(n), y(n);
    for (size_t i = pieces.size(); i-- > 0;) {
        if (reach[i][size_t(t)]) {
            y |= pieces[i];
        } else {
            x |= pieces[i];
            t -= pieces[i].count();
        }
    }
    if (t != 0) return std::nullopt;
    return std::make_pair(x, y);
}

}  // namespace

Blockade anticomplete_pair_sparse(const Graph& g, const Rat& eta) {
    const int n = g.size();
    if (eta <= 0 || eta > Rat(1, 2)) throw precondition_violated("eta must lie in (0,1/2]");
    if (Rat(n) * eta < 1) throw degenerate_input("graph smaller than 1/eta");
    if (!is_x_sparse(g, eta)) throw precondition_violated("graph is not eta-sparse");
    if (!is_free_of(g, pattern_p5())) throw precondition_violated("graph contains an induced P5");

    const Rat w = eta * n;
    auto emit = [&](std::pair<Bitset, Bitset> xy) {
        Blockade b;
        b.blocks = {std::move(xy.first), std::move(xy.second)};
        b.declared_length = 2;
        b.declared_width = w;
        if (edges_between(g, b.blocks[0], b.blocks[1]) != 0)
            throw internal_invariant_violated("claimed anticomplete pair has a crossing edge");
        return b;
    };

    std::vector<Bitset> comps = components(g);
    if (auto xy = group_pieces(n, comps, w)) return emit(*xy);

    // Proof walk: inside the dominant component F, remove a closed
    // neighbourhood and try to split what remains, then descend one more level
    // through a crossing edge.
    const Bitset* f = &comps[0];
    for (const auto& c : comps)
        if (c.count() > f->count()) f = &c;
    int v = f->first();
    if (v >= 0) {
        Bitset avert = g.row(v) & *f;
        Bitset fprime = *f;
        fprime -= avert;
        fprime.reset(v);
        auto sub = components_within(g, fprime);
        if (auto xy = group_pieces(n, sub, w)) return emit(*xy);
        if (!sub.empty()) {
            const Bitset* j = &sub[0];
            for (const auto& c : sub)
                if (c.count() > j->count()) j = &c;
            for (int u = avert.first(); u >= 0; u = avert.next(u)) {
                if (!g.row(u).intersects(*j)) continue;
                Bitset rest = *j;
                rest -= g.row(u);
                auto deeper = components_within(g, rest);
                if (auto xy = group_pieces(n, deeper, w)) return emit(*xy);
                break;
            }
        }
    }

    for (int u = 0; u < n; ++u) {
        Bitset domain = g.full_set();
        domain -= g.row(u);
        domain.reset(u);
        auto sub = components_within(g, domain);
        if (auto xy = group_pieces(n, sub, w)) return emit(*xy);
    }
    throw internal_invariant_violated(
        "no anticomplete split found in an eta-sparse P5-free graph");
}

// ---- restricted subgraph search ---------------------------------------------

namespace {

struct RodlSearch {
    const Graph& g;
    Rat eps;
    Rat target;
    long budget;
    int peels_left = 4;  // peel is O(n^3); cap it after the budget runs out
    Bitset best;

    explicit RodlSearch(const Graph& g_) : g(g_), best(g_.size()) {}

    bool good_enough() const { return best.any() && Rat(best.count()) >= target; }

    void offer(const Bitset& s) {
        if (s.count() > best.count()) best = s;
    }

    // Max-degree vertex inside s, in g or (complemented=true) its complement.
    int pivot(const Bitset& s, bool complemented) const {
        int v = -1, deg = -1;
        const int sc = s.count();
        for (int u = s.first(); u >= 0; u = s.next(u)) {
            int d = g.row(u).intersection_count(s);
            if (complemented) d = sc - 1 - d;
            if (d > deg) {
                deg = d;
                v = u;
            }
        }
        return v;
    }

    void peel(Bitset s) {
        while (s.any()) {
            if (is_restricted_on(g, s, eps)) {
                offer(s);
                return;
            }
            long e = 0;
            for (int u = s.first(); u >= 0; u = s.next(u))
                e += g.row(u).intersection_count(s);
            long sc = s.count();
            bool comp = e < sc * (sc - 1) / 2;  // fewer edges than non-edges
            s.reset(pivot(s, comp));
        }
    }

    void rec(const Bitset& s) {
        if (good_enough()) return;
        if (s.count() <= best.count()) return;
        if (is_restricted_on(g, s, eps)) {
            offer(s);
            return;
        }
        if (--budget <= 0) {
            if (peels_left > 0) {
                --peels_left;
                peel(s);
            }
            return;
        }
        long e = 0;
        for (int u = s.first(); u >= 0; u = s.next(u)) e += g.row(u).intersection_count(s);
        long sc = s.count();
        bool comp = e < sc * (sc - 1) / 2;
        int v = pivot(s, comp);
        Bitset inside = s, outside = s;
        if (!comp) {
            inside &= g.row(v);
            outside -= g.row(v);
            outside.reset(v);
        } else {
            inside -= g.row(v);
            inside.reset(v);
            outside &= g.row(v);
        }
        if (inside.count() >= outside.count()) {
            rec(inside);
            rec(outside);
        } else {
            rec(outside);
            rec(inside);
        }
    }
};

}  // namespace

Bitset rodl_restricted_subgraph(const Graph& g, const Rat& eps, const Rat& target,
                                const RodlOptions& opts) {
    const int n = g.size();
    if (eps <= 0 || eps >= Rat(1, 2)) throw precondition_violated("eps must lie in (0,1/2)");
    if (n == 0) return Bitset(0);
    if (is_restricted(g, eps)) return g.full_set();

    if (n <= opts.exhaustive_cap) {
        Bitset best(n);
        for (uint64_t mask = 1; mask < (uint64_t(1) << n); ++mask) {
            if (int(std::popcount(mask)) <= best.count()) continue;
            Bitset s(n);
            for (int i = 0; i < n; ++i)
                if (mask & (uint64_t(1) << i)) s.set(i);
            if (is_restricted_on(g, s, eps)) best = s;
        }
        return best;
    }

    RodlSearch search(g);
    search.eps = eps;
    search.target = target;
    search.budget = opts.budget;
    Bitset single(n);
    single.set(0);
    search.best = single;
    search.rec(g.full_set());
    if (!is_restricted_on(g, search.best, eps))
        throw internal_invariant_violated("restricted search returned a non-restricted set");
    return search.best;
}

}  // namespace blockade
