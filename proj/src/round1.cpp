#include "blockade/round1.hpp"

#include "blockade/errors.hpp"
#include "blockade/primitives.hpp"

#include <algorithm>

namespace blockade {

namespace {

long ceil_fourth_root(long v) {
    long k = 1;
    while (k * k * k * k < v) ++k;
    return k;
}

void self_check(const Certificate& c, const Graph& g) {
    Verdict v = verify_certificate(c, g);
    if (!v.accepted)
        throw internal_invariant_violated("emitted certificate failed verification: " +
                                          (v.failures.empty() ? "?" : v.failures.front()));
}

bool blockade_is_pure(const Graph& g, const Blockade& b) {
    for (int i = 0; i < b.length(); ++i)
        for (int j = i + 1; j < b.length(); ++j) {
            const Bitset &bi = b.blocks[size_t(i)], &bj = b.blocks[size_t(j)];
            if (bi.none() || bj.none()) continue;
            if (!is_complete_pair(g, bi, bj) && !is_anticomplete_pair(g, bi, bj)) return false;
        }
    return true;
}

bool blockade_is_x_sparse(const Graph& g, const Blockade& b, const Rat& x) {
    for (int i = 0; i < b.length(); ++i)
        for (int j = i + 1; j < b.length(); ++j)
            if (!is_sparse_to(g, b.blocks[size_t(j)], b.blocks[size_t(i)], x)) return false;
    return true;
}

}  // namespace

Bitset lift_set(const Bitset& s, const std::vector<int>& map, int host_n) {
    Bitset out(host_n);
    for (int i = s.first(); i >= 0; i = s.next(i)) out.set(map[size_t(i)]);
    return out;
}

Blockade lift_blockade(const Blockade& b, const std::vector<int>& map, int host_n) {
    Blockade out;
    out.declared_length = b.declared_length;
    out.declared_width = b.declared_width;
    for (const auto& blk : b.blocks) out.blocks.push_back(lift_set(blk, map, host_n));
    return out;
}

// ---- house1_step ------------------------------------------------------------

namespace {

Round1Outcome emit_pure(const Graph& g, Blockade b, const Rat& target_width,
                        const std::string& lemma_id, const ConstantsProfile& prof,
                        bool complete) {
    b.declared_width = Rat(b.min_block_size());
    b.declared_length = b.length();
    Round1Outcome out;
    out.kind = R1Kind::PureBlockade;
    out.blockade = b;
    out.cert = make_blockade_cert(g, b, complete ? BlockadeKind::Complete : BlockadeKind::Pure,
                                  0, lemma_id, prof);
    out.cert.add_claim("target-width", {{"value", rat_to_string(target_width)}});
    out.cert.add_claim("achieved-width", {{"value", rat_to_string(b.declared_width)}});
    self_check(out.cert, g);
    return out;
}

Round1Outcome emit_sparser(const Graph& g, const Bitset& s, const Rat& sparsity,
                           const std::string& lemma_id, const ConstantsProfile& prof) {
    Round1Outcome out;
    out.kind = R1Kind::Sparser;
    out.sparser_set = s;
    out.new_sparsity = sparsity;
    out.cert = make_set_cert(g, CertKind::SparseSubset, s, sparsity, lemma_id, prof);
    self_check(out.cert, g);
    return out;
}

Round1Outcome emit_sparse_pair(const Graph& g, const Bitset& x_set, const Bitset& y_set,
                               const Rat& x, const std::string& lemma_id,
                               const ConstantsProfile& prof) {
    Round1Outcome out;
    out.kind = R1Kind::SparsePair;
    out.pair_x = x_set;
    out.pair_y = y_set;
    out.threshold = x;
    Blockade b;
    b.blocks = {x_set, y_set};
    b.declared_length = 2;
    b.declared_width = Rat(std::min(x_set.count(), y_set.count()));
    out.blockade = b;
    out.cert = make_blockade_cert(g, b, BlockadeKind::XSparse, x, lemma_id, prof);
    self_check(out.cert, g);
    return out;
}

Round1Outcome emit_x_sparse(const Graph& g, Blockade b, const Rat& x, const Rat& target_width,
                            const std::string& lemma_id, const ConstantsProfile& prof) {
    b.declared_width = Rat(b.min_block_size());
    b.declared_length = b.length();
    Round1Outcome out;
    out.kind = R1Kind::XSparseBlockade;
    out.blockade = b;
    out.threshold = x;
    out.cert = make_blockade_cert(g, b, BlockadeKind::XSparse, x, lemma_id, prof);
    out.cert.add_claim("target-width", {{"value", rat_to_string(target_width)}});
    self_check(out.cert, g);
    return out;
}

}  // namespace

Round1Outcome house1_step(const Graph& g, const Rat& x, const Rat& y,
                          const ConstantsProfile& prof) {
    const int n = g.size();
    const std::string id = "house1_step";
    if (n == 0) throw degenerate_input("empty graph");
    if (x <= 0 || x > y || y >= Rat(1, 2)) throw precondition_violated("need 0 < x <= y < 1/2");
    if (!prof.demo && (y > rat_pow(Rat(1, 2), 8) || Rat(n) < rat_pow(y, -4)))
        throw precondition_violated("paper-mode bounds on y and |G| not met");
    const Rat y3 = rat_pow(y, 3), y4 = rat_pow(y, 4);
    if (!is_x_sparse(g, y3)) throw precondition_violated("graph is not y^3-sparse");
    if (!is_free_of(g, pattern_house())) throw precondition_violated("graph contains a house");

    if (is_x_sparse(g, 2 * y4)) return emit_sparser(g, g.full_set(), 2 * y4, id, prof);

    // v: a maximum-degree vertex; its neighbourhood is the comb's target side.
    int v = 0;
    for (int u = 1; u < n; ++u)
        if (g.degree(u) > g.degree(v)) v = u;
    const Bitset nbrs = g.row(v);
    Bitset rest = g.full_set();
    rest -= nbrs;
    rest.reset(v);

    // Drop the vertices that see too much of N(v); what is left is sparse to N(v).
    Bitset a_side(n);
    const Rat heavy = Rat(1, 2) * rat_pow(y, 2) * nbrs.count();
    for (int u = rest.first(); u >= 0; u = rest.next(u))
        if (Rat(g.row(u).intersection_count(nbrs)) < heavy || heavy == 0) a_side.set(u);
    if (a_side.none()) {
        Blockade b;
        b.blocks = {nbrs};
        return emit_pure(g, b, y4 * n, id, prof, false);
    }

    // Split N(v) by degree into A: the low-degree side feeds the sparse-pair
    // outcome, the high-degree side is the comb's ground set B.
    const Rat low = rat_pow(x, 2) * a_side.count();
    Bitset nprime(n), b_side(n);
    for (int u = nbrs.first(); u >= 0; u = nbrs.next(u)) {
        if (Rat(g.row(u).intersection_count(a_side)) < low)
            nprime.set(u);
        else
            b_side.set(u);
    }
    if (Rat(nprime.count()) >= y4 * n || b_side.none()) {
        Bitset y_set(n);
        const Rat cap = x * nprime.count();
        for (int u = a_side.first(); u >= 0; u = a_side.next(u))
            if (Rat(g.row(u).intersection_count(nprime)) <= cap) y_set.set(u);
        return emit_sparse_pair(g, nprime, y_set, x, id, prof);
    }

    Bitset s = covering_set(g, a_side, b_side, rat_pow(x, 2));
    Rat delta = rat_pow(y, 2) * b_side.count();
    for (int u = s.first(); u >= 0; u = s.next(u))
        delta = std::max(delta, Rat(g.row(u).intersection_count(b_side)));
    CombOutcome co = comb_or_sparse_cover(g, s, b_side, delta);

    if (std::holds_alternative<SmallCover>(co)) {
        // Demo-scale fallback: the 20*sqrt bound can hold here when y is not
        // tiny. Harvest purity from anticomponents of B instead.
        try {
            std::vector<int> map;
            Graph f = g.induced(b_side, &map);
            Blockade inner = complete_blockade_from_anticomponents(f, 2);
            return emit_pure(g, lift_blockade(inner, map, n), y4 * n, id, prof, true);
        } catch (const Error&) {
            Blockade b;
            b.blocks = {b_side};
            return emit_pure(g, b, y4 * n, id, prof, false);
        }
    }

    const Comb& comb = std::get<CombFound>(co).comb;
    const long ell = comb.length();
    const long k = std::max<long>(1, ceil_fourth_root(ell));

    // Anticonnected cores of the first k blocks; any mixed vertex across two
    // cores would complete a house through v and the block's apex.
    Blockade pure;
    for (long i = 0; i < k; ++i) {
        const Bitset& blk = comb.blocks[size_t(i)];
        auto anti = anticomponents_within(g, blk);
        const Bitset* best = nullptr;
        for (const auto& c : anti)
            if (!best || c.count() > best->count()) best = &c;
        if (!best) continue;
        if (Rat(best->count()) * k < blk.count()) {
            std::vector<int> map;
            Graph f = g.induced(blk, &map);
            Blockade inner = complete_blockade_from_anticomponents(f, int(k));
            return emit_pure(g, lift_blockade(inner, map, n), y4 * n, id, prof, true);
        }
        pure.blocks.push_back(*best);
    }
    if (pure.blocks.empty()) throw internal_invariant_violated("comb produced no blocks");
    if (!blockade_is_pure(g, pure))
        throw internal_invariant_violated(
            "anticonnected comb blocks are not pure in a house-free graph");
    return emit_pure(g, pure, Rat(n) / rat_pow(Rat(k), 26), id, prof, false);
}

// ---- house2_iterate -----------------------------------------------------------

Round1Outcome house2_iterate(const Graph& g, const Rat& x, const Rat& y,
                             const ConstantsProfile& prof) {
    const int n = g.size();
    const std::string id = "house2_iterate";
    if (n == 0) throw degenerate_input("empty graph");
    if (x <= 0 || x > y || y > prof.c) throw precondition_violated("need 0 < x <= y <= c");
    if (!is_x_sparse(g, prof.c * rat_pow(y, 3)))
        throw precondition_violated("graph is not cy^3-sparse");
    if (!prof.demo && Rat(n) < rat_pow(y, -6))
        throw precondition_violated("paper-mode size bound not met");
    if (!is_free_of(g, pattern_house())) throw precondition_violated("graph contains a house");

    std::vector<Bitset> accum;
    Bitset cur = g.full_set();
    const long max_rounds = rat_ceil_clamped(Rat(1) / y, long(n) + 1) + 1;
    const Rat target_width = rat_pow(y, 6) * n;

    auto emit_accum = [&]() {
        Blockade b;
        b.blocks = accum;
        b.blocks.push_back(cur);
        return emit_x_sparse(g, b, x, target_width, id, prof);
    };

    for (long round = 0; round < max_rounds; ++round) {
        if (Rat(long(accum.size())) >= Rat(1) / y) return emit_accum();
        if (cur.none()) return emit_accum();
        std::vector<int> map;
        Graph f = g.induced(cur, &map);
        Round1Outcome step;
        try {
            step = house1_step(f, x, y, prof);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::PreconditionViolated && !accum.empty()) return emit_accum();
            throw;
        }
        switch (step.kind) {
            case R1Kind::Sparser: {
                Bitset s = lift_set(step.sparser_set, map, n);
                return emit_sparser(g, s, step.new_sparsity, id, prof);
            }
            case R1Kind::PureBlockade: {
                Blockade b = lift_blockade(step.blockade, map, n);
                return emit_pure(g, b, Rat(n) / rat_pow(Rat(std::max(2, b.length())), 30), id,
                                 prof, false);
            }
            case R1Kind::SparsePair: {
                accum.push_back(lift_set(step.pair_x, map, n));
                cur = lift_set(step.pair_y, map, n);
                break;
            }
            default:
                throw internal_invariant_violated("unexpected house1 outcome kind");
        }
    }
    return emit_accum();
}

// ---- house3_sparsify ------------------------------------------------------------

namespace {

// Peel max-degree vertices until the remaining induced subgraph is t-sparse.
Bitset peel_to_sparsity(const Graph& g, const Rat& t) {
    Bitset s = g.full_set();
    while (s.any() && !is_x_sparse_on(g, s, t)) {
        int v = -1, deg = -1;
        for (int u = s.first(); u >= 0; u = s.next(u)) {
            int d = g.row(u).intersection_count(s);
            if (d > deg) {
                deg = d;
                v = u;
            }
        }
        s.reset(v);
    }
    return s;
}

}  // namespace

Round1Outcome house3_sparsify(const Graph& g, const Rat& x, const ConstantsProfile& prof) {
    const int n = g.size();
    const std::string id = "house3_sparsify";
    const Rat c = prof.c;
    if (n <= 1) throw degenerate_input("graph too small to split");
    if (x <= 0 || x >= 1) throw precondition_violated("x must lie in (0,1)");
    if (!prof.demo && x >= rat_pow(c, 5))
        throw precondition_violated("paper-mode bound x < c^5 not met");
    if (!is_x_sparse(g, prof.xi)) throw precondition_violated("graph is not xi-sparse");
    if (!is_free_of(g, pattern_house())) throw precondition_violated("graph contains a house");

    // Grid-minimal y in [cx, c^5] with a cy^3-sparse witness of size >= y|G|.
    Rat y = rat_pow(c, 5);
    Bitset witness = peel_to_sparsity(g, c * rat_pow(y, 3));
    const Rat floor_y = c * x;
    int grid_guard = 0;
    while (grid_guard++ < 64) {
        Rat y2 = c * y;
        if (y2 < floor_y) break;
        Bitset w2 = peel_to_sparsity(g, c * rat_pow(y2, 3));
        if (Rat(w2.count()) < y2 * n) break;
        y = y2;
        witness = w2;
    }

    auto escape_partition = [&](const Bitset& f, const Rat& yv) {
        // y fell below x: the witness is x^3-sparse; slice it into an x-sparse
        // blockade with block size chosen so x*width covers the max degree.
        std::vector<int> fv = f.to_vector();
        long maxdeg = 0;
        for (int u : fv) maxdeg = std::max<long>(maxdeg, g.row(u).intersection_count(f));
        const long fsz = long(fv.size());
        long need = maxdeg == 0 ? 1 : rat_ceil_clamped(Rat(maxdeg) / x, fsz + 1);
        long parts = std::min<long>(rat_ceil_clamped(Rat(1) / x, fsz + 1),
                                    fsz / std::max(1L, need));
        if (parts < 1) parts = 1;
        Blockade b;
        for (long p = 0; p < parts; ++p) b.blocks.emplace_back(n);
        for (size_t i = 0; i < fv.size(); ++i) b.blocks[i % size_t(parts)].set(fv[i]);
        Round1Outcome out =
            emit_x_sparse(g, b, x, Rat(1, 4) * x * long(fv.size()), id, prof);
        out.cert.add_claim("grid-y", {{"value", rat_to_string(yv)}});
        return out;
    };

    if (y < x) return escape_partition(witness, y);

    std::vector<int> map;
    Graph f = g.induced(witness, &map);
    Round1Outcome step;
    try {
        step = house2_iterate(f, std::min(x, y), y, prof);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegenerateInput) return escape_partition(witness, y);
        throw;
    }
    switch (step.kind) {
        case R1Kind::Sparser: {
            // A sparser witness than the grid scan found; restart one level down.
            Bitset s = lift_set(step.sparser_set, map, n);
            if (c * y >= floor_y && is_x_sparse_on(g, s, c * rat_pow(c * y, 3)))
                return escape_partition(s, c * y);
            return emit_sparser(g, s, step.new_sparsity, id, prof);
        }
        case R1Kind::PureBlockade:
            return emit_pure(g, lift_blockade(step.blockade, map, n),
                             Rat(n) / rat_pow(Rat(std::max(2, step.blockade.length())), 34), id,
                             prof, false);
        case R1Kind::XSparseBlockade: {
            Round1Outcome out = emit_x_sparse(g, lift_blockade(step.blockade, map, n), x,
                                              rat_pow(y, 7) * n, id, prof);
            out.cert.add_claim("grid-y", {{"value", rat_to_string(y)}});
            return out;
        }
        default:
            throw internal_invariant_violated("unexpected house2 outcome kind");
    }
}

// ---- house4_blockade -------------------------------------------------------------

Round1Outcome house4_blockade(const Graph& g, const Rat& x, const ConstantsProfile& prof) {
    const int n = g.size();
    const std::string id = "house4_blockade";
    if (n <= 1) throw degenerate_input("graph too small to split");
    if (x <= 0 || x >= 1) throw precondition_violated("x must lie in (0,1)");
    if (!prof.demo) {
        if (x >= rat_pow(Rat(1, 2), prof.d))
            throw precondition_violated("paper-mode bound x < 2^-d not met");
        if (Rat(n) < rat_pow(x, -prof.d))
            throw precondition_violated("paper-mode size bound not met");
    }
    if (!is_free_of(g, pattern_house())) throw precondition_violated("graph contains a house");

    RodlOptions opts;
    opts.exhaustive_cap = 14;
    opts.budget = 1500;
    Bitset s = rodl_restricted_subgraph(g, prof.xi, prof.theta * n, opts);
    std::vector<int> map;
    Graph f = g.induced(s, &map);

    if (!is_x_sparse(f, prof.xi)) {
        // The complement of the extracted part is xi-sparse; an anticomplete
        // pair there is a complete pair here.
        Graph fc = f.complement();
        Blockade pair;
        bool ok = false;
        if (Rat(f.size()) * prof.eta >= 1) {
            try {
                pair = anticomplete_pair_sparse(fc, prof.eta);
                ok = true;
            } catch (const Error&) {
            }
        }
        if (!ok) {
            // Tiny or irregular complement: fall back to halving, keeping only
            // a verified complete pair.
            std::vector<int> sv;
            for (int u = 0; u < f.size(); ++u) sv.push_back(u);
            Bitset h1(f.size()), h2(f.size());
            for (size_t i = 0; i < sv.size(); ++i) (i % 2 ? h2 : h1).set(sv[i]);
            if (h1.any() && h2.any() && is_complete_pair(f, h1, h2)) {
                pair.blocks = {h1, h2};
                ok = true;
            }
        }
        if (ok) {
            Blockade lifted = lift_blockade(pair, map, n);
            return emit_pure(g, lifted, rat_pow(Rat(n), 1) / rat_pow(Rat(2), prof.d), id, prof,
                             true);
        }
        // Neither side cooperated; fall through to the sparse branch if legal.
        if (!is_x_sparse(f, prof.xi))
            throw internal_invariant_violated("restricted part is sparse on neither side");
    }

    Round1Outcome step = house3_sparsify(f, x, prof);
    switch (step.kind) {
        case R1Kind::PureBlockade:
            return emit_pure(g, lift_blockade(step.blockade, map, n),
                             Rat(n) / rat_pow(Rat(std::max(2, step.blockade.length())), prof.d),
                             id, prof, false);
        case R1Kind::XSparseBlockade:
            return emit_x_sparse(g, lift_blockade(step.blockade, map, n), x,
                                 step.blockade.declared_width, id, prof);
        case R1Kind::Sparser: {
            Bitset lifted = lift_set(step.sparser_set, map, n);
            return emit_sparser(g, lifted, step.new_sparsity, id, prof);
        }
        default:
            throw internal_invariant_violated("unexpected house3 outcome kind");
    }
}

// ---- refine_layout -----------------------------------------------------------

namespace {

struct WorkingLayout {
    Graph pattern;
    std::vector<Bitset> parts;
};

std::pair<long, long> layout_counts(const Graph& g, const WorkingLayout& l) {
    Layout lay;
    lay.pattern = l.pattern;
    lay.parts = l.parts;
    return lay.recount(g);
}

Round1Outcome emit_semisparse(const Graph& g, std::vector<Bitset> blocks, const Rat& eps,
                              long d, const std::string& id, const ConstantsProfile& prof) {
    const Rat t = rat_pow(eps, d);
    // Length floor, best-effort: a lone block is split in half when the
    // halves still classify (complete or weakly t-sparse).
    if (blocks.size() == 1 && blocks[0].count() >= 2) {
        std::vector<int> vs = blocks[0].to_vector();
        Bitset h1(g.size()), h2(g.size());
        for (size_t i = 0; i < vs.size(); ++i) (i < vs.size() / 2 ? h1 : h2).set(vs[i]);
        if (is_complete_pair(g, h1, h2) || is_weakly_sparse(g, h1, h2, t))
            blocks = {h1, h2};
    }
    // Keep only blocks whose pairs are all complete or weakly t-sparse; drop
    // the worst offender until the family is clean.
    while (blocks.size() > 1) {
        std::vector<int> bad(blocks.size(), 0);
        bool any = false;
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t j = i + 1; j < blocks.size(); ++j) {
                if (is_complete_pair(g, blocks[i], blocks[j])) continue;
                if (is_weakly_sparse(g, blocks[i], blocks[j], t)) continue;
                ++bad[i];
                ++bad[j];
                any = true;
            }
        if (!any) break;
        size_t worst = size_t(std::max_element(bad.begin(), bad.end()) - bad.begin());
        blocks.erase(blocks.begin() + ptrdiff_t(worst));
    }
    Blockade b;
    b.blocks = std::move(blocks);
    b.declared_length = b.length();
    b.declared_width = Rat(b.min_block_size());
    Round1Outcome out;
    out.kind = R1Kind::Semisparse;
    out.blockade = b;
    out.threshold = t;
    out.tags = classify_pairs(g, b, t);
    out.cert = make_blockade_cert(g, b, BlockadeKind::Semisparse, t, id, prof);
    out.cert.add_claim("target-width",
                       {{"value", rat_to_string(rat_pow(eps, 10 * d * d) * g.size())}});
    out.cert.add_claim("target-length", {{"value", rat_to_string(Rat(1) / eps)}});
    self_check(out.cert, g);
    return out;
}

}  // namespace

Round1Outcome refine_layout(const Graph& g, const Rat& eps, long d, const BlockFinder& finder,
                            const ConstantsProfile& prof) {
    const int n = g.size();
    const std::string id = "refine_layout";
    if (n == 0) throw degenerate_input("empty graph");
    if (eps <= 0 || eps >= Rat(1, 2)) throw precondition_violated("eps must lie in (0,1/2)");
    const Rat x = rat_pow(eps, 5 * d);
    const Rat part_floor = rat_pow(eps, 2 * d) * n;
    const long target_len = std::min<long>(n, rat_ceil_clamped(Rat(1) / eps, n));

    WorkingLayout l;
    l.pattern = Graph(1);
    l.parts = {g.full_set()};

    const int max_steps = std::min(4 * n, 128);  // each step costs a full recount
    int guard = 0;
    while (int(l.parts.size()) < target_len && guard++ < max_steps) {
        // Largest part first, lowest index on ties.
        size_t idx = 0;
        for (size_t i = 1; i < l.parts.size(); ++i)
            if (l.parts[i].count() > l.parts[idx].count()) idx = i;
        const Bitset part = l.parts[idx];
        if (part.count() <= 1) break;

        auto found = finder(g, part);
        if (!found) break;
        const Blockade& bl = *found;
        const long ell = bl.length();
        if (ell < 2) break;
        Bitset uni(n);
        for (const auto& blk : bl.blocks) {
            if (blk.none() || !blk.is_subset_of(part) || uni.intersects(blk))
                throw finder_contract_breach("finder blocks must be nonempty disjoint subsets");
            uni |= blk;
        }
        const bool pure = blockade_is_pure(g, bl);
        const bool xsparse = blockade_is_x_sparse(g, bl, x);
        if (!pure && !xsparse)
            throw finder_contract_breach("finder blockade is neither pure nor x-sparse");

        // Gates: per-block width keeps the power-sum invariant and the part
        // floor; failing a gate stops refinement with the layout as-is.
        const Rat lpow = rat_pow(Rat(ell), d);
        bool gates = true;
        for (const auto& blk : bl.blocks) {
            if (Rat(blk.count()) * lpow < part.count() || Rat(blk.count()) < part_floor) {
                gates = false;
                break;
            }
        }
        if (!gates) break;
        if (Rat(ell) > Rat(1) / eps)
            return emit_semisparse(g, bl.blocks, eps, d, id, prof);  // long exit

        // Substitute the blocks' completeness pattern for the split part.
        const int q = l.pattern.size();
        WorkingLayout next;
        next.pattern = Graph(q - 1 + int(ell));
        std::vector<int> remap(size_t(q), -1);
        int pos = 0;
        for (int j = 0; j < q; ++j)
            if (size_t(j) != idx) remap[size_t(j)] = pos++;
        for (int jj = 0; jj < q; ++jj)
            if (size_t(jj) != idx) next.parts.push_back(l.parts[size_t(jj)]);
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                if (size_t(i) != idx && size_t(j) != idx && l.pattern.has_edge(i, j))
                    next.pattern.add_edge(remap[size_t(i)], remap[size_t(j)]);
        for (long bi = 0; bi < ell; ++bi) {
            int nb = pos + int(bi);
            next.parts.push_back(bl.blocks[size_t(bi)]);
            for (int j = 0; j < q; ++j)
                if (size_t(j) != idx && l.pattern.has_edge(int(idx), j))
                    next.pattern.add_edge(nb, remap[size_t(j)]);
            for (long bj = 0; bj < bi; ++bj)
                if (is_complete_pair(g, bl.blocks[size_t(bi)], bl.blocks[size_t(bj)]))
                    next.pattern.add_edge(nb, pos + int(bj));
        }

        auto [decided, wrong] = layout_counts(g, next);
        if (Rat(wrong) > x * decided) break;  // would violate the wrong/decided bound
        l = std::move(next);
    }

    return emit_semisparse(g, l.parts, eps, d, id, prof);
}

Round1Outcome epsone_blockade(const Graph& g, const Rat& eps, const ConstantsProfile& prof) {
    if (!is_free_of(g, pattern_house())) throw precondition_violated("graph contains a house");
    if (!prof.demo && Rat(g.size()) < rat_pow(eps, -10 * prof.d * prof.d))
        throw precondition_violated("paper-mode size bound not met");
    const Rat x = rat_pow(eps, 5 * prof.d);
    BlockFinder finder = [&](const Graph& host, const Bitset& part) -> std::optional<Blockade> {
        std::vector<int> map;
        Graph f = host.induced(part, &map);
        try {
            Round1Outcome r = house4_blockade(f, x, prof);
            if (r.kind == R1Kind::PureBlockade || r.kind == R1Kind::XSparseBlockade)
                return lift_blockade(r.blockade, map, host.size());
        } catch (const Error&) {
        }
        return std::nullopt;
    };
    Round1Outcome out = refine_layout(g, eps, prof.d, finder, prof);
    out.cert.lemma_id = "epsone_blockade";
    return out;
}

}  // namespace blockade
