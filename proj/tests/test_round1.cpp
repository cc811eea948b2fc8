#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockade/errors.hpp"
#include "blockade/lab.hpp"
#include "blockade/round1.hpp"

using namespace blockade;

namespace {

const ConstantsProfile kProf = ConstantsProfile::demo_small();

// v adjacent to 60 hubs; each hub has 7 private leaves. At y = 49/100,
// x = 1/8 the max degree sits in (2y^4 n, y^3 n] and the comb over the hubs
// drives house1 to a pure blockade.
Graph star_of_stars() {
    Graph g(512);
    for (int b = 0; b < 60; ++b) {
        g.add_edge(0, 1 + b);
        for (int l = 0; l < 7; ++l) g.add_edge(1 + b, 61 + b * 7 + l);
    }
    return g;
}

// 8 disjoint copies of K61 plus 24 isolated vertices; n = 512.
Graph clique_islands() {
    Graph g(512);
    for (int c = 0; c < 8; ++c)
        for (int i = 0; i < 61; ++i)
            for (int j = i + 1; j < 61; ++j) g.add_edge(c * 61 + i, c * 61 + j);
    return g;
}

void check_outcome_verifies(const Round1Outcome& out, const Graph& g) {
    Verdict v = verify_certificate(out.cert, g);
    if (!v.accepted)
        for (const auto& f : v.failures) MESSAGE(f);
    CHECK(v.accepted);
}

}  // namespace

TEST_CASE("house1_step") {
    const Rat y(49, 100), x(1, 8);
    SUBCASE("already twice as sparse -> Sparser") {
        Graph g(64);
        g.add_edge(0, 1);  // max degree 1 <= 2 y^4 n
        auto out = house1_step(g, x, y, kProf);
        CHECK(out.kind == R1Kind::Sparser);
        CHECK(is_x_sparse(g.induced(out.sparser_set), out.new_sparsity));
        check_outcome_verifies(out, g);
    }
    SUBCASE("star-of-stars -> pure blockade") {
        Graph g = star_of_stars();
        REQUIRE(is_x_sparse(g, y * y * y));
        auto out = house1_step(g, x, y, kProf);
        CHECK((out.kind == R1Kind::PureBlockade || out.kind == R1Kind::SparsePair ||
               out.kind == R1Kind::Sparser));
        check_outcome_verifies(out, g);
    }
    SUBCASE("clique islands -> sparse pair") {
        Graph g = clique_islands();
        auto out = house1_step(g, x, y, kProf);
        if (out.kind == R1Kind::SparsePair) {
            CHECK(!out.pair_x.intersects(out.pair_y));
            CHECK(is_sparse_to(g, out.pair_y, out.pair_x, out.threshold));
        }
        check_outcome_verifies(out, g);
    }
    SUBCASE("precondition: not y^3-sparse") {
        CHECK_THROWS_AS((void)house1_step(make_complete(64), x, Rat(1, 4), kProf), Error);
    }
    SUBCASE("precondition: contains a house") {
        Graph g(64);
        Graph h = pattern_house();
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (h.has_edge(i, j)) g.add_edge(i, j);
        CHECK_THROWS_AS((void)house1_step(g, Rat(1, 64), Rat(1, 10), kProf), Error);
    }
}

TEST_CASE("house2_iterate") {
    const Rat y(1, 8), x(1, 16);
    SUBCASE("empty graph forwards Sparser") {
        Graph g = make_empty(64);
        auto out = house2_iterate(g, x, y, kProf);
        CHECK(out.kind == R1Kind::Sparser);
        check_outcome_verifies(out, g);
    }
    SUBCASE("very sparse house-free graphs give verified outcomes") {
        // at demo scale c*y^3-sparsity caps the max degree at 2 for n = 512
        const Rat y2(1, 4), x2(1, 8);
        Graph matching(512);
        for (int i = 0; i < 100; ++i) matching.add_edge(2 * i, 2 * i + 1);
        Graph paths(512);
        for (int i = 0; i < 60; ++i) {
            paths.add_edge(3 * i, 3 * i + 1);
            paths.add_edge(3 * i + 1, 3 * i + 2);
        }
        for (const Graph& g : {matching, paths}) {
            REQUIRE(is_x_sparse(g, kProf.c * y2 * y2 * y2));
            auto out = house2_iterate(g, x2, y2, kProf);
            check_outcome_verifies(out, g);
        }
    }
}

TEST_CASE("house3_sparsify") {
    SUBCASE("single vertex -> DegenerateInput") {
        try {
            (void)house3_sparsify(make_complete(1), Rat(1, 8), kProf);
            FAIL("expected DegenerateInput");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DegenerateInput);
        }
    }
    SUBCASE("edgeless graph takes the escape partition") {
        // xi = c^16 is so small that only (near-)edgeless graphs satisfy the
        // sparsity hypothesis at desk scale
        Graph g = make_empty(256);
        auto out = house3_sparsify(g, Rat(1, 8), kProf);
        CHECK((out.kind == R1Kind::XSparseBlockade || out.kind == R1Kind::PureBlockade ||
               out.kind == R1Kind::Sparser));
        check_outcome_verifies(out, g);
    }
    SUBCASE("a graph with edges fails the xi-sparsity precondition") {
        Graph g(256);
        for (int i = 0; i < 8; ++i) g.add_edge(2 * i, 2 * i + 1);
        try {
            (void)house3_sparsify(g, Rat(1, 8), kProf);
            FAIL("expected PreconditionViolated");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PreconditionViolated);
        }
    }
}

TEST_CASE("house4_blockade") {
    SUBCASE("complete graph -> complete blockade via the complement branch") {
        Graph g = make_complete(64);
        auto out = house4_blockade(g, Rat(1, 8), kProf);
        CHECK(out.kind == R1Kind::PureBlockade);
        CHECK(out.blockade.length() >= 2);
        check_outcome_verifies(out, g);
    }
    SUBCASE("empty graph") {
        Graph g = make_empty(64);
        auto out = house4_blockade(g, Rat(1, 8), kProf);
        check_outcome_verifies(out, g);
    }
    SUBCASE("cograph corpus") {
        for (uint64_t seed = 0; seed < 8; ++seed) {
            GeneratorSpec spec;
            spec.family = Family::Cograph;
            spec.n = 96;
            spec.seed = seed;
            Graph g = generate(spec);
            auto out = house4_blockade(g, Rat(1, 8), kProf);
            check_outcome_verifies(out, g);
        }
    }
}

TEST_CASE("refine_layout and epsone_blockade") {
    SUBCASE("complete graph: every pair complete") {
        Graph g = make_complete(48);
        auto out = epsone_blockade(g, Rat(1, 4), kProf);
        CHECK(out.kind == R1Kind::Semisparse);
        check_outcome_verifies(out, g);
        const auto& tags = out.tags;
        for (int i = 0; i < tags.length; ++i)
            for (int j = i + 1; j < tags.length; ++j)
                CHECK((tags.at(i, j) == PairRelation::Complete ||
                       tags.at(i, j) == PairRelation::Anticomplete ||
                       tags.at(i, j) == PairRelation::WeaklySparse ||
                       tags.at(i, j) == PairRelation::Sparse));
    }
    SUBCASE("cographs never leave a mixed pair") {
        for (uint64_t seed = 0; seed < 8; ++seed) {
            GeneratorSpec spec;
            spec.family = Family::Cograph;
            spec.n = 64;
            spec.seed = 100 + seed;
            Graph g = generate(spec);
            auto out = epsone_blockade(g, Rat(1, 4), kProf);
            CHECK(out.kind == R1Kind::Semisparse);
            check_outcome_verifies(out, g);
            for (int i = 0; i < out.tags.length; ++i)
                for (int j = i + 1; j < out.tags.length; ++j)
                    CHECK(out.tags.at(i, j) != PairRelation::Mixed);
        }
    }
    SUBCASE("finder contract breach is flagged") {
        BlockFinder bad = [](const Graph&, const Bitset& part) -> std::optional<Blockade> {
            Blockade b;
            b.blocks = {part, part};  // overlapping blocks: contract breach
            b.declared_length = 2;
            b.declared_width = 1;
            return b;
        };
        try {
            (void)refine_layout(make_complete(16), Rat(1, 4), 2, bad, kProf);
            FAIL("expected FinderContractBreach");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::FinderContractBreach);
        }
    }
    SUBCASE("layout double-entry recount") {
        Graph host = make_complete_multipartite({3, 3, 3});
        Layout l;
        l.pattern = make_complete(3);
        Bitset p0(9), p1(9), p2(9);
        for (int i = 0; i < 3; ++i) {
            p0.set(i);
            p1.set(3 + i);
            p2.set(6 + i);
        }
        l.parts = {p0, p1, p2};
        auto [decided, wrong] = l.recount(host);
        l.decided_count = decided;
        l.wrong_count = wrong;
        CHECK(l.valid(host));
        CHECK(decided == 27);
        CHECK(wrong == 0);
        // tamper with the stored counts: validity must fail
        l.decided_count += 1;
        CHECK_FALSE(l.valid(host));
    }
}
