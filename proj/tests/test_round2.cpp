#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockade/errors.hpp"
#include "blockade/lab.hpp"
#include "blockade/round2.hpp"

#include <cmath>

using namespace blockade;

namespace {

const ConstantsProfile kProf = ConstantsProfile::demo_small();

void check_outcome_verifies(const Round2Outcome& out, const Graph& g) {
    Verdict v = verify_certificate(out.cert, g);
    if (!v.accepted)
        for (const auto& f : v.failures) MESSAGE(f);
    CHECK(v.accepted);
}

Graph sparse_random(int n, uint64_t seed, const Rat& density) {
    GeneratorSpec spec;
    spec.family = Family::SparseRandomFiltered;
    spec.n = n;
    spec.seed = seed;
    spec.density = density;
    return generate(spec);
}

}  // namespace

TEST_CASE("house6_step") {
    SUBCASE("empty graph short-circuits to a sparse subset of everything") {
        Graph g = make_empty(64);
        auto out = house6_step(g, Rat(1, 4), kProf, 1);
        CHECK(out.kind == R2Kind::SparseSubset);
        CHECK(int(out.set.count()) == 64);
        check_outcome_verifies(out, g);
    }
    SUBCASE("y-sparse house-free corpus gives verified outcomes") {
        for (uint64_t seed = 0; seed < 6; ++seed) {
            Graph g = sparse_random(96, seed, Rat(1, 45));
            if (!is_x_sparse(g, Rat(1, 4))) continue;
            auto out = house6_step(g, Rat(1, 4), kProf, seed);
            check_outcome_verifies(out, g);
        }
    }
    SUBCASE("precondition: not y-sparse") {
        CHECK_THROWS_AS((void)house6_step(make_complete(32), Rat(1, 4), kProf, 0), Error);
    }
}

TEST_CASE("house7_iterate") {
    SUBCASE("disjoint sparse clusters accumulate anticomplete pairs") {
        // 4 components of 16 vertices each, internally a perfect matching
        Graph g(64);
        for (int c = 0; c < 4; ++c)
            for (int i = 0; i < 8; ++i) g.add_edge(c * 16 + 2 * i, c * 16 + 2 * i + 1);
        REQUIRE(is_x_sparse(g, Rat(1, 16)));
        auto out = house7_iterate(g, Rat(1, 16), kProf, 3);
        check_outcome_verifies(out, g);
        if (out.kind == R2Kind::CompleteOrAnticompleteBlockade ||
            out.kind == R2Kind::CompleteBlockade)
            CHECK(out.blockade.length() >= 2);
    }
    SUBCASE("requires an exact square root of y") {
        Graph g(64);
        CHECK_THROWS_AS((void)house7_iterate(g, Rat(1, 3), kProf, 0), Error);
    }
    SUBCASE("sparse random corpus terminates with verified outcomes") {
        for (uint64_t seed = 20; seed < 24; ++seed) {
            Graph g = sparse_random(128, seed, Rat(1, 48));
            if (!is_x_sparse(g, Rat(1, 16))) continue;
            auto out = house7_iterate(g, Rat(1, 16), kProf, seed);
            check_outcome_verifies(out, g);
        }
    }
}

TEST_CASE("house_final") {
    SUBCASE("single vertex -> Restricted") {
        Graph g = make_complete(1);
        auto out = house_final(g, Rat(1, 4), kProf, 0);
        CHECK(out.kind == R2Kind::Restricted);
        CHECK(out.set.count() >= 1);
        check_outcome_verifies(out, g);
    }
    SUBCASE("small graphs short-circuit to an exact restricted subgraph") {
        Graph g = make_cycle(12);
        auto out = house_final(g, Rat(1, 4), kProf, 0);
        CHECK(out.kind == R2Kind::Restricted);
        CHECK(is_restricted_on(g, out.set, Rat(1, 4)));
        check_outcome_verifies(out, g);
    }
    SUBCASE("large complete graph -> complete blockade") {
        Graph g = make_complete(300);
        auto out = house_final(g, Rat(1, 4), kProf, 0);
        if (out.kind == R2Kind::CompleteOrAnticompleteBlockade ||
            out.kind == R2Kind::CompleteBlockade) {
            CHECK(out.blockade.length() >= 2);
            CHECK(out.blockade.length() <= 4);  // 1/x
        }
        check_outcome_verifies(out, g);
    }
    SUBCASE("sparse random corpus") {
        for (uint64_t seed = 0; seed < 4; ++seed) {
            Graph g = sparse_random(300, 40 + seed, Rat(1, 120));
            auto out = house_final(g, Rat(1, 4), kProf, seed);
            check_outcome_verifies(out, g);
            if (out.kind == R2Kind::CompleteOrAnticompleteBlockade)
                CHECK(out.blockade.length() >= 2);
        }
    }
}

TEST_CASE("cograph_clique_or_stable") {
    SUBCASE("K9 -> clique of 9; C4 -> side of 2") {
        auto out = cograph_clique_or_stable(make_complete(9), kProf);
        CHECK(out.kind == R2Kind::HomSet);
        CHECK(int(out.set.count()) == 9);
        auto out2 = cograph_clique_or_stable(make_cycle(4), kProf);
        CHECK(int(out2.set.count()) >= 2);
    }
    SUBCASE("random cographs reach ceil(sqrt(n)) and agree with brute force") {
        for (uint64_t seed = 0; seed < 20; ++seed) {
            GeneratorSpec spec;
            spec.family = Family::Cograph;
            spec.n = 10 + int(seed * 9 % 190);
            spec.seed = seed;
            Graph g = generate(spec);
            auto out = cograph_clique_or_stable(g, kProf);
            check_outcome_verifies(out, g);
            long s = long(out.set.count());
            CHECK(s * s >= g.size());
            if (g.size() <= kExhaustiveCap) {
                auto [cq, st] = brute_max_hom(g, true);
                CHECK(s <= (out.homset_kind == "clique" ? cq : st));
            }
        }
    }
    SUBCASE("P4 input rejected with a witness") {
        try {
            (void)cograph_clique_or_stable(named_pattern("p4"), kProf);
            FAIL("expected PreconditionViolated");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PreconditionViolated);
        }
    }
}

TEST_CASE("blocks_extract") {
    SUBCASE("finder escape is forwarded") {
        CoBlockadeFinder finder = [](const Graph& f) {
            Round2Outcome o;
            o.kind = R2Kind::Restricted;
            o.threshold = Rat(1, 4);
            o.set = Bitset(f.size());
            o.set.set(0);
            o.cert = make_set_cert(f, CertKind::RestrictedSubgraph, o.set, o.threshold,
                                   "house_final", ConstantsProfile::demo_small());
            return o;
        };
        Graph g = make_complete(16);
        auto out = blocks_extract(g, Rat(1, 4), 4, finder, kProf);
        CHECK(out.kind == R2Kind::Restricted);
        check_outcome_verifies(out, g);
    }
    SUBCASE("driven by house_final over a cograph corpus") {
        for (uint64_t seed = 0; seed < 6; ++seed) {
            GeneratorSpec spec;
            spec.family = Family::Cograph;
            spec.n = 80;
            spec.seed = 7 + seed;
            Graph g = generate(spec);
            CoBlockadeFinder finder = [&](const Graph& f) {
                return house_final(f, Rat(1, 4), kProf, seed);
            };
            auto out = blocks_extract(g, Rat(1, 4), kProf.a, finder, kProf);
            CHECK(out.kind == R2Kind::Restricted);
            CHECK(is_restricted_on(g, out.set, Rat(1, 4)));
            check_outcome_verifies(out, g);
        }
    }
}

TEST_CASE("polynomial_rodl") {
    SUBCASE("complete and empty graphs keep every vertex") {
        for (Graph g : {make_complete(40), make_empty(40)}) {
            auto out = polynomial_rodl(g, Rat(1, 4), kProf, 0);
            CHECK(out.kind == R2Kind::Restricted);
            CHECK(int(out.set.count()) == 40);
            CHECK(out.cert.lemma_id == "polynomial_rodl");
            check_outcome_verifies(out, g);
        }
    }
    SUBCASE("corpus: always a verified restricted subgraph") {
        for (uint64_t seed = 0; seed < 6; ++seed) {
            GeneratorSpec spec;
            spec.family = seed % 2 ? Family::Cograph : Family::SparseRandomFiltered;
            spec.n = 120;
            spec.seed = 50 + seed;
            spec.density = Rat(1, 60);
            Graph g = generate(spec);
            auto out = polynomial_rodl(g, Rat(1, 4), kProf, seed);
            CHECK(is_restricted_on(g, out.set, Rat(1, 4)));
            check_outcome_verifies(out, g);
        }
    }
    SUBCASE("rejects graphs containing a house") {
        Graph g(32);
        Graph h = pattern_house();
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (h.has_edge(i, j)) g.add_edge(i, j);
        CHECK_THROWS_AS((void)polynomial_rodl(g, Rat(1, 4), kProf, 0), Error);
    }
}

TEST_CASE("eh_extract") {
    SUBCASE("complete graph: the whole clique, exponent 1") {
        Graph g = make_complete(50);
        auto out = eh_extract(g, kProf, 0);
        CHECK(out.kind == R2Kind::HomSet);
        CHECK(out.homset_kind == "clique");
        CHECK(int(out.set.count()) == 50);
        check_outcome_verifies(out, g);
        bool saw = false;
        for (const auto& c : out.cert.claims)
            if (c.property == "achieved-exponent" && c.params.count("value") &&
                c.params.at("value") == "1.000000")
                saw = true;
        CHECK(saw);
    }
    SUBCASE("cographs reach at least sqrt(n)") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            GeneratorSpec spec;
            spec.family = Family::Cograph;
            spec.n = 60 + int(seed * 13 % 100);
            spec.seed = seed;
            Graph g = generate(spec);
            auto out = eh_extract(g, kProf, seed);
            long s = long(out.set.count());
            CHECK(s * s >= g.size());
            check_outcome_verifies(out, g);
        }
    }
    SUBCASE("never exceeds the exact optimum on small graphs") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            GeneratorSpec spec;
            spec.family = Family::SparseRandomFiltered;
            spec.n = 14;
            spec.seed = seed;
            spec.density = Rat(1, 7);
            Graph g = generate(spec);
            auto out = eh_extract(g, kProf, seed);
            auto [cq, st] = brute_max_hom(g, true);
            int bound = out.homset_kind == "clique" ? cq : st;
            CHECK(int(out.set.count()) <= bound);
            check_outcome_verifies(out, g);
        }
    }
    SUBCASE("works on inputs outside the house-free class") {
        Graph g(16);
        Graph h = pattern_house();
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (h.has_edge(i, j)) g.add_edge(i, j);
        for (int i = 5; i < 16; ++i) g.add_edge(0, i);
        auto out = eh_extract(g, kProf, 0);
        CHECK(out.set.count() >= 1);
        check_outcome_verifies(out, g);
    }
}
