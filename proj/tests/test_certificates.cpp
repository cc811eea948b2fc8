#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockade/certificates.hpp"
#include "blockade/errors.hpp"
#include "blockade/graph.hpp"
#include "blockade/rng.hpp"

#include <string>

using namespace blockade;

namespace {

const ConstantsProfile kProf = ConstantsProfile::demo_small();

Bitset bits(int n, std::initializer_list<int> vs) {
    Bitset s(n);
    for (int v : vs) s.set(v);
    return s;
}

}  // namespace

TEST_CASE("classify_pairs: anticomplete, complete, matching") {
    SUBCASE("two blocks, no edges between") {
        Graph g(4);
        Blockade b;
        b.blocks = {bits(4, {0, 1}), bits(4, {2, 3})};
        auto m = classify_pairs(g, b, Rat(1, 4));
        CHECK(m.at(0, 1) == PairRelation::Anticomplete);
    }
    SUBCASE("two blocks fully joined") {
        Graph g = make_complete_multipartite({2, 2});
        Blockade b;
        b.blocks = {bits(4, {0, 1}), bits(4, {2, 3})};
        auto m = classify_pairs(g, b, Rat(1, 4));
        CHECK(m.at(0, 1) == PairRelation::Complete);
    }
    SUBCASE("sides of a perfect matching of size 8 at x=1/8") {
        Graph g(16);
        Blockade b;
        Bitset a(16), c(16);
        for (int i = 0; i < 8; ++i) {
            g.add_edge(i, 8 + i);
            a.set(i);
            c.set(8 + i);
        }
        b.blocks = {a, c};
        auto m = classify_pairs(g, b, Rat(1, 8));
        // directed sparse tag applies (and weak sparsity holds too)
        CHECK((m.at(0, 1) == PairRelation::Sparse ||
               m.at(0, 1) == PairRelation::WeaklySparse));
        CHECK(is_weakly_sparse(g, a, c, Rat(1, 8)));
    }
}

TEST_CASE("verify_certificate: clique accept and reject with witness") {
    Graph k5 = make_complete(5);
    Certificate ok = make_homset_cert(k5, k5.full_set(), "clique", "test", kProf);
    CHECK(verify_certificate(ok, k5).accepted);

    Graph c5 = make_cycle(5);
    Certificate bad = make_homset_cert(c5, c5.full_set(), "clique", "test", kProf);
    Verdict v = verify_certificate(bad, c5);
    CHECK_FALSE(v.accepted);
    REQUIRE_FALSE(v.failures.empty());
    bool mentions_pair = false;
    for (const auto& f : v.failures)
        if (f.find("adjacent") != std::string::npos) mentions_pair = true;
    CHECK(mentions_pair);
}

TEST_CASE("checker completeness: mutations of an accepted certificate reject") {
    Graph g = make_complete_multipartite({3, 3});
    Blockade b;
    b.blocks = {bits(6, {0, 1, 2}), bits(6, {3, 4, 5})};
    b.declared_length = 2;
    b.declared_width = 3;
    Certificate base = make_blockade_cert(g, b, BlockadeKind::Complete, 0, "test", kProf);
    REQUIRE(verify_certificate(base, g).accepted);

    SUBCASE("drop a vertex from a block (width claim now false)") {
        Certificate m = base;
        m.blocks[0].pop_back();
        CHECK_FALSE(verify_certificate(m, g).accepted);
    }
    SUBCASE("move a vertex between blocks (not complete any more)") {
        Certificate m = base;
        m.blocks[0].pop_back();
        m.blocks[1].push_back(2);
        CHECK_FALSE(verify_certificate(m, g).accepted);
    }
    SUBCASE("flip the blockade kind") {
        Certificate m = base;
        m.blockade_kind = BlockadeKind::Anticomplete;
        CHECK_FALSE(verify_certificate(m, g).accepted);
    }
    SUBCASE("raise declared width above a true block size") {
        Certificate m = base;
        m.declared_width = 4;
        CHECK_FALSE(verify_certificate(m, g).accepted);
    }
    SUBCASE("graph hash mismatch is a structural error") {
        Certificate m = base;
        m.graph_hash ^= 1;
        Verdict v = verify_certificate(m, g);
        CHECK_FALSE(v.accepted);
        CHECK(v.structural_error);
    }
    SUBCASE("out-of-range vertex is a structural error") {
        Certificate m = base;
        m.blocks[0].push_back(99);
        Verdict v = verify_certificate(m, g);
        CHECK_FALSE(v.accepted);
        CHECK(v.structural_error);
    }
}

TEST_CASE("JSON round-trip is byte-identical and versioned") {
    Graph g = make_complete(4);
    Certificate c = make_homset_cert(g, g.full_set(), "clique", "test", kProf);
    std::string j1 = certificate_to_json(c);
    Certificate back = certificate_from_json(j1);
    std::string j2 = certificate_to_json(back);
    CHECK(j1 == j2);
    CHECK(verify_certificate(back, g).accepted);

    CHECK_THROWS_AS((void)certificate_from_json("{not json"), Error);
    std::string wrong_version = j1;
    auto pos = wrong_version.find("\"version\": 1");
    REQUIRE(pos != std::string::npos);
    wrong_version.replace(pos, 12, "\"version\": 2");
    CHECK_THROWS_AS((void)certificate_from_json(wrong_version), Error);
}

TEST_CASE("blockade structural validity") {
    Blockade b;
    b.blocks = {bits(6, {0, 1}), bits(6, {1, 2})};  // overlap
    CHECK_FALSE(b.structurally_valid(6));
    b.blocks = {bits(6, {0, 1}), bits(6, {2, 3})};
    b.declared_length = 2;
    b.declared_width = 2;
    CHECK(b.structurally_valid(6));
    b.declared_width = 3;
    CHECK_FALSE(b.structurally_valid(6));
}

TEST_CASE("layout: J-edges force complete pairs; counts recomputable") {
    Graph host = make_complete_multipartite({2, 2, 2});
    Layout l;
    l.pattern = make_complete(3);
    l.parts = {bits(6, {0, 1}), bits(6, {2, 3}), bits(6, {4, 5})};
    auto [decided, wrong] = l.recount(host);
    l.decided_count = decided;
    l.wrong_count = wrong;
    CHECK(l.valid(host));
    CHECK(decided == 12);  // all cross-part pairs among covered vertices
    CHECK(wrong == 0);

    // break a J-edge's completeness
    Layout bad = l;
    bad.pattern = Graph(3);
    bad.pattern.add_edge(0, 1);  // (A0,A1) complete ok
    bad.pattern.add_edge(1, 2);
    // A0-A2 pairs are now wrong (adjacent across a J-non-edge)
    auto [d2, w2] = bad.recount(host);
    CHECK(w2 == 4);
    CHECK(d2 == 12);
}

TEST_CASE("anticomplete pair and comb certificates verify") {
    Graph g(6);
    g.add_edge(0, 1);
    Certificate ap = make_anticomplete_pair_cert(g, bits(6, {0, 1}), bits(6, {3, 4}), 2,
                                                 "test", kProf);
    CHECK(verify_certificate(ap, g).accepted);
    Certificate bad = make_anticomplete_pair_cert(g, bits(6, {0}), bits(6, {1}), 1, "test",
                                                  kProf);
    CHECK_FALSE(verify_certificate(bad, g).accepted);

    // comb: apex 0 complete to {1,2}, apex 3 complete to {4,5}
    Graph h(6);
    h.add_edge(0, 1);
    h.add_edge(0, 2);
    h.add_edge(3, 4);
    h.add_edge(3, 5);
    Comb comb;
    comb.apexes = {0, 3};
    comb.blocks = {bits(6, {1, 2}), bits(6, {4, 5})};
    CHECK(comb.valid(h));
    Certificate cc = make_comb_cert(h, comb, 2, "test", kProf);
    CHECK(verify_certificate(cc, h).accepted);
    h.add_edge(0, 4);  // apex 0 now sees block 1
    CHECK_FALSE(comb.valid(h));
}
