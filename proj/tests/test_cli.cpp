#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockade/cli.hpp"
#include "blockade/graph.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace blockade;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cfg(const RunConfig& cfg) {
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "/tmp/blockade-cli-" + name; }

void write_graph_to(const std::string& path, const Graph& g) {
    std::ofstream os(path);
    write_dimacs(os, g);
}

}  // namespace

TEST_CASE("check: membership report and exit 0 either way") {
    std::string p = temp_path("p5.graph");
    write_graph_to(p, pattern_p5());

    RunConfig cfg;
    cfg.command = "check";
    cfg.input_path = p;
    cfg.exclude = "p5";
    auto r = run_cfg(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.find("not in class") != std::string::npos);

    cfg.exclude = "house";
    r = run_cfg(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.find("in class") == 0);
}

TEST_CASE("extract then verify round-trips through files") {
    std::string gp = temp_path("cograph.graph");
    std::string cp = temp_path("cert.json");
    {
        RunConfig gen;
        gen.command = "gen";
        gen.family = "cograph";
        gen.n = 40;
        gen.seed = 5;
        gen.output_path = gp;
        CHECK(run_cfg(gen).code == 0);
    }
    {
        RunConfig ex;
        ex.command = "extract";
        ex.input_path = gp;
        ex.output_path = cp;
        ex.pipeline = "polynomial_rodl";
        CHECK(run_cfg(ex).code == 0);
    }
    RunConfig ver;
    ver.command = "verify";
    ver.input_path = gp;
    ver.cert_path = cp;
    auto r = run_cfg(ver);
    CHECK(r.code == 0);
    CHECK(r.out.find("accepted") != std::string::npos);

    SUBCASE("verifying against the wrong graph exits 4") {
        std::string other = temp_path("other.graph");
        write_graph_to(other, make_complete(40));
        ver.input_path = other;
        auto r2 = run_cfg(ver);
        CHECK(r2.code == 4);
        CHECK(r2.out.find("rejected") != std::string::npos);
    }
    SUBCASE("tampered certificate exits 4") {
        std::ifstream is(cp);
        std::string text((std::istreambuf_iterator<char>(is)),
                         std::istreambuf_iterator<char>());
        auto pos = text.find("\"graph_hash\": ");
        REQUIRE(pos != std::string::npos);
        {
            text.insert(pos + 14, "9");
            std::string tp = temp_path("tampered.json");
            std::ofstream(tp) << text;
            ver.cert_path = tp;
            auto r3 = run_cfg(ver);
            CHECK(r3.code != 0);
        }
    }
}

TEST_CASE("extract writes the certificate to stdout by default") {
    std::string gp = temp_path("stdout.graph");
    write_graph_to(gp, make_complete(24));
    RunConfig ex;
    ex.command = "extract";
    ex.input_path = gp;
    ex.pipeline = "eh_extract";
    auto r = run_cfg(ex);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"version\": 1") != std::string::npos);
    CHECK(r.out.find("\"lemma_id\"") != std::string::npos);
}

TEST_CASE("bench emits a CSV with summary rows") {
    RunConfig b;
    b.command = "bench";
    b.family = "cograph";
    b.bench_sizes = {32};
    b.bench_per_size = 2;
    b.threads = 2;
    auto r = run_cfg(b);
    CHECK(r.code == 0);
    CHECK(r.out.find("instance_id,family,n,seed,pipeline") == 0);
    CHECK(r.out.find("median") != std::string::npos);
}

TEST_CASE("error handling and exit codes") {
    SUBCASE("unknown command -> 2") {
        RunConfig cfg;
        cfg.command = "frobnicate";
        CHECK(run_cfg(cfg).code == 2);
    }
    SUBCASE("missing input file -> 2") {
        RunConfig cfg;
        cfg.command = "check";
        cfg.input_path = "/nonexistent/g.graph";
        CHECK(run_cfg(cfg).code == 2);
    }
    SUBCASE("bad rational override -> 2") {
        std::string gp = temp_path("ov.graph");
        write_graph_to(gp, make_complete(8));
        RunConfig cfg;
        cfg.command = "extract";
        cfg.input_path = gp;
        cfg.overrides = {{"c", "not-a-rational"}};
        CHECK(run_cfg(cfg).code == 2);
    }
    SUBCASE("pipeline precondition failure -> 3") {
        std::string gp = temp_path("house.graph");
        write_graph_to(gp, pattern_house());
        RunConfig cfg;
        cfg.command = "extract";
        cfg.input_path = gp;
        cfg.pipeline = "polynomial_rodl";
        CHECK(run_cfg(cfg).code == 3);
    }
}

TEST_CASE("profile resolution honours the environment variable") {
    std::string gp = temp_path("prof.graph");
    write_graph_to(gp, make_complete(16));
    RunConfig cfg;
    cfg.command = "extract";
    cfg.input_path = gp;
    cfg.pipeline = "eh_extract";

    setenv("BLOCKADE_PROFILE", "demo-small", 1);
    auto r1 = run_cfg(cfg);
    CHECK(r1.code == 0);
    CHECK(r1.out.find("demo-small") != std::string::npos);

    setenv("BLOCKADE_PROFILE", "no-such-profile", 1);
    CHECK(run_cfg(cfg).code == 2);
    unsetenv("BLOCKADE_PROFILE");

    cfg.profile = "paper";
    auto r2 = run_cfg(cfg);
    CHECK(r2.code == 0);  // eh_extract has no paper-scale size precondition here
}

TEST_CASE("complement flag works from P5-free input") {
    // K6 is P5-free; its complement (the empty graph) is house-free
    std::string gp = temp_path("compl.graph");
    write_graph_to(gp, make_complete(6));
    RunConfig cfg;
    cfg.command = "check";
    cfg.input_path = gp;
    cfg.complement = true;
    cfg.exclude = "house";
    auto r = run_cfg(cfg);
    CHECK(r.code == 0);
    CHECK(r.out.find("in class") == 0);
}
