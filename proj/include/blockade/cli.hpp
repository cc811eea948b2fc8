#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace blockade {

// Exit codes of run(): 0 success, 2 parse error, 3 precondition violated
// (incl. degenerate input and exhausted sampling budgets), 4 certificate
// rejected, 5 internal invariant violated.
struct RunConfig {
    std::string command;  // check | extract | verify | gen | bench

    std::string input_path;
    std::string output_path;  // empty = stdout for extract/bench
    std::string cert_path;    // verify

    std::string eps = "1/4";
    std::string profile;  // empty = BLOCKADE_PROFILE env or "demo-small"
    std::vector<std::pair<std::string, std::string>> overrides;
    uint64_t seed = 0;
    bool complement = false;      // treat input as P5-free; work in the complement
    std::string exclude = "house";  // check: p5 | house
    std::string pipeline = "polynomial_rodl";  // extract/bench: or eh_extract

    // gen / bench
    std::string family = "cograph";  // cograph | substitution | sparse-random
    int n = 32;
    std::string density = "1/12";
    std::vector<int> bench_sizes = {64, 128, 256};
    int bench_per_size = 3;
    int threads = 0;
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace blockade
