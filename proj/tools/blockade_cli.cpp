#include "blockade/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"blockade: certificate-producing sparsification pipelines for "
                 "house-free graphs"};
    app.require_subcommand(1);

    blockade::RunConfig cfg;
    std::vector<std::string> overrides;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", cfg.input_path, "input graph file (edge list or DIMACS)");
        sub->add_option("-o,--output", cfg.output_path, "output path (default stdout)");
        sub->add_option("--profile", cfg.profile,
                        "constants profile: demo-small | paper (default from "
                        "BLOCKADE_PROFILE or demo-small)");
        sub->add_option("--set", overrides, "profile override, symbol=value (repeatable)");
        sub->add_option("--seed", cfg.seed, "RNG seed (default 0)");
        sub->add_flag("--complement", cfg.complement,
                      "treat the input as P5-free and work in its complement");
    };

    CLI::App* check = app.add_subcommand("check", "test class membership, print any witness");
    add_common(check);
    check->add_option("--exclude", cfg.exclude, "forbidden pattern: p5 | house");

    CLI::App* extract = app.add_subcommand("extract", "run a pipeline, write its certificate");
    add_common(extract);
    extract->add_option("--eps", cfg.eps, "epsilon as num/den or decimal (default 1/4)");
    extract->add_option("--pipeline", cfg.pipeline, "polynomial_rodl | eh_extract");

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate against a graph");
    add_common(verify);
    verify->add_option("--cert", cfg.cert_path, "certificate JSON path")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate an in-class graph");
    add_common(gen);
    gen->add_option("--family", cfg.family, "cograph | substitution | sparse-random");
    gen->add_option("-n,--size", cfg.n, "vertex count");
    gen->add_option("--density", cfg.density, "edge probability for sparse-random");

    CLI::App* bench = app.add_subcommand("bench", "run the exponent harness, write CSV");
    add_common(bench);
    bench->add_option("--family", cfg.family, "cograph | substitution | sparse-random");
    bench->add_option("--sizes", cfg.bench_sizes, "instance sizes");
    bench->add_option("--per-size", cfg.bench_per_size, "instances per size");
    bench->add_option("--pipeline", cfg.pipeline, "polynomial_rodl | eh_extract");
    bench->add_option("--density", cfg.density, "edge probability for sparse-random");
    bench->add_option("--threads", cfg.threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // flag/usage errors are parse errors
    }

    for (const std::string& ov : overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --set expects symbol=value, got " << ov << '\n';
            return 2;
        }
        cfg.overrides.emplace_back(ov.substr(0, eq), ov.substr(eq + 1));
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return blockade::run(cfg, std::cout, std::cerr);
}
