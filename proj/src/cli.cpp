#include "blockade/cli.hpp"

#include "blockade/certificates.hpp"
#include "blockade/errors.hpp"
#include "blockade/lab.hpp"
#include "blockade/round2.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace blockade {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCertRejected = 4;
constexpr int kExitInternal = 5;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::ParseError: return kExitParse;
        case ErrorKind::PreconditionViolated:
        case ErrorKind::DegenerateInput:
        case ErrorKind::SamplingBudgetExhausted: return kExitPrecondition;
        case ErrorKind::InternalInvariantViolated:
        case ErrorKind::FinderContractBreach: return kExitInternal;
    }
    return kExitInternal;
}

ConstantsProfile resolve_profile(const RunConfig& cfg) {
    std::string name = cfg.profile;
    if (name.empty()) {
        const char* env = std::getenv("BLOCKADE_PROFILE");
        name = env && *env ? env : "demo-small";
    }
    ConstantsProfile prof = ConstantsProfile::by_name(name);
    for (const auto& [symbol, value] : cfg.overrides)
        prof.apply_override(symbol, rat_parse(value));
    return prof;
}

Graph load_input(const RunConfig& cfg) {
    if (cfg.input_path.empty()) throw parse_error("missing input path");
    Graph g = read_graph_file(cfg.input_path);
    return cfg.complement ? g.complement() : g;
}

Family family_from_name(const std::string& s) {
    if (s == "cograph") return Family::Cograph;
    if (s == "substitution") return Family::Substitution;
    if (s == "sparse-random") return Family::SparseRandomFiltered;
    throw parse_error("unknown family: " + s);
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    if (cfg.exclude != "p5" && cfg.exclude != "house")
        throw parse_error("--exclude must be p5 or house");
    Graph g = load_input(cfg);
    const Graph& pat = named_pattern(cfg.exclude);
    if (auto copy = find_induced_copy(g, pat)) {
        out << "not in class: induced " << cfg.exclude << " at";
        for (int v : *copy) out << ' ' << v;
        out << '\n';
    } else {
        out << "in class: no induced " << cfg.exclude << '\n';
    }
    return kExitOk;
}

int cmd_extract(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_input(cfg);
    ConstantsProfile prof = resolve_profile(cfg);
    Round2Outcome r;
    if (cfg.pipeline == "polynomial_rodl")
        r = polynomial_rodl(g, rat_parse(cfg.eps), prof, cfg.seed);
    else if (cfg.pipeline == "eh_extract")
        r = eh_extract(g, prof, cfg.seed);
    else
        throw parse_error("unknown pipeline: " + cfg.pipeline);
    if (cfg.output_path.empty())
        out << certificate_to_json(r.cert);
    else
        write_certificate_file(cfg.output_path, r.cert);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_input(cfg);
    if (cfg.cert_path.empty()) throw parse_error("missing certificate path");
    Certificate cert = read_certificate_file(cfg.cert_path);
    Verdict v = verify_certificate(cert, g);
    if (v.accepted) {
        out << "accepted: " << cert_kind_name(cert.kind) << " (" << cert.lemma_id << ")\n";
        return kExitOk;
    }
    out << "rejected: " << cert_kind_name(cert.kind) << " (" << cert.lemma_id << ")\n";
    for (const auto& f : v.failures) out << "  - " << f << '\n';
    return kExitCertRejected;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    GeneratorSpec spec;
    spec.family = family_from_name(cfg.family);
    spec.n = cfg.n;
    spec.seed = cfg.seed;
    spec.density = rat_parse(cfg.density);
    spec.complement_of = cfg.complement;
    Graph g = generate(spec);
    if (cfg.output_path.empty()) throw parse_error("gen requires an output path");
    write_graph_file(cfg.output_path, g);
    out << "wrote " << cfg.output_path << ": n=" << g.size() << " m=" << g.edge_count()
        << '\n';
    return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    ConstantsProfile prof = resolve_profile(cfg);
    std::vector<HarnessInstance> batch;
    Family fam = family_from_name(cfg.family);
    for (int n : cfg.bench_sizes)
        for (int rep = 0; rep < cfg.bench_per_size; ++rep) {
            HarnessInstance inst;
            inst.spec.family = fam;
            inst.spec.n = n;
            inst.spec.seed = cfg.seed + uint64_t(rep) + uint64_t(n) * 1000003ULL;
            inst.spec.density = rat_parse(cfg.density);
            inst.spec.complement_of = cfg.complement;
            inst.pipeline = cfg.pipeline;
            batch.push_back(std::move(inst));
        }
    HarnessOptions opts;
    opts.threads = cfg.threads;
    std::string csv = exponent_harness(batch, prof, opts);
    if (cfg.output_path.empty()) {
        out << csv;
    } else {
        std::ofstream f(cfg.output_path, std::ios::binary);
        if (!f) throw parse_error("cannot open output: " + cfg.output_path);
        f << csv;
        out << "wrote " << cfg.output_path << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "check") return cmd_check(cfg, out);
        if (cfg.command == "extract") return cmd_extract(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "gen") return cmd_gen(cfg, out);
        if (cfg.command == "bench") return cmd_bench(cfg, out);
        throw parse_error("unknown command: " + cfg.command);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace blockade
