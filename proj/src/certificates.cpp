#include "blockade/certificates.hpp"

#include "blockade/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace blockade {

using nlohmann::json;

// ---- Blockade ---------------------------------------------------------------

int Blockade::min_block_size() const {
    int m = blocks.empty() ? 0 : blocks[0].count();
    for (const auto& b : blocks) m = std::min(m, b.count());
    return m;
}

bool Blockade::structurally_valid(int host_n, std::string* why) const {
    Bitset seen(host_n);
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].universe() != host_n) {
            if (why) *why = "block universe mismatch";
            return false;
        }
        if (seen.intersects(blocks[i])) {
            if (why) *why = "blocks not pairwise disjoint";
            return false;
        }
        seen |= blocks[i];
    }
    if (length() < declared_length) {
        if (why) *why = "length below declared_length";
        return false;
    }
    for (const auto& b : blocks)
        if (Rat(b.count()) < declared_width) {
            if (why) *why = "block narrower than declared_width";
            return false;
        }
    return true;
}

// ---- pair classification -------------------------------------------------

std::string pair_relation_name(PairRelation r) {
    switch (r) {
        case PairRelation::Complete: return "complete";
        case PairRelation::Anticomplete: return "anticomplete";
        case PairRelation::Sparse: return "sparse";
        case PairRelation::WeaklySparse: return "weakly-sparse";
        case PairRelation::Mixed: return "mixed";
    }
    return "?";
}

PairRelation PairRelationMatrix::at(int i, int j) const {
    // upper triangle, row i, col j>i
    int idx = i * (2 * length - i - 1) / 2 + (j - i - 1);
    return tags[size_t(idx)];
}

PairRelationMatrix classify_pairs(const Graph& g, const Blockade& b, const Rat& x) {
    PairRelationMatrix m;
    m.length = b.length();
    m.threshold = x;
    for (int i = 0; i < b.length(); ++i) {
        for (int j = i + 1; j < b.length(); ++j) {
            const Bitset &bi = b.blocks[size_t(i)], &bj = b.blocks[size_t(j)];
            PairRelation r;
            if (bi.none() || bj.none())
                r = PairRelation::Anticomplete;
            else if (is_anticomplete_pair(g, bi, bj))
                r = PairRelation::Anticomplete;
            else if (is_complete_pair(g, bi, bj))
                r = PairRelation::Complete;
            else if (is_sparse_to(g, bj, bi, x))
                r = PairRelation::Sparse;
            else if (is_weakly_sparse(g, bi, bj, x))
                r = PairRelation::WeaklySparse;
            else
                r = PairRelation::Mixed;
            m.tags.push_back(r);
        }
    }
    return m;
}

// ---- Comb -----------------------------------------------------------------

bool Comb::valid(const Graph& g, std::string* why) const {
    auto fail = [&](const std::string& w) {
        if (why) *why = w;
        return false;
    };
    if (apexes.size() != blocks.size()) return fail("apex/block count mismatch");
    Bitset seen(g.size());
    for (int a : apexes) {
        if (a < 0 || a >= g.size()) return fail("apex out of range");
        if (seen.test(a)) return fail("duplicate apex");
        seen.set(a);
    }
    for (const auto& b : blocks) {
        if (b.universe() != g.size()) return fail("block universe mismatch");
        if (seen.intersects(b)) return fail("apexes/blocks not pairwise disjoint");
        seen |= b;
    }
    for (size_t i = 0; i < apexes.size(); ++i)
        for (size_t j = 0; j < blocks.size(); ++j) {
            if (i == j) {
                if (!blocks[j].is_subset_of(g.row(apexes[i])))
                    return fail("apex not complete to its block");
            } else if (g.row(apexes[i]).intersects(blocks[j])) {
                return fail("apex has a neighbour in a foreign block");
            }
        }
    return true;
}

// ---- Layout ------------------------------------------------------------------

std::pair<long, long> Layout::recount(const Graph& host) const {
    long decided = 0, wrong = 0;
    int q = int(parts.size());
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            long ni = parts[size_t(i)].count(), nj = parts[size_t(j)].count();
            decided += ni * nj;
            if (!pattern.has_edge(i, j))
                wrong += edges_between(host, parts[size_t(i)], parts[size_t(j)]);
        }
    return {decided, wrong};
}

bool Layout::valid(const Graph& host, std::string* why) const {
    auto fail = [&](const std::string& w) {
        if (why) *why = w;
        return false;
    };
    if (pattern.size() != int(parts.size())) return fail("pattern/parts size mismatch");
    Bitset seen(host.size());
    for (const auto& p : parts) {
        if (p.none()) return fail("empty part");
        if (seen.intersects(p)) return fail("parts not disjoint");
        seen |= p;
    }
    for (int i = 0; i < pattern.size(); ++i)
        for (int j = i + 1; j < pattern.size(); ++j)
            if (pattern.has_edge(i, j) &&
                !is_complete_pair(host, parts[size_t(i)], parts[size_t(j)]))
                return fail("pattern edge without complete pair");
    auto [decided, wrong] = recount(host);
    if (decided != decided_count) return fail("decided_count stale");
    if (wrong != wrong_count) return fail("wrong_count stale");
    return true;
}

// ---- certificate helpers --------------------------------------------------

std::string cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::RestrictedSubgraph: return "restricted-subgraph";
        case CertKind::BlockadeCert: return "blockade";
        case CertKind::CombCert: return "comb";
        case CertKind::AnticompletePair: return "anticomplete-pair";
        case CertKind::HomSet: return "hom-set";
        case CertKind::SparseSubset: return "sparse-subset";
    }
    return "?";
}

std::string blockade_kind_name(BlockadeKind k) {
    switch (k) {
        case BlockadeKind::Pure: return "pure";
        case BlockadeKind::Complete: return "complete";
        case BlockadeKind::Anticomplete: return "anticomplete";
        case BlockadeKind::XSparse: return "x-sparse";
        case BlockadeKind::Semisparse: return "semisparse";
    }
    return "?";
}

CertKind cert_kind_from_name(const std::string& s) {
    for (CertKind k : {CertKind::RestrictedSubgraph, CertKind::BlockadeCert, CertKind::CombCert,
                       CertKind::AnticompletePair, CertKind::HomSet, CertKind::SparseSubset})
        if (cert_kind_name(k) == s) return k;
    throw parse_error("unknown certificate kind: " + s);
}

BlockadeKind blockade_kind_from_name(const std::string& s) {
    for (BlockadeKind k : {BlockadeKind::Pure, BlockadeKind::Complete, BlockadeKind::Anticomplete,
                           BlockadeKind::XSparse, BlockadeKind::Semisparse})
        if (blockade_kind_name(k) == s) return k;
    throw parse_error("unknown blockade kind: " + s);
}

void Certificate::add_claim(const std::string& property,
                            std::initializer_list<std::pair<std::string, std::string>> params) {
    Claim c;
    c.property = property;
    for (const auto& [k, v] : params) c.params[k] = v;
    claims.push_back(std::move(c));
}

namespace {

void fill_provenance(Certificate& c, const std::string& lemma_id,
                     const ConstantsProfile& profile, const Graph& g) {
    c.lemma_id = lemma_id;
    c.profile_name = profile.name;
    c.profile_entries = profile.entries();
    c.graph_hash = g.edge_hash();
}

}  // namespace

Certificate make_blockade_cert(const Graph& g, const Blockade& b, BlockadeKind kind,
                               const Rat& threshold, const std::string& lemma_id,
                               const ConstantsProfile& profile) {
    Certificate c;
    c.kind = CertKind::BlockadeCert;
    c.blockade_kind = kind;
    c.threshold = threshold;
    c.declared_length = b.declared_length;
    c.declared_width = b.declared_width;
    for (const auto& blk : b.blocks) c.blocks.push_back(blk.to_vector());
    fill_provenance(c, lemma_id, profile, g);
    return c;
}

Certificate make_set_cert(const Graph& g, CertKind kind, const Bitset& s, const Rat& threshold,
                          const std::string& lemma_id, const ConstantsProfile& profile) {
    Certificate c;
    c.kind = kind;
    c.threshold = threshold;
    c.blocks.push_back(s.to_vector());
    fill_provenance(c, lemma_id, profile, g);
    return c;
}

Certificate make_homset_cert(const Graph& g, const Bitset& s, const std::string& homset_kind,
                             const std::string& lemma_id, const ConstantsProfile& profile) {
    Certificate c;
    c.kind = CertKind::HomSet;
    c.homset_kind = homset_kind;
    c.blocks.push_back(s.to_vector());
    fill_provenance(c, lemma_id, profile, g);
    return c;
}

Certificate make_anticomplete_pair_cert(const Graph& g, const Bitset& x, const Bitset& y,
                                        const Rat& declared_width, const std::string& lemma_id,
                                        const ConstantsProfile& profile) {
    Certificate c;
    c.kind = CertKind::AnticompletePair;
    c.declared_width = declared_width;
    c.declared_length = 2;
    c.blocks.push_back(x.to_vector());
    c.blocks.push_back(y.to_vector());
    fill_provenance(c, lemma_id, profile, g);
    return c;
}

Certificate make_comb_cert(const Graph& g, const Comb& comb, const Rat& declared_width,
                           const std::string& lemma_id, const ConstantsProfile& profile) {
    Certificate c;
    c.kind = CertKind::CombCert;
    c.declared_width = declared_width;
    c.declared_length = comb.length();
    c.apexes = comb.apexes;
    for (const auto& b : comb.blocks) c.blocks.push_back(b.to_vector());
    fill_provenance(c, lemma_id, profile, g);
    return c;
}

// ---- verification -----------------------------------------------------------

namespace {

bool blocks_in_range(const Certificate& c, int n) {
    for (const auto& blk : c.blocks)
        for (int v : blk)
            if (v < 0 || v >= n) return false;
    for (int a : c.apexes)
        if (a < 0 || a >= n) return false;
    return true;
}

Blockade to_blockade(const Certificate& c, int n) {
    Blockade b;
    for (const auto& blk : c.blocks) b.blocks.push_back(Bitset::from_vector(n, blk));
    b.declared_length = c.declared_length;
    b.declared_width = c.declared_width;
    return b;
}

}  // namespace

Verdict verify_certificate(const Certificate& c, const Graph& g) {
    Verdict v;
    auto fail = [&v](const std::string& w) { v.failures.push_back(w); };

    if (!blocks_in_range(c, g.size())) {
        v.structural_error = true;
        fail("vertex index out of graph range");
        return v;
    }
    for (const auto& blk : c.blocks) {
        Bitset seen(g.size());
        for (int x : blk) {
            if (seen.test(x)) {
                v.structural_error = true;
                fail("duplicate vertex inside a block");
                return v;
            }
            seen.set(x);
        }
    }
    if (c.graph_hash != g.edge_hash()) {
        v.structural_error = true;
        fail("graph hash mismatch");
        return v;
    }

    switch (c.kind) {
        case CertKind::RestrictedSubgraph: {
            if (c.blocks.size() != 1) {
                fail("restricted-subgraph wants exactly one set");
                break;
            }
            Bitset s = Bitset::from_vector(g.size(), c.blocks[0]);
            if (!is_restricted_on(g, s, c.threshold))
                fail("subgraph is not " + rat_to_string(c.threshold) + "-restricted");
            break;
        }
        case CertKind::SparseSubset: {
            if (c.blocks.size() != 1) {
                fail("sparse-subset wants exactly one set");
                break;
            }
            Bitset s = Bitset::from_vector(g.size(), c.blocks[0]);
            if (!is_x_sparse_on(g, s, c.threshold))
                fail("subset is not " + rat_to_string(c.threshold) + "-sparse");
            break;
        }
        case CertKind::HomSet: {
            if (c.blocks.size() != 1) {
                fail("hom-set wants exactly one set");
                break;
            }
            Bitset s = Bitset::from_vector(g.size(), c.blocks[0]);
            if (c.homset_kind == "clique") {
                for (int x = s.first(); x >= 0; x = s.next(x)) {
                    Bitset rest = s;
                    rest.reset(x);
                    if (!rest.is_subset_of(g.row(x))) {
                        int y = (rest - g.row(x)).first();
                        fail("non-adjacent pair {" + std::to_string(x) + "," +
                             std::to_string(y) + "} in claimed clique");
                        break;
                    }
                }
            } else if (c.homset_kind == "stable") {
                for (int x = s.first(); x >= 0; x = s.next(x)) {
                    if (g.row(x).intersects(s)) {
                        int y = (g.row(x) & s).first();
                        fail("adjacent pair {" + std::to_string(x) + "," + std::to_string(y) +
                             "} in claimed stable set");
                        break;
                    }
                }
            } else {
                v.structural_error = true;
                fail("unknown hom-set kind: " + c.homset_kind);
                return v;
            }
            break;
        }
        case CertKind::AnticompletePair: {
            if (c.blocks.size() != 2) {
                fail("anticomplete-pair wants exactly two sets");
                break;
            }
            Bitset x = Bitset::from_vector(g.size(), c.blocks[0]);
            Bitset y = Bitset::from_vector(g.size(), c.blocks[1]);
            if (x.intersects(y)) {
                fail("sides overlap");
                break;
            }
            if (!is_anticomplete_pair(g, x, y)) fail("crossing edge between the sides");
            if (Rat(x.count()) < c.declared_width || Rat(y.count()) < c.declared_width)
                fail("side narrower than declared width " + rat_to_string(c.declared_width));
            break;
        }
        case CertKind::CombCert: {
            Comb comb;
            comb.apexes = c.apexes;
            for (const auto& blk : c.blocks)
                comb.blocks.push_back(Bitset::from_vector(g.size(), blk));
            std::string why;
            if (!comb.valid(g, &why)) fail("comb: " + why);
            for (const auto& b : comb.blocks)
                if (Rat(b.count()) < c.declared_width) {
                    fail("comb block narrower than declared width");
                    break;
                }
            break;
        }
        case CertKind::BlockadeCert: {
            Blockade b = to_blockade(c, g.size());
            std::string why;
            if (!b.structurally_valid(g.size(), &why)) {
                fail("blockade: " + why);
                break;
            }
            const Rat& x = c.threshold;
            for (int i = 0; i < b.length(); ++i)
                for (int j = i + 1; j < b.length(); ++j) {
                    const Bitset &bi = b.blocks[size_t(i)], &bj = b.blocks[size_t(j)];
                    auto pair_id = [&] {
                        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    };
                    bool empty_side = bi.none() || bj.none();
                    switch (c.blockade_kind) {
                        case BlockadeKind::Pure:
                            if (!empty_side && !is_complete_pair(g, bi, bj) &&
                                !is_anticomplete_pair(g, bi, bj))
                                fail("pair " + pair_id() + " neither complete nor anticomplete");
                            break;
                        case BlockadeKind::Complete:
                            if (!is_complete_pair(g, bi, bj))
                                fail("pair " + pair_id() + " not complete");
                            break;
                        case BlockadeKind::Anticomplete:
                            if (!is_anticomplete_pair(g, bi, bj))
                                fail("pair " + pair_id() + " not anticomplete");
                            break;
                        case BlockadeKind::XSparse:
                            if (!is_sparse_to(g, bj, bi, x))
                                fail("block " + std::to_string(j) + " not " + rat_to_string(x) +
                                     "-sparse to block " + std::to_string(i));
                            break;
                        case BlockadeKind::Semisparse:
                            if (!empty_side && !is_complete_pair(g, bi, bj) &&
                                !is_weakly_sparse(g, bi, bj, x))
                                fail("pair " + pair_id() + " neither complete nor weakly " +
                                     rat_to_string(x) + "-sparse");
                            break;
                    }
                }
            break;
        }
    }

    v.accepted = v.failures.empty();
    return v;
}

// ---- JSON ----------------------------------------------------------------------

std::string certificate_to_json(const Certificate& c) {
    json j;
    j["version"] = c.version;
    j["lemma_id"] = c.lemma_id;
    json prof;
    prof["name"] = c.profile_name;
    json entries = json::object();
    for (const auto& [k, vq] : c.profile_entries) entries[k] = rat_to_string(vq);
    prof["entries"] = entries;
    j["constants_profile"] = prof;
    j["kind"] = cert_kind_name(c.kind);
    if (c.kind == CertKind::BlockadeCert)
        j["blockade_kind"] = blockade_kind_name(c.blockade_kind);
    if (c.kind == CertKind::HomSet) j["homset_kind"] = c.homset_kind;
    j["blocks"] = c.blocks;
    j["apexes"] = c.apexes;
    json pe = json::array();
    for (auto [a, b] : c.pattern_edges) pe.push_back(json::array({a, b}));
    j["pattern_edges"] = pe;
    j["threshold"] = rat_to_string(c.threshold);
    j["declared_width"] = rat_to_string(c.declared_width);
    j["declared_length"] = c.declared_length;
    json claims = json::array();
    for (const auto& cl : c.claims) {
        json jc;
        jc["property"] = cl.property;
        jc["params"] = cl.params;
        claims.push_back(jc);
    }
    j["claims"] = claims;
    j["graph_hash"] = c.graph_hash;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("certificate JSON: ") + e.what());
    }
    try {
        Certificate c;
        c.version = j.at("version").get<int>();
        if (c.version != 1) throw parse_error("unsupported certificate version");
        c.lemma_id = j.at("lemma_id").get<std::string>();
        c.profile_name = j.at("constants_profile").at("name").get<std::string>();
        for (auto& [k, vq] : j.at("constants_profile").at("entries").items())
            c.profile_entries[k] = rat_parse(vq.get<std::string>());
        c.kind = cert_kind_from_name(j.at("kind").get<std::string>());
        if (j.contains("blockade_kind"))
            c.blockade_kind = blockade_kind_from_name(j["blockade_kind"].get<std::string>());
        if (j.contains("homset_kind")) c.homset_kind = j["homset_kind"].get<std::string>();
        c.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        c.apexes = j.at("apexes").get<std::vector<int>>();
        for (const auto& e : j.at("pattern_edges"))
            c.pattern_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        c.threshold = rat_parse(j.at("threshold").get<std::string>());
        c.declared_width = rat_parse(j.at("declared_width").get<std::string>());
        c.declared_length = j.at("declared_length").get<int>();
        for (const auto& jc : j.at("claims")) {
            Claim cl;
            cl.property = jc.at("property").get<std::string>();
            for (auto& [k, vq] : jc.at("params").items()) cl.params[k] = vq.get<std::string>();
            c.claims.push_back(std::move(cl));
        }
        c.graph_hash = j.at("graph_hash").get<uint64_t>();
        return c;
    } catch (const json::exception& e) {
        throw parse_error(std::string("certificate JSON: ") + e.what());
    }
}

void write_certificate_file(const std::string& path, const Certificate& c) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    out << certificate_to_json(c);
}

Certificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return certificate_from_json(buf.str());
}

}  // namespace blockade
