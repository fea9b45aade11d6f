#pragma once

#include <chrono>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "linstrand/betti.hpp"
#include "linstrand/rees.hpp"
#include "linstrand/strand.hpp"
#include "linstrand/text.hpp"

namespace linstrand {

inline std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

enum class CheckStatus { Pass, Fail, Skip };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

/// One command run: echo of the invocation, input digest, the declared
/// checks (each exactly once), a human-readable payload and a JSON payload.
/// Exit status is nonzero iff any check failed; skips do not fail a run.
struct RunReport {
    std::string command;
    std::string input_digest;
    std::vector<CheckResult> checks;
    std::string text;
    nlohmann::ordered_json payload;
    std::vector<std::string> artifacts; // paths written by the run, if any
    double elapsed_ms = 0.0;

    bool failed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return true;
        return false;
    }
    int exit_code() const { return failed() ? 1 : 0; }

    void add_check(const std::string& name, CheckStatus status,
                   const std::string& detail = "") {
        checks.push_back({name, status, detail});
    }

    std::string render_text() const {
        std::string out;
        out += "command: " + command + "\n";
        out += "input: " + input_digest + "\n";
        if (!text.empty()) {
            out += text;
            if (text.back() != '\n') out += "\n";
        }
        for (const auto& c : checks) {
            out += std::string("[") + status_name(c.status) + "] " + c.name;
            if (!c.detail.empty()) out += ": " + c.detail;
            out += "\n";
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "elapsed_ms: %.1f\n", elapsed_ms);
        out += buf;
        return out;
    }

    nlohmann::ordered_json render_json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["input"] = input_digest;
        j["payload"] = payload;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.name;
            cj["status"] = status_name(c.status);
            if (!c.detail.empty()) cj["detail"] = c.detail;
            arr.push_back(cj);
        }
        j["checks"] = arr;
        j["artifacts"] = artifacts;
        j["exit"] = exit_code();
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

struct ReportOptions {
    unsigned m = 1;
    std::optional<unsigned> max_i;       // default min(m, 2t) + 1
    std::string variant = "both";        // both | binomial | initial
    std::uint32_t characteristic = 32003;
    std::size_t budget = 20000;          // oracle graded-piece budget
    std::size_t slice_budget = 200000;   // relation-slice monomial budget
    std::size_t max_reductions = 500000; // Groebner step budget
    bool one_indexed = false;
    unsigned corpus_n = 4;
    bool connected_only = false;
    unsigned jobs = 1;
};

inline std::vector<Variant> requested_variants(const ReportOptions& opts) {
    if (opts.variant == "binomial") return {Variant::Binomial};
    if (opts.variant == "initial") return {Variant::Initial};
    if (opts.variant == "both") return {Variant::Binomial, Variant::Initial};
    throw std::invalid_argument("unknown variant '" + opts.variant +
                                "' (expected both, binomial or initial)");
}

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string vertex_set_str(const std::vector<unsigned>& vs, unsigned base) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i] + base);
    }
    return s + "}";
}

} // namespace detail

/// Closedness (both characterizations), K4-freeness, e, t, maximal cliques
/// with their indices; for non-closed inputs, the relabeling search result.
inline RunReport cmd_check(const LabeledGraph& g, const ReportOptions& opts,
                           const std::string& digest, const std::string& command) {
    detail::Stopwatch clock;
    RunReport rep;
    rep.command = command;
    rep.input_digest = digest;
    unsigned base = opts.one_indexed ? 1 : 0;

    bool closed_triple = is_closed_labeling(g);
    bool closed_pairwise = is_closed_pairwise(g);
    bool k4 = has_induced_k4(g);
    auto tris = triangles(g);

    std::ostringstream out;
    out << "graph: n=" << g.n() << ", e=" << g.edge_count() << "\n";
    out << "closed (triple condition): " << (closed_triple ? "yes" : "no") << "\n";
    out << "closed (pairwise definition): " << (closed_pairwise ? "yes" : "no") << "\n";
    out << "k4-free: " << (k4 ? "no" : "yes") << "\n";
    out << "triangles: t=" << tris.size() << "\n";

    rep.payload["n"] = g.n();
    rep.payload["e"] = g.edge_count();
    rep.payload["t"] = tris.size();
    rep.payload["closed_triple"] = closed_triple;
    rep.payload["closed_pairwise"] = closed_pairwise;
    rep.payload["k4_free"] = !k4;

    if (closed_triple) {
        auto cliques = maximal_cliques(g);
        out << "maximal cliques:";
        auto carr = nlohmann::ordered_json::array();
        for (const auto& c : cliques.cliques) {
            out << " " << detail::vertex_set_str(c, base);
            auto cj = nlohmann::ordered_json::array();
            for (auto v : c) cj.push_back(v + base);
            carr.push_back(cj);
        }
        out << "\n";
        rep.payload["cliques"] = carr;
        out << "clique index:";
        auto iarr = nlohmann::ordered_json::array();
        for (const auto& e : g.edges()) {
            unsigned idx = clique_index(cliques, e);
            out << " (" << e.first + base << "," << e.second + base << ")->" << idx;
            iarr.push_back(nlohmann::ordered_json{
                {"edge", {e.first + base, e.second + base}}, {"index", idx}});
        }
        out << "\n";
        rep.payload["clique_indices"] = iarr;
    } else if (g.n() <= 10) {
        auto perm = find_closed_labeling(g);
        if (perm) {
            out << "closed labeling search: found";
            for (auto v : *perm) out << " " << v;
            out << "\n";
            auto pj = nlohmann::ordered_json::array();
            for (auto v : *perm) pj.push_back(v);
            rep.payload["closed_labeling"] = pj;
        } else {
            out << "closed labeling search: none exists\n";
            rep.payload["closed_labeling"] = nullptr;
        }
    }

    // the triple condition refines the pairwise one; the reverse failing is a bug
    rep.add_check("closedness-implication",
                  !closed_triple || closed_pairwise ? CheckStatus::Pass
                                                    : CheckStatus::Fail,
                  !closed_triple || closed_pairwise
                      ? ""
                      : "triple condition held without the pairwise definition");
    rep.text = out.str();
    rep.elapsed_ms = clock.ms();
    return rep;
}

/// Relation listing grouped by family, with the per-relation kernel check
/// under the presentation map.
inline RunReport cmd_relations(const LabeledGraph& g, const ReportOptions& opts,
                               const std::string& digest, const std::string& command) {
    detail::Stopwatch clock;
    RunReport rep;
    rep.command = command;
    rep.input_digest = digest;
    unsigned base = opts.one_indexed ? 1 : 0;
    PrimeField field(opts.characteristic);
    auto order = MonomialOrder::revlex_s();

    std::ostringstream out;
    auto payload_variants = nlohmann::ordered_json::array();

    for (Variant variant : requested_variants(opts)) {
        auto rels = rees_relations(g, variant, field);
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& r : rels) ++counts[static_cast<int>(r.family)];

        nlohmann::ordered_json vj;
        vj["variant"] = variant_name(variant);
        vj["koszul"] = counts[0];
        vj["eagon_northcott"] = counts[1];
        vj["pluecker"] = counts[2];

        std::size_t vanish = 0;
        auto families = nlohmann::ordered_json::array();
        for (int fam = 0; fam < 3; ++fam) {
            out << "[" << variant_name(variant) << "] "
                << family_name(static_cast<ReesFamily>(fam)) << " relations: "
                << counts[fam] << "\n";
            auto bodies = nlohmann::ordered_json::array();
            for (const auto& r : rels) {
                if (static_cast<int>(r.family) != fam) continue;
                std::string witness;
                if (auto* ep = std::get_if<EdgePairWitness>(&r.witness)) {
                    witness = "(" + std::to_string(ep->first.first + base) + "," +
                              std::to_string(ep->first.second + base) + ")|(" +
                              std::to_string(ep->second.first + base) + "," +
                              std::to_string(ep->second.second + base) + ")";
                } else if (auto* tri = std::get_if<Triangle>(&r.witness)) {
                    witness = "(" + std::to_string((*tri)[0] + base) + "," +
                              std::to_string((*tri)[1] + base) + "," +
                              std::to_string((*tri)[2] + base) + ")";
                    bool has_x = false;
                    for (const auto& t : r.body.terms())
                        for (const auto& [var, e] : t.mono.entries())
                            if (var.kind() == VarKind::X) has_x = true;
                    witness += has_x ? " x" : " y";
                } else if (auto* q = std::get_if<FourClique>(&r.witness)) {
                    witness = "(" + std::to_string((*q)[0] + base) + "," +
                              std::to_string((*q)[1] + base) + "," +
                              std::to_string((*q)[2] + base) + "," +
                              std::to_string((*q)[3] + base) + ")";
                }
                std::string body = render_polynomial(field, r.body, order, base);
                out << "  " << witness << ": " << body << "\n";
                bodies.push_back(body);
                if (phi_apply(field, r.body, g, variant).is_zero()) ++vanish;
            }
            families.push_back(bodies);
        }
        vj["bodies"] = families;
        payload_variants.push_back(vj);

        rep.add_check(std::string("phi-kernel-") + variant_name(variant),
                      vanish == rels.size() ? CheckStatus::Pass : CheckStatus::Fail,
                      std::to_string(vanish) + "/" + std::to_string(rels.size()) +
                          " relations vanish");
    }
    rep.payload["variants"] = payload_variants;
    rep.text = out.str();
    rep.elapsed_ms = clock.ms();
    return rep;
}

namespace detail {

struct VerifyOutcome {
    std::vector<CheckResult> checks;
    nlohmann::ordered_json payload;
};

/// Formula strand vs oracle strand for one graph, all requested variants.
inline VerifyOutcome verify_graph(const LabeledGraph& g, const ReportOptions& opts,
                                  const std::string& tag) {
    VerifyOutcome out;
    PrimeField field(opts.characteristic);

    StrandProfile profile = strand_profile(g, opts.m);
    unsigned max_i = opts.max_i
                         ? *opts.max_i
                         : unsigned(std::min<unsigned long long>(opts.m, 2 * profile.t)) + 1;

    out.payload = strand_profile_json(profile);
    auto oracle_json = nlohmann::ordered_json::object();

    for (Variant variant : requested_variants(opts)) {
        std::vector<std::optional<std::size_t>> oracle;
        try {
            oracle = linear_strand_betti(field, g, variant, opts.m, max_i, opts.budget);
        } catch (const BudgetExceededError& e) {
            out.checks.push_back({tag + variant_name(variant), CheckStatus::Skip,
                                  e.what()});
            continue;
        }
        auto arr = nlohmann::ordered_json::array();
        for (unsigned i = 0; i <= max_i; ++i) {
            BigInt expected = linear_strand_formula(profile.e, profile.t, opts.m, i);
            std::string name =
                tag + std::string(variant_name(variant)) + " i=" + std::to_string(i);
            if (!oracle[i]) {
                out.checks.push_back({name, CheckStatus::Skip, "piece over budget"});
                arr.push_back(nullptr);
                continue;
            }
            arr.push_back(*oracle[i]);
            bool ok = BigInt(*oracle[i]) == expected;
            out.checks.push_back(
                {name, ok ? CheckStatus::Pass : CheckStatus::Fail,
                 "formula " + expected.str() + ", oracle " + std::to_string(*oracle[i])});
        }
        oracle_json[variant_name(variant)] = arr;
    }
    out.payload["oracle"] = oracle_json;
    return out;
}

} // namespace detail

/// Formula-versus-oracle verification of the linear strand for one graph.
inline RunReport cmd_verify(const LabeledGraph& g, const ReportOptions& opts,
                            const std::string& digest, const std::string& command) {
    detail::Stopwatch clock;
    RunReport rep;
    rep.command = command;
    rep.input_digest = digest;
    auto outcome = detail::verify_graph(g, opts, "");
    rep.checks = std::move(outcome.checks);
    rep.payload = std::move(outcome.payload);
    std::ostringstream out;
    out << "m=" << opts.m << ", e=" << g.edge_count() << ", t="
        << triangles(g).size() << "\n";
    rep.text = out.str();
    rep.elapsed_ms = clock.ms();
    return rep;
}

/// Sweeps the enumerated corpus on corpus_n vertices through the verify
/// pipeline; aggregate counts with per-graph detail on failure.
inline RunReport cmd_corpus(const ReportOptions& opts, const std::string& command) {
    detail::Stopwatch clock;
    RunReport rep;
    rep.command = command;

    auto corpus = enumerate_closed_k4free(opts.corpus_n);
    if (opts.connected_only) {
        std::vector<LabeledGraph> conn;
        for (auto& g : corpus)
            if (is_connected(g)) conn.push_back(std::move(g));
        corpus = std::move(conn);
    }
    rep.input_digest = "corpus-n" + std::to_string(opts.corpus_n) +
                       (opts.connected_only ? "-connected" : "");

    auto run_one = [&](std::size_t idx) {
        const LabeledGraph& g = corpus[idx];
        std::string tag = "g" + std::to_string(idx) + " ";
        try {
            return detail::verify_graph(g, opts, tag);
        } catch (const BudgetExceededError& e) {
            detail::VerifyOutcome o;
            o.checks.push_back({tag + "verify", CheckStatus::Skip, e.what()});
            return o;
        }
    };

    std::vector<detail::VerifyOutcome> outcomes(corpus.size());
    if (opts.jobs > 1 && corpus.size() > 1) {
        std::vector<std::future<detail::VerifyOutcome>> futures;
        futures.reserve(corpus.size());
        for (std::size_t i = 0; i < corpus.size(); ++i)
            futures.push_back(std::async(std::launch::async, run_one, i));
        for (std::size_t i = 0; i < corpus.size(); ++i) outcomes[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < corpus.size(); ++i) outcomes[i] = run_one(i);
    }

    std::size_t pass = 0, fail = 0, skip = 0;
    std::ostringstream out;
    auto failures = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        bool graph_failed = false;
        for (const auto& c : outcomes[i].checks) {
            switch (c.status) {
                case CheckStatus::Pass: ++pass; break;
                case CheckStatus::Fail:
                    ++fail;
                    graph_failed = true;
                    rep.checks.push_back(c);
                    break;
                case CheckStatus::Skip:
                    ++skip;
                    break;
            }
        }
        if (graph_failed) {
            out << "failing graph " << i << ": edges";
            nlohmann::ordered_json ej = nlohmann::ordered_json::array();
            for (const auto& [a, b] : corpus[i].edges()) {
                out << " {" << a << "," << b << "}";
                ej.push_back({a, b});
            }
            out << "\n";
            failures.push_back(nlohmann::ordered_json{{"graph", i}, {"edges", ej}});
        }
    }
    out << "graphs: " << corpus.size() << ", checks passed: " << pass
        << ", failed: " << fail << ", skipped: " << skip << "\n";
    rep.payload["graphs"] = corpus.size();
    rep.payload["pass"] = pass;
    rep.payload["fail"] = fail;
    rep.payload["skip"] = skip;
    rep.payload["failures"] = failures;
    rep.add_check("corpus", fail == 0 ? CheckStatus::Pass : CheckStatus::Fail,
                  std::to_string(pass) + " pass, " + std::to_string(fail) +
                      " fail, " + std::to_string(skip) + " skip");
    rep.text = out.str();
    rep.elapsed_ms = clock.ms();
    return rep;
}

/// Oracle Betti table of the m-th power over the requested window.
inline RunReport cmd_betti(const LabeledGraph& g, const ReportOptions& opts,
                           unsigned max_i, unsigned max_j, const std::string& digest,
                           const std::string& command) {
    detail::Stopwatch clock;
    RunReport rep;
    rep.command = command;
    rep.input_digest = digest;
    PrimeField field(opts.characteristic);
    std::ostringstream out;
    auto pj = nlohmann::ordered_json::array();
    for (Variant variant : requested_variants(opts)) {
        KoszulOracle<PrimeField> oracle(
            field, g.n(),
            power_groebner_basis(field, g, variant, opts.m, opts.max_reductions),
            opts.budget);
        BettiTable table = oracle.graded_betti(max_i, max_j);
        out << "[" << variant_name(variant) << "] betti table of power m="
            << opts.m << "\n";
        out << table.render_staircase();
        auto tj = table.to_json();
        tj["variant"] = variant_name(variant);
        pj.push_back(tj);
        if (!table.skipped.empty())
            rep.add_check(std::string("window-") + variant_name(variant),
                          CheckStatus::Skip,
                          std::to_string(table.skipped.size()) +
                              " pieces over budget");
    }
    rep.payload["tables"] = pj;
    rep.text = out.str();
    rep.elapsed_ms = clock.ms();
    return rep;
}

/// The strand profile as a formula-provenance Betti window on the diagonal
/// j = 2m + i.
inline BettiTable strand_formula_table(const StrandProfile& p) {
    BettiTable table;
    table.provenance = Provenance::Formula;
    table.max_i = unsigned(p.entries.size()) - 1;
    table.max_j = 2 * p.m + table.max_i;
    for (unsigned i = 0; i < p.entries.size(); ++i) {
        if (p.entries[i] == 0) continue;
        if (p.entries[i] > BigInt(std::numeric_limits<std::size_t>::max()))
            throw std::overflow_error("strand entry exceeds the table value range");
        table.quotient_values[{i + 1, 2 * p.m + i}] =
            p.entries[i].convert_to<std::size_t>();
    }
    // off-diagonal cells are outside what the formula speaks about
    for (unsigned pq = 0; pq <= table.max_i + 1; ++pq)
        for (unsigned j = 0; j <= table.max_j; ++j)
            if (pq == 0 || j != 2 * p.m + (pq - 1)) table.skipped.insert({pq, j});
    return table;
}

/// Formula-side strand profile with the derivation cross-check.
inline RunReport cmd_strand(const LabeledGraph& g, const ReportOptions& opts,
                            const std::string& digest, const std::string& command) {
    detail::Stopwatch clock;
    RunReport rep;
    rep.command = command;
    rep.input_digest = digest;
    StrandProfile p = strand_profile(g, opts.m);
    rep.payload = strand_profile_json(p);
    rep.payload["table"] = strand_formula_table(p).to_json();
    bool agree = true;
    for (const auto& [i, rank] : strand_complex_ranks(p.e, p.t, p.m))
        if (rank != p.entries[i]) agree = false;
    rep.add_check("strand-derivations-agree",
                  agree ? CheckStatus::Pass : CheckStatus::Fail);
    std::ostringstream out;
    out << "e=" << p.e << ", t=" << p.t << ", m=" << p.m << "\nstrand:";
    for (const auto& v : p.entries) out << " " << v.str();
    out << "\n";
    rep.text = out.str();
    rep.elapsed_ms = clock.ms();
    return rep;
}

/// Reads a graph file plus its digest; parse errors carry line numbers.
inline std::pair<LabeledGraph, std::string> load_graph_file(const std::string& path,
                                                            bool one_indexed) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    return {parse_edge_list(bytes, one_indexed), fnv1a_digest(bytes)};
}

} // namespace linstrand
