#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "linstrand/report.hpp"

namespace {

std::string echo_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += " ";
        s += argv[i];
    }
    return s;
}

void emit(const linstrand::RunReport& rep, bool as_json) {
    if (as_json)
        std::cout << rep.render_json().dump(2) << "\n";
    else
        std::cout << rep.render_text();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear-strand computations for binomial edge ideals of "
                 "closed graphs"};
    app.require_subcommand(1);

    linstrand::ReportOptions opts;
    std::string graph_path;
    bool as_json = false;
    unsigned max_i_flag = 0;
    bool has_max_i = false;
    unsigned betti_max_i = 3, betti_max_j = 8;

    auto add_common = [&](CLI::App* cmd, bool with_graph) {
        if (with_graph)
            cmd->add_option("graph", graph_path, "edge-list file")->required();
        cmd->add_flag("--one-indexed", opts.one_indexed,
                      "treat vertex labels as 1-based");
        cmd->add_flag("--json", as_json, "emit the report as JSON");
    };
    auto add_math = [&](CLI::App* cmd) {
        cmd->add_option("--variant", opts.variant,
                        "both, binomial or initial (default both)");
        cmd->add_option("--char", opts.characteristic,
                        "coefficient field characteristic (prime, default 32003)");
        cmd->add_option("--budget", opts.budget,
                        "oracle graded-piece budget (default 20000)");
    };

    auto* check = app.add_subcommand("check", "graph property report");
    add_common(check, true);

    auto* relations =
        app.add_subcommand("relations", "Rees relation listing with kernel checks");
    add_common(relations, true);
    relations->add_option("--variant", opts.variant, "both, binomial or initial");
    relations->add_option("--char", opts.characteristic, "field characteristic");

    auto* verify =
        app.add_subcommand("verify", "formula vs oracle for the linear strand");
    add_common(verify, true);
    add_math(verify);
    verify->add_option("--m", opts.m, "ideal power (default 1)");
    verify->add_option("--max-i", max_i_flag, "largest homological index to compare")
        ->each([&](const std::string&) { has_max_i = true; });

    auto* corpus = app.add_subcommand("corpus", "sweep the enumerated graph corpus");
    corpus->add_flag("--json", as_json, "emit the report as JSON");
    add_math(corpus);
    corpus->add_option("--n", opts.corpus_n, "vertex count (default 4)");
    corpus->add_option("--m", opts.m, "ideal power (default 1)");
    corpus->add_flag("--connected", opts.connected_only, "connected graphs only");
    corpus->add_option("--jobs", opts.jobs, "parallel graph pipelines (default 1)");

    auto* betti = app.add_subcommand("betti", "oracle Betti table of an ideal power");
    add_common(betti, true);
    add_math(betti);
    betti->add_option("--m", opts.m, "ideal power (default 1)");
    betti->add_option("--max-i", betti_max_i, "homological window bound (default 3)");
    betti->add_option("--max-j", betti_max_j, "internal degree bound (default 8)");

    auto* strand = app.add_subcommand("strand", "closed-formula strand profile");
    add_common(strand, true);
    strand->add_option("--m", opts.m, "ideal power (default 1)");

    CLI11_PARSE(app, argc, argv);
    std::string command = echo_args(argc, argv);
    if (has_max_i) opts.max_i = max_i_flag;

    try {
        linstrand::RunReport rep;
        if (corpus->parsed()) {
            rep = linstrand::cmd_corpus(opts, command);
        } else {
            auto [graph, digest] =
                linstrand::load_graph_file(graph_path, opts.one_indexed);
            if (check->parsed())
                rep = linstrand::cmd_check(graph, opts, digest, command);
            else if (relations->parsed())
                rep = linstrand::cmd_relations(graph, opts, digest, command);
            else if (verify->parsed())
                rep = linstrand::cmd_verify(graph, opts, digest, command);
            else if (betti->parsed())
                rep = linstrand::cmd_betti(graph, opts, betti_max_i, betti_max_j,
                                           digest, command);
            else
                rep = linstrand::cmd_strand(graph, opts, digest, command);
        }
        emit(rep, as_json);
        return rep.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
