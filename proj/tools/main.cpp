#include <iostream>

#include "CLI11.hpp"
#include "oreg/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Castelnuovo-Mumford regularity of edge ideals of weighted oriented graphs"};
    app.require_subcommand(1);

    oreg::cli::RegArgs reg;
    auto* reg_cmd = app.add_subcommand("reg", "regularity of a graph's edge ideal");
    reg_cmd->add_option("--input", reg.input, "graph JSON file")->required();
    reg_cmd->add_option("--method", reg.method,
                        "auto|prop31|thm33|thm310|path|cycle|oracle (default auto)");
    reg_cmd->add_option("--field", reg.field, "gf2|rational (default gf2)");
    reg_cmd->add_option("--max-polar-vars", reg.max_polar_vars,
                        "polarized-variable cap for the oracle (default 18)");
    reg_cmd->add_option("--threads", reg.threads, "worker threads (default: auto)");

    oreg::cli::BettiArgs betti;
    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of an ideal or graph");
    betti_cmd->add_option("--input", betti.input, "graph or ideal JSON file")->required();
    betti_cmd->add_option("--field", betti.field, "gf2|rational (default gf2)");
    betti_cmd->add_flag("--quotient", betti.quotient, "table of R/I instead of I");
    betti_cmd->add_option("--max-polar-vars", betti.max_polar_vars,
                          "polarized-variable cap (default 18)");
    betti_cmd->add_option("--threads", betti.threads, "worker threads (default: auto)");

    oreg::cli::HgraphArgs hgraph;
    auto* hgraph_cmd = app.add_subcommand("hgraph", "labeled hypergraph of a squarefree ideal");
    hgraph_cmd->add_option("--input", hgraph.input, "graph or ideal JSON file")->required();

    oreg::cli::GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "emit a family instance as graph JSON");
    gen_cmd->add_option("--family", gen.family,
                        "path|cycle|dumbbell|cycle-with-chords|join-of-cycles|"
                        "complete-mpartite|sink-path|sink-cycle|random-property-p")
        ->required();
    gen_cmd->add_option("--params", gen.params,
                        "comma-separated k=v pairs; lists use ':' and edges 'tail>head'");
    gen_cmd->add_option("--out", gen.out_path, "output file (default stdout)");

    oreg::cli::VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "sweep a family: formulas vs oracle CSV");
    verify_cmd->add_option("--family", verify.family,
                           "path|cycle|sink-path|sink-cycle|property-p|dumbbell|"
                           "cycle-with-chords|join-of-cycles|complete-mpartite")
        ->required();
    verify_cmd->add_option("--n", verify.n_range, "length or range like 1..5");
    verify_cmd->add_option("--m", verify.m, "second cycle length / part count helper");
    verify_cmd->add_option("--r", verify.r, "dumbbell path length");
    verify_cmd->add_option("--wmax", verify.wmax, "weight sweep bound (default 3)");
    verify_cmd->add_option("--w", verify.w, "uniform weight for fixed families (default 2)");
    verify_cmd->add_option("--seeds", verify.seeds, "seed range for property-p (default 0..9)");
    verify_cmd->add_option("--size", verify.size, "vertex count for property-p (default 6)");
    verify_cmd->add_option("--k", verify.k, "cross-edge count for join-of-cycles");
    verify_cmd->add_option("--parts", verify.parts, "part sizes like 2:1:2");
    verify_cmd->add_option("--field", verify.field, "gf2|rational|both (default both)");
    verify_cmd->add_flag("--parallel", verify.parallel, "run instances in a worker pool");
    verify_cmd->add_option("--threads", verify.threads, "worker threads (default: auto)");
    verify_cmd->add_flag("--timings", verify.timings,
                         "append a wall-clock column (breaks byte determinism)");
    verify_cmd->add_option("--max-polar-vars", verify.max_polar_vars,
                           "oracle cap; larger instances run formula-only (default 18)");

    CLI11_PARSE(app, argc, argv);

    if (reg_cmd->parsed()) return oreg::cli::cmd_reg(reg, std::cout, std::cerr);
    if (betti_cmd->parsed()) return oreg::cli::cmd_betti(betti, std::cout, std::cerr);
    if (hgraph_cmd->parsed()) return oreg::cli::cmd_hgraph(hgraph, std::cout, std::cerr);
    if (gen_cmd->parsed()) return oreg::cli::cmd_gen(gen, std::cout, std::cerr);
    if (verify_cmd->parsed()) return oreg::cli::cmd_verify(verify, std::cout, std::cerr);
    return oreg::cli::kExitParse;
}
