// Command-line front end: one subcommand per property suite, plus
// ad-hoc single-state analysis. Exit codes: 0 all assertions hold,
// 2 violations found, 3 configuration error.

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qpslab/io.hpp"
#include "qpslab/lab.hpp"

using namespace qps;

int main(int argc, char** argv) {
    CLI::App app{"qpslab: phase-space transforms, mean states, convolution, "
                 "and information measures for n-qudit states"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string state_file;

    auto add_common = [&](CLI::App* sub, bool conv_flags) {
        sub->add_option("--d", cfg.d, "prime local dimension");
        sub->add_option("--n", cfg.n, "number of qudit factors");
        sub->add_option("--count", cfg.count, "number of generated cases");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--alpha", cfg.alphas, "Renyi orders (repeatable)");
        sub->add_option("--out", cfg.out_dir, "output directory for reports");
        sub->add_option("--unit", cfg.unit, "entropy unit: nats or dits");
        if (conv_flags) {
            sub->add_option("--s", cfg.s, "convolution parameter s");
            sub->add_option("--t", cfg.t, "convolution parameter t");
            sub->add_option("--L", cfg.L, "trajectory length");
        }
    };

    auto* unc = app.add_subcommand("uncertainty", "uncertainty-principle suite");
    add_common(unc, false);
    auto* ext = app.add_subcommand("extremality", "mean-state extremality suite");
    add_common(ext, false);
    auto* mono = app.add_subcommand("monotonicity", "convolution monotonicity suite");
    add_common(mono, true);
    auto* clt = app.add_subcommand("clt", "convolution limit decay suite");
    add_common(clt, true);
    auto* state = app.add_subcommand("state", "analyze one state from a matrix file");
    add_common(state, false);
    state->add_option("file", state_file, "matrix file (dim d n header)")->required();

    // convolution suites default to the smallest usable dimension
    mono->callback([&] { if (!mono->count("--d")) cfg.d = 7; });
    clt->callback([&] {
        if (!clt->count("--d")) cfg.d = 7;
        if (!clt->count("--n")) cfg.n = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;  // help/version vs. bad usage
    }

    try {
        Report rep;
        if (*unc) rep = run_uncertainty(cfg);
        else if (*ext) rep = run_extremality(cfg);
        else if (*mono) rep = run_monotonicity(cfg);
        else if (*clt) rep = run_clt(cfg);
        else {
            std::ifstream is(state_file);
            if (!is) throw std::invalid_argument("cannot open " + state_file);
            rep = run_state(read_matrix(is), cfg);
        }
        emit(rep);
        std::cout << report_json(rep);
        return rep.violations == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
