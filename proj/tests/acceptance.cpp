// End-to-end acceptance suite: one pass/fail line per criterion,
// nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "qpslab/conv.hpp"
#include "qpslab/eig.hpp"
#include "qpslab/io.hpp"
#include "qpslab/lab.hpp"
#include "qpslab/measures.hpp"
#include "qpslab/rng.hpp"
#include "qpslab/stab.hpp"
#include "qpslab/wigner.hpp"

using namespace qps;

namespace {

int failures = 0;

void verdict(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

DensityOperator mixed_sample(int i, int n, int d, RandomStream& rng) {
    if (i % 3 == 2) return random_stabilizer_state(n, d, rng.uniform_int(0, n), rng);
    if (i % 3 == 1) {
        // engineered partial-stabilizer: stabilizer factor (x) generic factor
        auto s = random_stabilizer_state(1, d, rng.uniform_int(0, 1), rng);
        auto g = random_state(n - 1, d, rng.uniform_int(1, d), rng);
        return DensityOperator(kron(s.op(), g.op()), false);
    }
    int dim = 1;
    for (int k = 0; k < n; ++k) dim *= d;
    return random_state(n, d, rng.uniform_int(1, dim), rng);
}

// 1. three uncertainty inequalities + equality classification
void criterion_uncertainty() {
    struct Cfg { int d, n, count; };
    const std::vector<Cfg> cfgs = {{2, 3, 50}, {3, 2, 60}, {3, 3, 40}, {7, 1, 60}};
    int violations = 0, states = 0;
    for (const auto& c : cfgs) {
        ExperimentConfig cfg;
        cfg.d = c.d;
        cfg.n = c.n;
        cfg.count = c.count;
        cfg.seed = 100 + c.d * 10 + c.n;
        violations += run_uncertainty(cfg).violations;
        states += c.count;
    }
    verdict(1, "uncertainty inequalities and equality classes", violations == 0,
            std::to_string(states) + " states, " + std::to_string(violations) +
                " violations");
}

// 2. mean state: threshold vs twirl, idempotence, divergence identity
void criterion_mean_state() {
    RandomStream rng(201, "acceptance-mean");
    double worst_paths = 0, worst_idem = 0, worst_div = 0;
    int states = 0;
    for (int d : {2, 3}) {
        for (int i = 0; i < 52; ++i, ++states) {
            const auto rho = mixed_sample(i, 2, d, rng);
            const auto mt = mean_state_threshold(rho);
            const auto mw = mean_state_twirl(rho);
            worst_paths = std::max(worst_paths, frob_dist(mt.state.op(), mw.state.op()));
            const auto mm = mean_state_threshold(mt.state);
            worst_idem = std::max(worst_idem, frob_dist(mm.state.op(), mt.state.op()));
            const double lhs = renyi_divergence(rho, mt.state, 1.0);
            const double rhs = von_neumann_entropy(mt.state) - von_neumann_entropy(rho);
            worst_div = std::max(worst_div, std::abs(lhs - rhs));
        }
    }
    const bool ok = worst_paths <= 1e-9 && worst_idem <= 1e-9 && worst_div <= 1e-6;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%d states, paths %.2e, idempotence %.2e, divergence identity %.2e",
                  states, worst_paths, worst_idem, worst_div);
    verdict(2, "mean-state cross-validation", ok, buf);
}

// 3. Parseval / Plancherel and the two Wigner paths
void criterion_parseval() {
    RandomStream rng(202, "acceptance-parseval");
    double worst_pars = 0, worst_plan = 0, worst_ft = 0;
    struct Cfg { int d, n; };
    for (const auto& c : std::vector<Cfg>{{2, 2}, {3, 1}, {3, 2}, {7, 1}}) {
        for (int i = 0; i < 10; ++i) {
            const auto rho = mixed_sample(i, std::max(c.n, 2), c.d, rng);
            const auto use = c.n == 1 ? random_state(1, c.d, rng.uniform_int(1, c.d), rng)
                                      : rho;
            const auto xi = char_function(use);
            double sum2 = 0;
            for (const auto& v : xi.values) sum2 += std::norm(v);
            const double dn = std::pow(c.d, use.n());
            worst_pars = std::max(worst_pars, std::abs(sum2 / dn - use.purity()));
            if (c.d % 2 == 1) {
                const auto w_direct = wigner_function(use);
                const auto w_ft = wigner_via_symplectic_ft(xi);
                double wsum = 0;
                for (std::size_t k = 0; k < w_direct.size(); ++k) {
                    wsum += w_direct.values[k] * w_direct.values[k];
                    worst_ft = std::max(worst_ft,
                                        std::abs(w_direct.values[k] - w_ft.values[k]));
                }
                worst_plan = std::max(worst_plan, std::abs(dn * wsum - use.purity()));
            }
        }
    }
    const bool ok = worst_pars <= 1e-9 && worst_plan <= 1e-9 && worst_ft <= 1e-10;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "Parseval %.2e, Plancherel %.2e, FT two-path %.2e",
                  worst_pars, worst_plan, worst_ft);
    verdict(3, "Parseval/Plancherel and Wigner transform paths", ok, buf);
}

// 4. extremality of mean states across measures
void criterion_extremality() {
    int violations = 0;
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.alphas = {0.5, 1.0, 2.0};
    cfg.d = 2;
    cfg.count = 100;
    cfg.seed = 203;
    violations += run_extremality(cfg).violations;
    cfg.d = 3;
    cfg.count = 50;
    cfg.seed = 204;
    violations += run_extremality(cfg).violations;
    verdict(4, "extremality suite (100 two-qubit + 50 two-qutrit)", violations == 0,
            std::to_string(violations) + " violations");
}

// 5. convolution: enumeration, two paths, monotone trajectories, limit decay
void criterion_convolution() {
    bool ok = find_params(3).empty() && find_params(5).empty() &&
              find_params(7).size() == 4;
    std::string detail = ok ? "" : "parameter enumeration wrong";

    RandomStream rng(205, "acceptance-conv");
    double worst_fast = 0;
    for (const auto& params : find_params(7))
        for (int i = 0; i < 3; ++i) {
            const auto a = random_state(1, 7, rng.uniform_int(1, 7), rng);
            const auto b = random_state(1, 7, rng.uniform_int(1, 7), rng);
            const auto want = char_function(convolve_dense(a, b, params));
            const auto got = convolve_fast(char_function(a), char_function(b), params);
            for (std::size_t k = 0; k < want.size(); ++k)
                worst_fast = std::max(worst_fast,
                                      std::abs(want.values[k] - got.values[k]));
        }
    if (worst_fast > 1e-9) { ok = false; detail += " fast/dense mismatch"; }

    ExperimentConfig cfg;
    cfg.d = 7;
    cfg.n = 1;
    cfg.count = 6;
    cfg.L = 8;
    cfg.seed = 206;
    cfg.alphas = {0.5, 1.0, 2.0};
    int violations = run_monotonicity(cfg).violations;
    cfg.n = 2;
    cfg.L = 4;
    cfg.count = 2;
    violations += run_monotonicity(cfg).violations;
    cfg.n = 1;
    cfg.L = 8;
    cfg.count = 20;
    violations += run_clt(cfg).violations;
    if (violations > 0) {
        ok = false;
        detail += " " + std::to_string(violations) + " trajectory violations";
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "fast/dense %.2e%s", worst_fast, detail.c_str());
    verdict(5, "convolution suite at d=7", ok, buf);
}

// 6. conditional-entropy optimizer certification
void criterion_optimizer() {
    RandomStream rng(207, "acceptance-opt");
    const auto cut = Bipartition::split(2, {0});
    double worst_cont = 0;
    for (int i = 0; i < 30; ++i) {
        const auto rho = random_state(2, 2, rng.uniform_int(1, 4), rng);
        const double closed = conditional_entropy(rho, cut, 1.0).value;
        const double opt = conditional_entropy(rho, cut, 1.0001).value;
        worst_cont = std::max(worst_cont, std::abs(opt - closed));
    }

    double worst_grid = 0;
    const std::vector<double> alphas = {0.5, 0.75, 2.0};
    for (int i = 0; i < 10; ++i) {
        const double alpha = alphas[i % alphas.size()];
        const auto rho = random_state(2, 2, rng.uniform_int(1, 4), rng);
        const double opt = conditional_entropy(rho, cut, alpha).value;
        // Bloch-ball grid oracle, step 0.05
        double best = std::numeric_limits<double>::infinity();
        const double e = (1.0 - alpha) / (2.0 * alpha);
        for (double x = -1.0; x <= 1.0; x += 0.05)
            for (double y = -1.0; y <= 1.0; y += 0.05)
                for (double z = -1.0; z <= 1.0; z += 0.05) {
                    if (x * x + y * y + z * z > 1.0 - 1e-12) continue;
                    Operator sb(1, 2);
                    sb.at(0, 0) = 0.5 * (1.0 + z);
                    sb.at(1, 1) = 0.5 * (1.0 - z);
                    sb.at(0, 1) = 0.5 * cplx(x, -y);
                    sb.at(1, 0) = 0.5 * cplx(x, y);
                    const Operator se = matrix_power(embed(sb, cut.b, 2, 2), e);
                    const Operator k = se * rho.op() * se;
                    const auto spec = eig_hermitian(k);
                    double tr = 0.0;
                    for (double l : spec.eigenvalues)
                        if (l > rank_threshold(spec, k.dim())) tr += std::pow(l, alpha);
                    best = std::min(best, std::log(tr) / (alpha - 1.0));
                }
        worst_grid = std::max(worst_grid, std::abs(opt - (-best)));
    }
    const bool ok = worst_cont <= 1e-3 && worst_grid <= 5e-3;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "alpha->1 continuity %.2e, grid oracle %.2e",
                  worst_cont, worst_grid);
    verdict(6, "optimizer certification", ok, buf);
}

// 7. byte-identical reruns
void criterion_determinism() {
    namespace fs = std::filesystem;
    bool ok = true;
    std::string detail;
    const fs::path base = fs::temp_directory_path() / "qpslab_acceptance";
    fs::remove_all(base);

    ExperimentConfig unc;
    unc.d = 3;
    unc.n = 2;
    unc.count = 8;
    unc.seed = 208;
    ExperimentConfig clt;
    clt.d = 7;
    clt.n = 1;
    clt.count = 3;
    clt.L = 6;
    clt.seed = 209;

    int tag = 0;
    for (auto* cfg : {&unc, &clt}) {
        std::vector<std::string> dirs;
        for (int run = 0; run < 2; ++run) {
            cfg->out_dir = (base / ("r" + std::to_string(tag) + std::to_string(run))).string();
            emit(cfg == &unc ? run_uncertainty(*cfg) : run_clt(*cfg));
            dirs.push_back(cfg->out_dir);
        }
        for (const auto& entry : fs::directory_iterator(dirs[0])) {
            const auto name = entry.path().filename().string();
            if (read_text_file((fs::path(dirs[0]) / name).string()) !=
                read_text_file((fs::path(dirs[1]) / name).string())) {
                ok = false;
                detail += " mismatch in " + name;
            }
        }
        ++tag;
    }
    fs::remove_all(base);
    verdict(7, "determinism: byte-identical reruns", ok, detail);
}

} // namespace

int main() {
    criterion_uncertainty();
    criterion_mean_state();
    criterion_parseval();
    criterion_extremality();
    criterion_convolution();
    criterion_optimizer();
    criterion_determinism();
    if (failures > 0) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 7 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
