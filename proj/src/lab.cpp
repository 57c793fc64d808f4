#include "qpslab/lab.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qpslab/io.hpp"
#include "qpslab/measures.hpp"
#include "qpslab/rng.hpp"
#include "qpslab/stab.hpp"
#include "qpslab/wigner.hpp"

namespace qps {

namespace {

constexpr double kEqTol = 1e-7;       // equality detection in log units
constexpr double kLuTol = 1e-8;       // local-unitary invariance
constexpr double kMonoSlack = 1e-8;   // closed-form monotonicity slack
constexpr double kMonoSlackOpt = 1e-5;
constexpr double kCltTarget = 1e-3;
constexpr const char* kVersion = "qpslab 0.1.0";

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("config: " + msg);
}

std::size_t dim_of(int n, int d) {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) s *= d;
    return s;
}

void validate_common(const ExperimentConfig& c) {
    require(is_prime(c.d), "d must be prime");
    require(c.n >= 1, "n must be >= 1");
    require(c.count >= 1, "count must be >= 1");
    require(c.unit == "nats" || c.unit == "dits", "unit must be nats or dits");
    for (double a : c.alphas) require(a >= 0.5, "alpha must be >= 1/2");
}

double unit_scale(const ExperimentConfig& c) {
    return c.unit == "dits" ? 1.0 / std::log(static_cast<double>(c.d)) : 1.0;
}

void add_row(Report& rep, int idx, const std::string& name, double lhs, double rhs,
             bool ok, bool entropic, const std::string& note = "") {
    rep.rows.push_back(ReportRow{idx, name, lhs, rhs, lhs - rhs, ok, entropic, note});
    if (!ok) ++rep.violations;
}

// mix of stabilizer and generic cases, deterministic per index
DensityOperator sample_state(int idx, int mod, int n, int d, RandomStream& rng) {
    if (mod > 0 && idx % mod == mod - 1)
        return random_stabilizer_state(n, d, rng.uniform_int(0, n), rng);
    return random_state(n, d, rng.uniform_int(1, static_cast<int>(dim_of(n, d))), rng);
}

std::string two_col(const std::vector<double>& ys, double scale) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ys.size(); ++i)
        os << i << ' ' << fmt17(ys[i] * scale) << '\n';
    return os.str();
}

} // namespace

Report run_uncertainty(const ExperimentConfig& config) {
    validate_common(config);
    require(dim_of(config.n, config.d) <= 128, "d^n must be <= 128");
    Report rep;
    rep.config = config;
    rep.config.experiment = "uncertainty";

    const int n = config.n, d = config.d;
    const double nlnd = n * std::log(static_cast<double>(d));
    RandomStream rng(config.seed, "uncertainty");

    for (int i = 0; i < config.count; ++i) {
        const auto rho = sample_state(i, 2, n, d, rng);
        const bool stab = is_stabilizer(rho);
        const bool pure = rho.purity() >= 1.0 - 1e-8;
        const double smax = max_entropy(rho);
        const double ln_chi_p = std::log(static_cast<double>(pauli_rank(rho)));

        auto classified = [&](const std::string& name, double lhs, double rhs,
                              bool expect_eq) {
            const bool holds = lhs >= rhs - kEqTol;
            const bool eq = std::abs(lhs - rhs) <= kEqTol;
            add_row(rep, i, name, lhs, rhs, holds && (eq == expect_eq), true,
                    std::string(eq ? "equality" : "strict") +
                        (expect_eq ? ",expected-equality" : ",expected-strict"));
        };

        classified("Smax+ln(chiP)>=n*ln(d)", smax + ln_chi_p, nlnd, stab);
        if (d % 2 == 1) {
            const double ln_chi_w = std::log(static_cast<double>(wigner_rank(rho)));
            classified("Smax+ln(chiW)>=n*ln(d)", smax + ln_chi_w, nlnd, pure && stab);
            classified("ln(chiP)+ln(chiW)>=2n*ln(d)", ln_chi_p + ln_chi_w, 2 * nlnd,
                       stab);
        }
    }
    return rep;
}

Report run_extremality(const ExperimentConfig& config) {
    validate_common(config);
    require(config.n >= 2, "extremality needs n >= 2");
    require(dim_of(config.n, config.d) <= 128, "d^n must be <= 128");
    Report rep;
    rep.config = config;
    rep.config.experiment = "extremality";

    const int n = config.n, d = config.d;
    const auto cut = Bipartition::split(n, {0});
    RandomStream rng(config.seed, "extremality");

    for (int i = 0; i < config.count; ++i) {
        const bool stab_case = i % 5 == 4;
        const auto rho = sample_state(i, 5, n, d, rng);
        const auto er = extremality_report(rho, cut, config.alphas);
        for (const auto& row : er.rows) {
            add_row(rep, i, row.measure, row.value_rho, row.value_mean,
                    row.sign_ok, row.measure != "N");
            if (stab_case && is_stabilizer(rho)) {
                const bool opt_row = row.measure.rfind("S_alpha", 0) == 0;
                const double slack = opt_row ? kSlackOptimizer : kSlackClosedForm;
                add_row(rep, i, "zero-gap " + row.measure, std::abs(row.gap), slack,
                        std::abs(row.gap) <= slack, false);
            }
        }
        if (i < 2) {
            // local-unitary duplicate must yield identical measure values
            auto u = random_local_unitary(n, d, rng);
            DensityOperator dup(u * rho.op() * u.adjoint(), false);
            double worst = std::abs(von_neumann_entropy(rho) - von_neumann_entropy(dup));
            worst = std::max(worst, std::abs(entanglement_entropy(rho, cut) -
                                             entanglement_entropy(dup, cut)));
            worst = std::max(worst, std::abs(negativity(rho, cut) - negativity(dup, cut)));
            add_row(rep, i, "lu-invariance", worst, kLuTol, worst <= kLuTol, false);
        }
    }
    return rep;
}

Report run_monotonicity(const ExperimentConfig& config) {
    validate_common(config);
    require(config.L >= 1, "L must be >= 1");
    const ConvParams params(config.d, config.s, config.t);
    Report rep;
    rep.config = config;
    rep.config.experiment = "monotonicity";

    const int n = config.n, d = config.d;
    const int dim = static_cast<int>(dim_of(n, d));
    RandomStream rng(config.seed, "monotonicity");
    const bool bipartite = n >= 2;
    const Bipartition cut = bipartite ? Bipartition::split(n, {0})
                                      : Bipartition{{0}, {0}};

    for (int i = 0; i < config.count; ++i) {
        const auto rho = random_state(n, d, dim, rng);
        const auto traj = iterate(rho, params, config.L,
                                  bipartite ? &cut : nullptr, config.alphas.front());
        std::vector<double> entropy_curve;
        for (const auto& m : traj.metrics) entropy_curve.push_back(m.entropy);
        rep.curves.emplace_back("entropy_case" + std::to_string(i) + ".dat",
                                two_col(entropy_curve, unit_scale(config)));

        for (std::size_t l = 1; l < traj.metrics.size(); ++l) {
            const auto& cur = traj.metrics[l];
            const auto& prev = traj.metrics[l - 1];
            const std::string tag = " L=" + std::to_string(l);
            add_row(rep, i, "S nondecreasing" + tag, cur.entropy, prev.entropy,
                    cur.entropy >= prev.entropy - kMonoSlack, true);
            if (bipartite)
                add_row(rep, i, "S(A) nondecreasing" + tag, cur.ent_entropy,
                        prev.ent_entropy,
                        cur.ent_entropy >= prev.ent_entropy - kMonoSlack, true);
        }
        if (bipartite) {
            for (double a : config.alphas) {
                std::vector<double> vals;
                if (a == config.alphas.front()) {
                    for (const auto& m : traj.metrics) vals.push_back(m.cond_entropy_alpha);
                } else {
                    for (const auto& st : traj.states)
                        vals.push_back(conditional_entropy(st, cut, a).value);
                }
                const double slack = a == 1.0 ? kMonoSlack : kMonoSlackOpt;
                for (std::size_t l = 1; l < vals.size(); ++l)
                    add_row(rep, i,
                            "S_alpha(A|B) nondecreasing alpha=" + std::to_string(a) +
                                " L=" + std::to_string(l),
                            vals[l], vals[l - 1], vals[l] >= vals[l - 1] - slack, true);
            }
        }
    }
    return rep;
}

Report run_clt(const ExperimentConfig& config) {
    validate_common(config);
    require(config.n == 1, "clt runs single-qudit trajectories (n = 1)");
    require(config.L >= 1, "L must be >= 1");
    const ConvParams params(config.d, config.s, config.t);
    Report rep;
    rep.config = config;
    rep.config.experiment = "clt";

    RandomStream rng(config.seed, "clt");
    for (int i = 0; i < config.count; ++i) {
        const auto rho = random_state(1, config.d, config.d, rng);  // full support
        const auto traj = iterate(rho, params, config.L);
        std::vector<double> dist;
        for (const auto& m : traj.metrics) dist.push_back(m.trace_dist_to_mean);

        const std::string name = i == 0 ? "decay.dat"
                                        : "decay_case" + std::to_string(i) + ".dat";
        rep.curves.emplace_back(name, two_col(dist, 1.0));

        bool strict = true;
        for (std::size_t l = 1; l < dist.size(); ++l)
            if (!(dist[l] < dist[l - 1])) strict = false;
        add_row(rep, i, "trace-distance strictly decreasing", 0.0, 0.0, strict, false);

        int first_below = -1;
        for (std::size_t l = 0; l < dist.size(); ++l)
            if (dist[l] < kCltTarget) { first_below = static_cast<int>(l); break; }
        add_row(rep, i, "final trace distance < 1e-3", dist.back(), kCltTarget,
                dist.back() < kCltTarget, false,
                "first L below target: " + std::to_string(first_below));
    }
    return rep;
}

Report run_state(const Operator& op, const ExperimentConfig& config) {
    validate_common(config);
    DensityOperator rho(op);
    Report rep;
    rep.config = config;
    rep.config.experiment = "state";
    rep.config.n = rho.n();
    rep.config.d = rho.d();

    add_row(rep, 0, "S", von_neumann_entropy(rho), 0.0, true, true);
    add_row(rep, 0, "Smax", max_entropy(rho), 0.0, true, true);
    add_row(rep, 0, "purity", rho.purity(), 0.0, true, false);
    add_row(rep, 0, "chiP", pauli_rank(rho), 0.0, true, false);
    add_row(rep, 0, "is_stabilizer", is_stabilizer(rho) ? 1.0 : 0.0, 0.0, true, false);

    rep.curves.emplace_back("char.csv", char_table_csv(char_function(rho)));
    rep.curves.emplace_back("group.json", stabilizer_group_json(stabilizer_group(rho)));
    if (rho.d() % 2 == 1) {
        add_row(rep, 0, "chiW", wigner_rank(rho), 0.0, true, false);
        rep.curves.emplace_back("wigner.csv", wigner_table_csv(wigner_function(rho)));
    }
    return rep;
}

std::string report_csv(const Report& report) {
    const double scale = unit_scale(report.config);
    std::ostringstream os;
    os << "case,inequality,lhs,rhs,gap,ok,note\n";
    for (const auto& r : report.rows) {
        const double s = r.entropic ? scale : 1.0;
        os << r.case_index << ',' << r.inequality << ',' << fmt17(r.lhs * s) << ','
           << fmt17(r.rhs * s) << ',' << fmt17(r.gap * s) << ','
           << (r.ok ? "pass" : "FAIL") << ',' << r.note << '\n';
    }
    return os.str();
}

std::string report_json(const Report& report) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["experiment"] = report.config.experiment;
    j["config"] = {{"n", report.config.n},
                   {"d", report.config.d},
                   {"count", report.config.count},
                   {"seed", report.config.seed},
                   {"alphas", report.config.alphas},
                   {"s", report.config.s},
                   {"t", report.config.t},
                   {"L", report.config.L},
                   {"unit", report.config.unit}};
    j["tolerances"] = {{"equality_log_units", kEqTol},
                       {"lu_invariance", kLuTol},
                       {"monotonicity_closed_form", kMonoSlack},
                       {"monotonicity_optimizer", kMonoSlackOpt},
                       {"clt_target", kCltTarget},
                       {"extremality_closed_form", kSlackClosedForm},
                       {"extremality_optimizer", kSlackOptimizer}};
    j["rows"] = report.rows.size();
    j["violations"] = report.violations;
    j["all_ok"] = report.violations == 0;
    return j.dump(2) + "\n";
}

void emit(const Report& report) {
    if (report.config.out_dir.empty()) return;
    std::filesystem::create_directories(report.config.out_dir);
    const auto base = std::filesystem::path(report.config.out_dir);
    write_text_file((base / "report.csv").string(), report_csv(report));
    write_text_file((base / "report.json").string(), report_json(report));
    for (const auto& [name, content] : report.curves)
        write_text_file((base / name).string(), content);
}

} // namespace qps
