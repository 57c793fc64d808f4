#include "qpslab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpslab/eig.hpp"

namespace qps {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSupportLeak = 1e-9;   // tolerated mass outside supp(sigma)
constexpr double kOptDelta = 1e-12;     // optimizer-only regularization
constexpr double kOptEta = 0.5;         // fixed-point damping
constexpr double kOptTol = 1e-9;        // trace-distance stop
constexpr int kOptMaxIter = 2000;

double entropy_of_spectrum(const Spectrum& spec, int dim) {
    const double eps = rank_threshold(spec, dim);
    double s = 0.0;
    for (double l : spec.eigenvalues)
        if (l > eps) s -= l * std::log(l);
    return s;
}

// Tr[rho log sigma] with a support check; +inf leak flag via return.
bool trace_rho_log_sigma(const Operator& rho, const Operator& sigma, double* out) {
    const auto spec = eig_hermitian(sigma);
    const double eps = rank_threshold(spec, sigma.dim());
    const int dim = sigma.dim();
    double acc = 0.0, leak = 0.0;
    std::vector<cplx> v(dim), rv(dim);
    for (int k = 0; k < dim; ++k) {
        for (int i = 0; i < dim; ++i) v[i] = spec.eigenvectors.at(i, k);
        // <v| rho |v>
        for (int i = 0; i < dim; ++i) {
            cplx s = 0.0;
            for (int j = 0; j < dim; ++j) s += rho.at(i, j) * v[j];
            rv[i] = s;
        }
        const double w = kernels::dotc(v.data(), rv.data(), dim).real();
        if (spec.eigenvalues[k] > eps)
            acc += w * std::log(spec.eigenvalues[k]);
        else
            leak += std::abs(w);
    }
    if (leak > kSupportLeak) return false;
    *out = acc;
    return true;
}

// Sandwiched Renyi divergence on raw PSD operators (sigma need not be
// normalized; needed for I_A (x) sigma_B arguments).
double renyi_div_raw(const Operator& rho, const Operator& sigma, double alpha) {
    if (alpha < 0.5)
        throw std::invalid_argument("renyi divergence requires alpha >= 1/2");
    if (alpha == 1.0) {
        const auto spec_rho = eig_hermitian(rho);
        double s_rho = -entropy_of_spectrum(spec_rho, rho.dim());
        double tls = 0.0;
        if (!trace_rho_log_sigma(rho, sigma, &tls)) return kInf;
        return s_rho - tls;
    }
    const double e = (1.0 - alpha) / (2.0 * alpha);
    if (alpha > 1.0) {
        // support(rho) must lie inside support(sigma)
        const auto spec = eig_hermitian(sigma);
        const double eps = rank_threshold(spec, sigma.dim());
        const int dim = sigma.dim();
        double leak = 0.0;
        std::vector<cplx> v(dim), rv(dim);
        for (int k = 0; k < dim; ++k) {
            if (spec.eigenvalues[k] > eps) continue;
            for (int i = 0; i < dim; ++i) v[i] = spec.eigenvectors.at(i, k);
            for (int i = 0; i < dim; ++i) {
                cplx s = 0.0;
                for (int j = 0; j < dim; ++j) s += rho.at(i, j) * v[j];
                rv[i] = s;
            }
            leak += std::abs(kernels::dotc(v.data(), rv.data(), dim).real());
        }
        if (leak > kSupportLeak) return kInf;
    }
    const Operator se = matrix_power(sigma, e);
    const Operator k = se * rho * se;
    const auto spec_k = eig_hermitian(k);
    const double eps_k = rank_threshold(spec_k, k.dim());
    double tr = 0.0;
    for (double l : spec_k.eigenvalues)
        if (l > eps_k) tr += std::pow(l, alpha);
    return std::log(tr) / (alpha - 1.0);
}

double trace_distance(const Operator& a, const Operator& b) {
    return 0.5 * trace_norm(a - b);
}

// Power with an explicit eigenvalue floor: the optimizer's regularized
// iterates have spectrum >= delta/dim, well below the generic rank
// threshold, and those directions must not be dropped.
// Like matrix_power but without the PSD gate: the sandwich X rho X
// amplifies rho's O(1e-16) negative noise eigenvalues past the strict
// tolerance; they sit below the rank threshold and are dropped anyway.
Operator power_clamped(const Operator& a, double s) {
    const auto spec = eig_hermitian(a);
    const double eps = rank_threshold(spec, a.dim());
    const int dim = a.dim();
    Operator out(a.n(), a.d());
    for (int k = 0; k < dim; ++k) {
        const double lam = spec.eigenvalues[k];
        if (lam <= eps) continue;
        const double f = std::pow(lam, s);
        for (int i = 0; i < dim; ++i) {
            const cplx vi = spec.eigenvectors.at(i, k);
            for (int j = 0; j < dim; ++j)
                out.at(i, j) += f * vi * std::conj(spec.eigenvectors.at(j, k));
        }
    }
    return out;
}

Operator power_floored(const Operator& a, double s, double floor) {
    const auto spec = eig_hermitian(a);
    const int dim = a.dim();
    Operator out(a.n(), a.d());
    for (int k = 0; k < dim; ++k) {
        const double lam = std::max(spec.eigenvalues[k], floor);
        const double f = std::pow(lam, s);
        for (int i = 0; i < dim; ++i) {
            const cplx vi = spec.eigenvectors.at(i, k);
            for (int j = 0; j < dim; ++j)
                out.at(i, j) += f * vi * std::conj(spec.eigenvectors.at(j, k));
        }
    }
    return out;
}

} // namespace

Bipartition Bipartition::split(int n_total, const std::vector<int>& part_a) {
    Bipartition cut;
    std::vector<bool> ina(n_total, false);
    for (int i : part_a) {
        if (i < 0 || i >= n_total)
            throw std::out_of_range("Bipartition: factor index out of range");
        ina[i] = true;
    }
    for (int j = 0; j < n_total; ++j) (ina[j] ? cut.a : cut.b).push_back(j);
    if (cut.a.empty() || cut.b.empty())
        throw std::invalid_argument("Bipartition: both parts must be nonempty");
    return cut;
}

double von_neumann_entropy(const DensityOperator& rho) {
    return entropy_of_spectrum(eig_hermitian(rho.op()), rho.dim());
}

double max_entropy(const DensityOperator& rho) {
    return std::log(static_cast<double>(rank_eps(rho.op())));
}

double renyi_divergence(const DensityOperator& rho, const DensityOperator& sigma,
                        double alpha) {
    return renyi_div_raw(rho.op(), sigma.op(), alpha);
}

double entanglement_entropy(const DensityOperator& rho, const Bipartition& cut) {
    return von_neumann_entropy(partial_trace(rho, cut.a));
}

CondEntropyResult conditional_entropy(const DensityOperator& rho,
                                      const Bipartition& cut, double alpha) {
    if (alpha < 0.5)
        throw std::invalid_argument("conditional_entropy requires alpha >= 1/2");
    CondEntropyResult res;
    const auto rho_b = partial_trace(rho, cut.b);
    if (alpha == 1.0) {
        res.value = von_neumann_entropy(rho) - von_neumann_entropy(rho_b);
        return res;
    }

    const int n = rho.n(), d = rho.d();
    const double e = (1.0 - alpha) / (2.0 * alpha);
    const int dim_b = rho_b.dim();
    const Operator eye_b = Operator::identity(rho_b.op().n(), d);

    auto lift = [&](const Operator& sb) { return embed(sb, cut.b, n, d); };

    Operator sigma = rho_b.op();
    int it = 0;
    for (; it < kOptMaxIter; ++it) {
        // strictly positive iterate
        Operator sreg = sigma.scaled(1.0 - kOptDelta);
        sreg.add_scaled(eye_b, kOptDelta / dim_b);
        const Operator x = lift(power_floored(sreg, e, 0.5 * kOptDelta / dim_b));
        const Operator k = x * rho.op() * x;
        const Operator k_alpha = power_clamped(k, alpha);
        // Stationarity: sigma proportional to Tr_A[(X rho X)^alpha]. (Classical
        // shadow: q^alpha proportional to sum_a p(ab)^alpha, the Lagrange
        // condition of the variational problem.)
        Operator phi = partial_trace_op(k_alpha, cut.b);
        phi = phi.scaled(1.0 / phi.trace().real());
        Operator next = sigma.scaled(1.0 - kOptEta);
        next.add_scaled(phi, kOptEta);
        const double dist = trace_distance(next, sigma);
        sigma = std::move(next);
        if (dist < kOptTol) break;
    }
    res.iterations = it + 1;
    res.converged = it < kOptMaxIter;
    res.value = -renyi_div_raw(rho.op(), lift(sigma), alpha);
    return res;
}

double negativity(const DensityOperator& rho, const Bipartition& cut) {
    const double tn = trace_norm(partial_transpose(rho.op(), cut.b));
    return std::max(0.0, (tn - 1.0) / 2.0);
}

ExtremalityReport extremality_report(const DensityOperator& rho,
                                     const Bipartition& cut,
                                     const std::vector<double>& alphas) {
    const auto mean = mean_state_threshold(rho).state;
    ExtremalityReport rep;

    auto add = [&](const std::string& name, double vr, double vm, bool mean_larger,
                   double slack) {
        ExtremalityRow row;
        row.measure = name;
        row.value_rho = vr;
        row.value_mean = vm;
        row.gap = mean_larger ? (vm - vr) : (vr - vm);
        row.sign_ok = row.gap >= -slack;
        rep.all_ok = rep.all_ok && row.sign_ok;
        rep.rows.push_back(std::move(row));
    };

    add("S", von_neumann_entropy(rho), von_neumann_entropy(mean), true,
        kSlackClosedForm);
    add("S(A)", entanglement_entropy(rho, cut), entanglement_entropy(mean, cut),
        true, kSlackClosedForm);
    for (double a : alphas) {
        const auto cr = conditional_entropy(rho, cut, a);
        const auto cm = conditional_entropy(mean, cut, a);
        const double slack = (a == 1.0) ? kSlackClosedForm : kSlackOptimizer;
        add("S_alpha(A|B) alpha=" + std::to_string(a), cr.value, cm.value, true,
            slack);
    }
    add("N", negativity(rho, cut), negativity(mean, cut), false, kSlackClosedForm);
    return rep;
}

} // namespace qps
