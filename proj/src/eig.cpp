#include "qpslab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qps {

namespace {

double offdiag_norm(const Operator& a) {
    double s = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s += std::norm(a.at(i, j));
    return std::sqrt(2.0 * s);
}

} // namespace

Spectrum eig_hermitian(const Operator& a_in) {
    if (a_in.herm_defect() > kTolHerm * std::max(1.0, a_in.max_abs()))
        throw std::invalid_argument("eig_hermitian: input not Hermitian");
    const int n = a_in.dim();
    Operator a = a_in;
    Operator v = Operator::identity(a_in.n(), a_in.d());

    const double anorm = std::max(a.frob_norm(), 1e-300);
    const double stop = 1e-15 * anorm;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx b = a.at(p, q);
                const double babs = std::abs(b);
                if (babs <= 1e-18 * anorm) continue;
                const cplx u = std::conj(b) / babs;  // phases out the pivot
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double tau = (aqq - app) / (2.0 * babs);
                const double t = (tau >= 0.0)
                                     ? -1.0 / (tau + std::sqrt(tau * tau + 1.0))
                                     : 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // J: identity except J[p][p]=c, J[p][q]=-s, J[q][p]=u s, J[q][q]=u c.
                const cplx us = u * s, uc = u * c;
                // rows: A <- J^dag A
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk + std::conj(us) * aqk;
                    a.at(q, k) = -s * apk + std::conj(uc) * aqk;
                }
                // columns: A <- A J, V <- V J
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp + us * akq;
                    a.at(k, q) = -s * akp + uc * akq;
                    const cplx vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = c * vkp + us * vkq;
                    v.at(k, q) = -s * vkp + uc * vkq;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a.at(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return diag[i] > diag[j]; });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Operator(a_in.n(), a_in.d());
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = diag[order[j]];
        for (int i = 0; i < n; ++i)
            out.eigenvectors.at(i, j) = v.at(i, order[j]);
    }
    return out;
}

double rank_threshold(const Spectrum& spec, int dim) {
    const double lmax = spec.eigenvalues.empty()
                            ? 0.0
                            : std::max(std::abs(spec.eigenvalues.front()),
                                       std::abs(spec.eigenvalues.back()));
    return 1e-10 * dim * lmax;
}

Operator matrix_power(const Operator& a, double s) {
    const auto spec = eig_hermitian(a);
    const double floor = -kTolPsd * std::max(1.0, std::abs(spec.eigenvalues.front()));
    if (spec.eigenvalues.back() < floor)
        throw std::domain_error("matrix_power: operator not PSD within tolerance");
    const int n = a.dim();
    Operator out(a.n(), a.d());
    const double eps = rank_threshold(spec, n);
    for (int k = 0; k < n; ++k) {
        const double lam = spec.eigenvalues[k];
        if (lam <= eps) continue;  // pseudo-power: support only
        const double f = std::pow(lam, s);
        // out += f * v_k v_k^dag
        for (int i = 0; i < n; ++i) {
            const cplx vi = spec.eigenvectors.at(i, k);
            if (vi == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j)
                out.at(i, j) += f * vi * std::conj(spec.eigenvectors.at(j, k));
        }
    }
    return out;
}

double trace_norm(const Operator& a) {
    const auto spec = eig_hermitian(a);
    double s = 0.0;
    for (double l : spec.eigenvalues) s += std::abs(l);
    return s;
}

int rank_eps(const Operator& a) {
    const auto spec = eig_hermitian(a);
    const double eps = rank_threshold(spec, a.dim());
    int r = 0;
    for (double l : spec.eigenvalues)
        if (l > eps) ++r;
    return r;
}

} // namespace qps
