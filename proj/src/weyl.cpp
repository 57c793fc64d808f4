#include "qpslab/weyl.hpp"

#include <cmath>
#include <stdexcept>

namespace qps {

namespace {

struct Basis {
    int n, d, dim;
    std::vector<std::vector<int>> digit;  // digit[idx][j], factor 0 most significant

    Basis(int n_, int d_) : n(n_), d(d_) {
        dim = 1;
        for (int j = 0; j < n; ++j) dim *= d;
        digit.assign(dim, std::vector<int>(n));
        for (int idx = 0; idx < dim; ++idx) {
            int x = idx;
            for (int j = n - 1; j >= 0; --j) {
                digit[idx][j] = x % d;
                x /= d;
            }
        }
    }

    int shift(int idx, const std::vector<int>& q) const {
        int out = 0;
        for (int j = 0; j < n; ++j)
            out = out * d + (digit[idx][j] + q[j]) % d;
        return out;
    }
};

std::vector<cplx> roots(int d) {
    std::vector<cplx> w(d);
    for (int k = 0; k < d; ++k) {
        const double th = 2.0 * M_PI * k / d;
        w[k] = cplx(std::cos(th), std::sin(th));
    }
    return w;
}

// Product of the single-qudit phase prefactors of w(p, q).
cplx weyl_prefactor(const PhasePoint& x) {
    const int d = x.d;
    if (d == 2) {
        // i^{-pq} per factor
        int e = 0;  // power of -i
        for (int j = 0; j < x.n(); ++j) e = (e + x.p[j] * x.q[j]) % 4;
        static const cplx tab[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
        return tab[e];
    }
    PrimeModulus m(d);
    const int half = m.half();
    const auto w = roots(d);
    int e = 0;  // omega exponent
    for (int j = 0; j < x.n(); ++j)
        e = (e + m.neg(m.mul(half, m.mul(x.p[j], x.q[j])))) % d;
    return w[e];
}

} // namespace

Operator weyl_matrix(const PhasePoint& x) {
    PrimeModulus m(x.d);
    Basis bs(x.n(), x.d);
    const auto w = roots(x.d);
    const cplx pre = weyl_prefactor(x);
    Operator out(x.n(), x.d);
    for (int b = 0; b < bs.dim; ++b) {
        int e = 0;
        const int a = bs.shift(b, x.q);
        for (int j = 0; j < x.n(); ++j)
            e = (e + x.p[j] * bs.digit[a][j]) % x.d;
        out.at(a, b) = pre * w[e];
    }
    return out;
}

Operator conj_by_weyl(const Operator& op, const PhasePoint& x) {
    if (op.n() != x.n() || op.d() != x.d)
        throw std::invalid_argument("conj_by_weyl: (n, d) mismatch");
    Basis bs(x.n(), x.d);
    const auto w = roots(x.d);
    const int dim = op.dim();
    // (w rho w^dag)[a, b] = omega^{p.(a - b)} rho[a - q, b - q]; the
    // scalar prefactor cancels.
    std::vector<int> negq(x.q);
    for (int& v : negq) v = (x.d - v) % x.d;
    std::vector<int> phase_of(dim);
    for (int a = 0; a < dim; ++a) {
        int e = 0;
        for (int j = 0; j < x.n(); ++j)
            e = (e + x.p[j] * bs.digit[a][j]) % x.d;
        phase_of[a] = e;
    }
    Operator out(op.n(), op.d());
    for (int a = 0; a < dim; ++a) {
        const int am = bs.shift(a, negq);
        for (int b = 0; b < dim; ++b) {
            const int bm = bs.shift(b, negq);
            const int e = (phase_of[a] - phase_of[b] + x.d) % x.d;
            out.at(a, b) = w[e] * op.at(am, bm);
        }
    }
    return out;
}

CharTable char_function_op(const Operator& op) {
    const int n = op.n(), d = op.d();
    PrimeModulus m(d);
    Basis bs(n, d);
    const auto w = roots(d);
    CharTable table;
    table.n = n;
    table.d = d;
    std::size_t npts = 1;
    for (int j = 0; j < 2 * n; ++j) npts *= d;
    table.values.resize(npts);

    for (std::size_t xi = 0; xi < npts; ++xi) {
        const PhasePoint x = PhasePoint::from_index(d, n, xi);
        const cplx pre = weyl_prefactor(x);
        cplx s = 0.0;
        for (int b = 0; b < bs.dim; ++b) {
            const int a = bs.shift(b, x.q);
            int e = 0;
            for (int j = 0; j < n; ++j)
                e = (e + x.p[j] * bs.digit[a][j]) % d;
            // Tr[op w^dag] picks conj of the (a, b) entry of w
            s += op.at(a, b) * std::conj(pre * w[e]);
        }
        table.values[xi] = s;
    }
    return table;
}

CharTable char_function(const DensityOperator& rho) {
    return char_function_op(rho.op());
}

Operator inverse_char(const CharTable& table) {
    const int n = table.n, d = table.d;
    Basis bs(n, d);
    const auto w = roots(d);
    Operator out(n, d);
    const double norm = 1.0 / bs.dim;
    for (std::size_t xi = 0; xi < table.size(); ++xi) {
        const cplx coeff = table.values[xi];
        if (coeff == cplx(0.0, 0.0)) continue;
        const PhasePoint x = PhasePoint::from_index(d, n, xi);
        const cplx pre = weyl_prefactor(x);
        for (int b = 0; b < bs.dim; ++b) {
            const int a = bs.shift(b, x.q);
            int e = 0;
            for (int j = 0; j < n; ++j)
                e = (e + x.p[j] * bs.digit[a][j]) % d;
            out.at(a, b) += norm * coeff * pre * w[e];
        }
    }
    return out;
}

int pauli_rank(const CharTable& table) {
    int c = 0;
    for (const auto& v : table.values)
        if (std::abs(v) > kEpsSupp) ++c;
    return c;
}

int pauli_rank(const DensityOperator& rho) {
    return pauli_rank(char_function(rho));
}

} // namespace qps
