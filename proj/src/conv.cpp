#include "qpslab/conv.hpp"

#include <cmath>
#include <stdexcept>

#include "qpslab/eig.hpp"
#include "qpslab/rng.hpp"
#include "qpslab/stab.hpp"

namespace qps {

namespace {

bool nontrivial(int v, int d) { return v != 0 && v != 1 && v != d - 1; }

std::size_t pow_sz(int base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void check_cap(int d, int n) {
    if (pow_sz(d, 2 * n) > kConvDimCap)
        throw std::invalid_argument("convolution: d^{2n} exceeds the dimension cap");
}

// digit decomposition of flat index, most significant factor first
void to_digits(std::size_t idx, int n, int d, int* out) {
    for (int k = n - 1; k >= 0; --k) {
        out[k] = static_cast<int>(idx % d);
        idx /= d;
    }
}

std::size_t from_digits(const int* dig, int n, int d) {
    std::size_t idx = 0;
    for (int k = 0; k < n; ++k) idx = idx * d + dig[k];
    return idx;
}

void symmetrize(Operator& a) {
    for (int i = 0; i < a.dim(); ++i) {
        a.at(i, i) = a.at(i, i).real();
        for (int j = i + 1; j < a.dim(); ++j) {
            const cplx m = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = m;
            a.at(j, i) = std::conj(m);
        }
    }
}

// Sign convention for the second argument of the product rule, fixed by
// comparing both candidates against the dense path at d = 7, n = 1.
int fast_sign() {
    static const int sign = [] {
        const ConvParams params(7, 2, 2);
        RandomStream rng(987, "conv-calibration");
        bool plus_ok = true, minus_ok = true;
        for (int trial = 0; trial < 4; ++trial) {
            const auto rho = random_state(1, 7, trial == 0 ? 1 : 7, rng);
            const auto sig = random_state(1, 7, 3, rng);
            const auto want = char_function(convolve_dense(rho, sig, params));
            const auto xr = char_function(rho);
            const auto xs = char_function(sig);
            for (std::size_t xi = 0; xi < want.size(); ++xi) {
                const PhasePoint x = PhasePoint::from_index(7, 1, xi);
                const cplx a = xr.at(x.scaled(params.s));
                const cplx bp = xs.at(x.scaled(params.t));
                const cplx bm = xs.at(x.scaled(7 - params.t));
                if (std::abs(a * bp - want.values[xi]) > 1e-9) plus_ok = false;
                if (std::abs(a * bm - want.values[xi]) > 1e-9) minus_ok = false;
            }
        }
        if (plus_ok == minus_ok)
            throw std::runtime_error(
                "convolve_fast: sign calibration against the dense path failed");
        return plus_ok ? +1 : -1;
    }();
    return sign;
}

} // namespace

ConvParams::ConvParams(int d_, int s_, int t_) : d(d_), s(s_), t(t_) {
    PrimeModulus m(d);
    if (s < 0 || s >= d || t < 0 || t >= d)
        throw std::invalid_argument("ConvParams: s, t must lie in [0, d)");
    if (m.reduce(static_cast<long long>(s) * s + static_cast<long long>(t) * t) != 1)
        throw std::invalid_argument("ConvParams: s^2 + t^2 != 1 mod d");
    if (!nontrivial(s, d) || !nontrivial(t, d))
        throw std::invalid_argument("ConvParams: s, t must be nontrivial");
}

std::vector<ConvParams> find_params(int d) {
    PrimeModulus m(d);
    std::vector<ConvParams> out;
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) {
            if (m.reduce(static_cast<long long>(s) * s + static_cast<long long>(t) * t) != 1)
                continue;
            if (nontrivial(s, d) && nontrivial(t, d)) out.emplace_back(d, s, t);
        }
    return out;
}

Operator coupling_unitary(const ConvParams& params, int n) {
    const int d = params.d;
    check_cap(d, n);
    Operator u(2 * n, d);
    const std::size_t dn = pow_sz(d, n);
    std::vector<int> i(n), j(n), a(n), b(n);
    for (std::size_t ii = 0; ii < dn; ++ii) {
        to_digits(ii, n, d, i.data());
        for (std::size_t jj = 0; jj < dn; ++jj) {
            to_digits(jj, n, d, j.data());
            for (int k = 0; k < n; ++k) {
                a[k] = (params.s * i[k] + params.t * j[k]) % d;
                b[k] = ((params.s * j[k] - params.t * i[k]) % d + d) % d;
            }
            u.at(from_digits(a.data(), n, d) * dn + from_digits(b.data(), n, d),
                 ii * dn + jj) = 1.0;
        }
    }
    return u;
}

DensityOperator convolve_dense(const DensityOperator& rho, const DensityOperator& sigma,
                               const ConvParams& params) {
    if (rho.n() != sigma.n() || rho.d() != sigma.d() || rho.d() != params.d)
        throw std::invalid_argument("convolve_dense: (n, d) mismatch");
    const int n = rho.n(), d = rho.d();
    check_cap(d, n);
    const int dim = rho.dim();

    // inverse of the coupling map: i = s a - t b, j = t a + s b
    std::vector<std::size_t> imap(static_cast<std::size_t>(dim) * dim);
    std::vector<std::size_t> jmap(static_cast<std::size_t>(dim) * dim);
    std::vector<int> da(n), db(n), di(n), dj(n);
    for (int a = 0; a < dim; ++a) {
        to_digits(a, n, d, da.data());
        for (int b = 0; b < dim; ++b) {
            to_digits(b, n, d, db.data());
            for (int k = 0; k < n; ++k) {
                di[k] = ((params.s * da[k] - params.t * db[k]) % d + d) % d;
                dj[k] = (params.t * da[k] + params.s * db[k]) % d;
            }
            imap[static_cast<std::size_t>(a) * dim + b] = from_digits(di.data(), n, d);
            jmap[static_cast<std::size_t>(a) * dim + b] = from_digits(dj.data(), n, d);
        }
    }

    Operator out(n, d);
    for (int a = 0; a < dim; ++a)
        for (int a2 = 0; a2 < dim; ++a2) {
            cplx acc = 0.0;
            for (int b = 0; b < dim; ++b)
                acc += rho.op().at(imap[static_cast<std::size_t>(a) * dim + b],
                                   imap[static_cast<std::size_t>(a2) * dim + b]) *
                       sigma.op().at(jmap[static_cast<std::size_t>(a) * dim + b],
                                     jmap[static_cast<std::size_t>(a2) * dim + b]);
            out.at(a, a2) = acc;
        }
    symmetrize(out);
    return DensityOperator(std::move(out));
}

CharTable convolve_fast(const CharTable& xi_rho, const CharTable& xi_sigma,
                        const ConvParams& params) {
    if (xi_rho.n != xi_sigma.n || xi_rho.d != xi_sigma.d || xi_rho.d != params.d)
        throw std::invalid_argument("convolve_fast: (n, d) mismatch");
    const int t_eff = fast_sign() > 0 ? params.t : params.d - params.t;
    CharTable out;
    out.n = xi_rho.n;
    out.d = xi_rho.d;
    out.values.resize(xi_rho.size());
    for (std::size_t xi = 0; xi < out.size(); ++xi) {
        const PhasePoint x = PhasePoint::from_index(out.d, out.n, xi);
        out.values[xi] = xi_rho.at(x.scaled(params.s)) * xi_sigma.at(x.scaled(t_eff));
    }
    return out;
}

ConvTrajectory iterate(const DensityOperator& rho, const ConvParams& params, int L,
                       const Bipartition* cut, double alpha) {
    if (L < 0) throw std::invalid_argument("iterate: L must be >= 0");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const auto mean = mean_state_threshold(rho).state;
    const auto xi_rho = char_function(rho);

    ConvTrajectory traj;
    traj.states.push_back(rho);
    auto record = [&](const DensityOperator& st, const CharTable& xi) {
        ConvStepMetrics m;
        m.entropy = von_neumann_entropy(st);
        m.ent_entropy = cut ? entanglement_entropy(st, *cut) : nan;
        m.cond_entropy_alpha = cut ? conditional_entropy(st, *cut, alpha).value : nan;
        m.trace_dist_to_mean = trace_norm(st.op() - mean.op());
        m.pauli_rank = pauli_rank(xi);
        traj.metrics.push_back(m);
    };
    record(rho, xi_rho);

    CharTable xi_acc = xi_rho;
    for (int step = 1; step <= L; ++step) {
        const auto& prev = traj.states.back();
        if (rho.n() == 1) {
            // fast path: tables of size d^2
            xi_acc = convolve_fast(xi_acc, xi_rho, params);
            Operator m = inverse_char(xi_acc);
            symmetrize(m);
            traj.states.emplace_back(std::move(m));
        } else {
            traj.states.push_back(convolve_dense(prev, rho, params));
            xi_acc = char_function(traj.states.back());
        }
        record(traj.states.back(), xi_acc);
    }
    return traj;
}

} // namespace qps
