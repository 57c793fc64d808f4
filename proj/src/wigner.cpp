#include "qpslab/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "qpslab/rng.hpp"

namespace qps {

namespace {

void require_odd_prime(int d) {
    if (d == 2)
        throw std::invalid_argument("Wigner machinery requires odd prime d");
    PrimeModulus check(d);
}

Operator t_zero(int n, int d) {
    Operator t(n, d);
    std::size_t npts = 1;
    for (int j = 0; j < 2 * n; ++j) npts *= d;
    for (std::size_t ui = 0; ui < npts; ++ui)
        t.add_scaled(weyl_matrix(PhasePoint::from_index(d, n, ui)), 1.0);
    return t.scaled(1.0 / t.dim());
}

} // namespace

Operator phase_point_op(const PhasePoint& x) {
    require_odd_prime(x.d);
    auto t0 = t_zero(x.n(), x.d);
    return conj_by_weyl(t0, x);
}

WignerTable wigner_function_op(const Operator& op) {
    const int n = op.n(), d = op.d();
    require_odd_prime(d);
    WignerTable table;
    table.n = n;
    table.d = d;
    std::size_t npts = 1;
    for (int j = 0; j < 2 * n; ++j) npts *= d;
    table.values.resize(npts);

    const auto t0 = t_zero(n, d);
    const double norm = 1.0 / op.dim();
    for (std::size_t xi = 0; xi < npts; ++xi) {
        const PhasePoint x = PhasePoint::from_index(d, n, xi);
        // Tr[T(x) rho] = Tr[T(0) w(x)^dag rho w(x)]
        std::vector<int> negp(x.p), negq(x.q);
        for (int& v : negp) v = (d - v) % d;
        for (int& v : negq) v = (d - v) % d;
        const Operator moved = conj_by_weyl(op, PhasePoint(d, negp, negq));
        const cplx w = trace_product(t0, moved) * norm;
        table.values[xi] = w.real();
        if (std::abs(w.imag()) > 1e-10)
            throw std::runtime_error("wigner_function: non-real value, input corrupt");
    }
    return table;
}

WignerTable wigner_function(const DensityOperator& rho) {
    return wigner_function_op(rho.op());
}

namespace {

WignerTable symplectic_ft_with_kappa(const CharTable& table, int kappa) {
    const int n = table.n, d = table.d;
    WignerTable out;
    out.n = n;
    out.d = d;
    out.values.assign(table.size(), 0.0);
    std::vector<cplx> w(d);
    for (int k = 0; k < d; ++k)
        w[k] = std::polar(1.0, 2.0 * M_PI * k / d);
    const double norm = 1.0 / static_cast<double>(table.size());
    for (std::size_t ui = 0; ui < table.size(); ++ui) {
        const PhasePoint u = PhasePoint::from_index(d, n, ui);
        cplx s = 0.0;
        for (std::size_t vi = 0; vi < table.size(); ++vi) {
            const PhasePoint v = PhasePoint::from_index(d, n, vi);
            int e = symplectic_form(u, v);
            if (kappa < 0) e = (d - e) % d;
            s += w[e] * table.values[vi];
        }
        out.values[ui] = (s * norm).real();
    }
    return out;
}

// One-time kernel calibration at d=3, n=1: the candidate sign must
// reproduce the direct Wigner path on a spanning set of states.
int calibrate_kappa() {
    std::vector<DensityOperator> probes;
    Operator proj(1, 3);
    proj.at(0, 0) = 1.0;
    probes.emplace_back(std::move(proj), false);
    RandomStream rng(0xCA11B8A7Eull, "wigner-kappa");
    for (int i = 0; i < 4; ++i) probes.push_back(random_state(1, 3, 2, rng));

    for (int kappa : {+1, -1}) {
        bool ok = true;
        for (const auto& rho : probes) {
            const auto direct = wigner_function(rho);
            const auto viaft = symplectic_ft_with_kappa(char_function(rho), kappa);
            for (std::size_t i = 0; i < direct.size(); ++i)
                if (std::abs(direct.values[i] - viaft.values[i]) > 1e-11) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return kappa;
    }
    throw std::runtime_error("symplectic FT kernel calibration failed: no sign matches");
}

} // namespace

int symplectic_ft_kappa() {
    static const int kappa = calibrate_kappa();
    return kappa;
}

WignerTable wigner_via_symplectic_ft(const CharTable& table) {
    require_odd_prime(table.d);
    return symplectic_ft_with_kappa(table, symplectic_ft_kappa());
}

int wigner_rank(const WignerTable& table) {
    int c = 0;
    for (double v : table.values)
        if (std::abs(v) > kEpsSupp) ++c;
    return c;
}

int wigner_rank(const DensityOperator& rho) {
    return wigner_rank(wigner_function(rho));
}

} // namespace qps
