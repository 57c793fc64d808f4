#pragma once
// Discrete Wigner representation for odd prime d: phase-point operators,
// the Wigner transform (direct and via symplectic Fourier transform),
// and Wigner rank.

#include <vector>

#include "qpslab/matrix.hpp"
#include "qpslab/weyl.hpp"
#include "qpslab/zd.hpp"

namespace qps {

// Real table over all d^{2n} phase points (odd prime d).
struct WignerTable {
    int n = 0, d = 3;
    std::vector<double> values;

    double at(const PhasePoint& x) const { return values[x.index()]; }
    std::size_t size() const { return values.size(); }
};

// T(x) = w(x) T(0) w(x)^dag with T(0) = (1/d^n) sum_u w(u).
Operator phase_point_op(const PhasePoint& x);

// W_rho(x) = (1/d^n) Tr[T(x) rho]
WignerTable wigner_function(const DensityOperator& rho);
WignerTable wigner_function_op(const Operator& op);

// W(u) = (1/d^{2n}) sum_v omega^{kappa [u,v]} Xi(v); the kernel sign
// kappa is calibrated once against the direct path at d=3, n=1.
WignerTable wigner_via_symplectic_ft(const CharTable& table);

// |{ x : |W_rho(x)| > kEpsSupp }|
int wigner_rank(const WignerTable& table);
int wigner_rank(const DensityOperator& rho);

// The calibrated kernel exponent sign (+1 or -1); exposed for reports.
int symplectic_ft_kappa();

} // namespace qps
