#pragma once
// Weyl (generalized Pauli) operators and the characteristic-function
// transform pair.
//
// Single-qudit convention: w(p,q) = omega^{-2^{-1} p q} Z^p X^q for odd
// prime d, and w(p,q) = i^{-pq} Z^p X^q for d = 2. n-qudit operators are
// tensor products of the single-qudit ones.

#include <vector>

#include "qpslab/matrix.hpp"
#include "qpslab/zd.hpp"

namespace qps {

constexpr double kEpsSupp = 1e-10;  // support threshold for chi_P / chi_W

// Complex table over all d^{2n} phase points, indexed by PhasePoint::index().
struct CharTable {
    int n = 0, d = 2;
    std::vector<cplx> values;

    cplx at(const PhasePoint& x) const { return values[x.index()]; }
    std::size_t size() const { return values.size(); }
};

// Dense unitary matrix of w(x).
Operator weyl_matrix(const PhasePoint& x);

// w(x) rho w(x)^dag without materializing w(x); O(dim^2).
Operator conj_by_weyl(const Operator& op, const PhasePoint& x);

// Xi_rho(x) = Tr[rho w(x)^dag] for every x in V^n.
CharTable char_function(const DensityOperator& rho);
CharTable char_function_op(const Operator& op);   // same, no state checks

// rho = (1/d^n) sum_x Xi(x) w(x). Output need not be a valid state.
Operator inverse_char(const CharTable& table);

// |{ x : |Xi_rho(x)| > kEpsSupp }|
int pauli_rank(const CharTable& table);
int pauli_rank(const DensityOperator& rho);

} // namespace qps
