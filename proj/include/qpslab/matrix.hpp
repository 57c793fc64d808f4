#pragma once
// Dense complex operator algebra on n-qudit Hilbert spaces.

#include <complex>
#include <cstddef>
#include <vector>

#include "qpslab/kernels.hpp"

namespace qps {

using cplx = std::complex<double>;

constexpr double kTolHerm = 1e-10;   // Hermiticity (max-abs deviation)
constexpr double kTolTrace = 1e-10;  // trace-one deviation
constexpr double kTolPsd = 1e-10;    // eigenvalue floor

// Row-major dense complex matrix with qudit-factor metadata.
// factors() lists local dimensions; dim() is their product.
class Operator {
public:
    Operator() = default;
    Operator(int n, int d);                       // zero operator, d^n x d^n
    static Operator identity(int n, int d);

    int dim() const { return dim_; }
    int n() const { return n_; }
    int d() const { return d_; }

    cplx& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cplx& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const cplx* row(int r) const { return a_.data() + static_cast<std::size_t>(r) * dim_; }
    cplx* row(int r) { return a_.data() + static_cast<std::size_t>(r) * dim_; }
    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator operator*(const Operator& o) const;   // matrix product
    Operator scaled(cplx s) const;
    Operator adjoint() const;

    cplx trace() const;
    double frob_norm() const;
    double max_abs() const;
    double herm_defect() const;                    // max |A - A^dag| entry
    bool is_hermitian(double tol = kTolHerm) const { return herm_defect() <= tol; }

    void add_scaled(const Operator& o, cplx s);    // *this += s * o

private:
    int n_ = 0, d_ = 0, dim_ = 0;
    std::vector<cplx> a_;
};

double frob_dist(const Operator& a, const Operator& b);
cplx trace_product(const Operator& a, const Operator& b);   // Tr[A B]

// Hermitian PSD unit-trace operator. Construction validates.
class DensityOperator {
public:
    // psd_check runs an eigendecomposition; skip only where positivity
    // is structural (e.g. GG^dag constructions).
    explicit DensityOperator(Operator op, bool psd_check = true);

    const Operator& op() const { return op_; }
    int dim() const { return op_.dim(); }
    int n() const { return op_.n(); }
    int d() const { return op_.d(); }

    double purity() const;                         // Tr rho^2

private:
    Operator op_;
};

Operator kron(const Operator& a, const Operator& b);

// Trace out every factor not in `keep` (0-based factor indices).
Operator partial_trace_op(const Operator& op, const std::vector<int>& keep);
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

// Transpose the designated factors in place.
Operator partial_transpose(const Operator& op, const std::vector<int>& part);

// Place `op` (acting on factors `where`, in increasing order) into an
// n-factor space, identity elsewhere.
Operator embed(const Operator& op, const std::vector<int>& where, int n_total, int d);

} // namespace qps
