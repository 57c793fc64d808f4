#pragma once
// Hermitian eigendecomposition (cyclic Jacobi) and matrix functions.

#include <vector>

#include "qpslab/matrix.hpp"

namespace qps {

// eig_hermitian residual contract: ||A - V L V^dag||_F <= kTolEig * ||A||_F.
constexpr double kTolEig = 1e-9;

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    Operator eigenvectors;            // columns, unitary
};

Spectrum eig_hermitian(const Operator& a);

// A^s for PSD A via eigendecomposition; eigenvalues below psd tolerance
// clamp to 0 (and stay 0 for negative s: pseudo-power on the support).
Operator matrix_power(const Operator& a, double s);

// sum |lambda_i| for Hermitian A.
double trace_norm(const Operator& a);

// Number of eigenvalues above eps_rank = 1e-10 * dim * lambda_max.
int rank_eps(const Operator& a);
double rank_threshold(const Spectrum& spec, int dim);

} // namespace qps
