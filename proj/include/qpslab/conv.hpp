#pragma once
// Quantum convolution: the two-register coupling permutation, the dense
// and characteristic-function convolution paths, and iterated
// self-convolution trajectories with per-step metrics.

#include <vector>

#include "qpslab/matrix.hpp"
#include "qpslab/measures.hpp"
#include "qpslab/weyl.hpp"

namespace qps {

// (s, t) with s^2 + t^2 = 1 mod d, both nontrivial (not 0, 1, or d-1).
struct ConvParams {
    int d = 0;
    int s = 0;
    int t = 0;

    ConvParams(int d_, int s_, int t_);
};

// All valid parameter pairs for prime d, ordered by (s, t). Empty for
// d in {2, 3, 5}; the smallest usable dimension is 7.
std::vector<ConvParams> find_params(int d);

// Permutation unitary on 2n factors: |i>|j> -> |si+tj>|-ti+sj> mod d.
Operator coupling_unitary(const ConvParams& params, int n);

// rho (x)_{s,t} sigma = Tr_B[U (rho (x) sigma) U^dag], computed by index
// contraction without forming the d^{2n}-dimensional product.
DensityOperator convolve_dense(const DensityOperator& rho, const DensityOperator& sigma,
                               const ConvParams& params);

// Characteristic-function product rule; the scalar convention on the
// second argument is calibrated once against the dense path at d=7, n=1.
CharTable convolve_fast(const CharTable& xi_rho, const CharTable& xi_sigma,
                        const ConvParams& params);

struct ConvStepMetrics {
    double entropy = 0.0;
    double ent_entropy = 0.0;          // NaN when no bipartition given
    double cond_entropy_alpha = 0.0;   // NaN when no bipartition given
    double trace_dist_to_mean = 0.0;
    int pauli_rank = 0;
};

struct ConvTrajectory {
    std::vector<DensityOperator> states;   // rho, conv_1 rho, ..., conv_L rho
    std::vector<ConvStepMetrics> metrics;  // aligned with states
};

// L-fold self-convolution with fixed (s, t). Bipartite metrics are
// recorded when a cut is supplied (alpha feeds the conditional entropy).
ConvTrajectory iterate(const DensityOperator& rho, const ConvParams& params, int L,
                       const Bipartition* cut = nullptr, double alpha = 1.0);

constexpr std::size_t kConvDimCap = std::size_t{1} << 16;  // on d^{2n}

} // namespace qps
