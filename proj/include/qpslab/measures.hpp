#pragma once
// Entropic and correlation measures: von Neumann / max / Renyi
// quantities, conditional entropy with numerical infimum, negativity,
// and the extremality report. Natural-log units throughout.

#include <limits>
#include <string>
#include <vector>

#include "qpslab/matrix.hpp"
#include "qpslab/stab.hpp"

namespace qps {

// Factor index sets A and its complement B; both nonempty.
struct Bipartition {
    std::vector<int> a;
    std::vector<int> b;

    static Bipartition split(int n_total, const std::vector<int>& part_a);
};

double von_neumann_entropy(const DensityOperator& rho);
double max_entropy(const DensityOperator& rho);  // ln rank

// Sandwiched Renyi divergence, alpha >= 1/2; alpha = 1 routes to the
// Umegaki relative entropy. Support violations return +infinity.
double renyi_divergence(const DensityOperator& rho, const DensityOperator& sigma,
                        double alpha);

double entanglement_entropy(const DensityOperator& rho, const Bipartition& cut);

struct CondEntropyResult {
    double value = 0.0;
    bool converged = true;
    int iterations = 0;
};

// S_alpha(A|B) = -inf_{sigma_B} D_alpha(rho_AB || I_A (x) sigma_B).
// alpha = 1 uses the closed form S(AB) - S(B); otherwise a damped
// fixed-point iteration over sigma_B.
CondEntropyResult conditional_entropy(const DensityOperator& rho,
                                      const Bipartition& cut, double alpha);

// (||rho^{T_B}||_1 - 1) / 2
double negativity(const DensityOperator& rho, const Bipartition& cut);

struct ExtremalityRow {
    std::string measure;
    double value_rho = 0.0;
    double value_mean = 0.0;
    double gap = 0.0;      // signed so that >= -slack means the bound holds
    bool sign_ok = false;
};

struct ExtremalityReport {
    std::vector<ExtremalityRow> rows;
    bool all_ok = true;
};

// Evaluates {S, S(A), S_alpha(A|B), N} on rho and M(rho); entropic rows
// must not decrease and negativity must not increase under M.
ExtremalityReport extremality_report(const DensityOperator& rho,
                                     const Bipartition& cut,
                                     const std::vector<double>& alphas);

constexpr double kSlackClosedForm = 1e-7;
constexpr double kSlackOptimizer = 1e-5;

} // namespace qps
