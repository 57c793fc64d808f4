#pragma once
// Stabilizer groups, mean states (threshold and twirl routes),
// stabilizer-state synthesis, and the stabilizer predicate.

#include <vector>

#include "qpslab/matrix.hpp"
#include "qpslab/weyl.hpp"
#include "qpslab/zd.hpp"

namespace qps {

constexpr double kEpsGroup = 1e-8;       // |Xi| = 1 detection
constexpr double kTolStabilizer = 1e-7;  // ||rho - M(rho)||_F predicate
constexpr std::size_t kTwirlCap = 1 << 16;  // largest enumerable d^{2n}

struct StabilizerGroup {
    PhaseSubgroup support;        // isotropic; rank r
    std::vector<cplx> phases;     // Xi_rho on the basis points, unit modulus

    int rank() const { return support.rank(); }
};

struct MeanState {
    DensityOperator state;
    StabilizerGroup group;
};

// G_rho = { x : |Xi_rho(x)| >= 1 - kEpsGroup }, with isotropy asserted.
StabilizerGroup stabilizer_group(const DensityOperator& rho);
StabilizerGroup stabilizer_group(const CharTable& table);

// M(rho) by zeroing characteristic values of modulus < 1.
MeanState mean_state_threshold(const DensityOperator& rho);

// M(rho) as the average of w(y) rho w(y)^dag over y in the symplectic
// complement of the group support.
MeanState mean_state_twirl(const DensityOperator& rho);

// Stabilizer state from generators g_i = phase_i * w(x_i): phase tag
// c in Z_d gives omega^c for odd d; for d = 2 the tag is 0 (+1) or 1 (-1).
DensityOperator stabilizer_state_from_generators(
    const std::vector<std::pair<PhasePoint, int>>& gens, int n, int d);

// true iff ||rho - M(rho)||_F <= kTolStabilizer
bool is_stabilizer(const DensityOperator& rho);

// Random stabilizer state: r independent commuting generators with
// random phase tags (rejection sampling over phase points).
class RandomStream;
DensityOperator random_stabilizer_state(int n, int d, int r, RandomStream& rng);

} // namespace qps
