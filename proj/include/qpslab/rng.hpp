#pragma once
// Deterministic splittable randomness: every consumer derives an
// independent stream from (seed, label). SplitMix64 over a hashed key.

#include <cstdint>
#include <string>

#include "qpslab/matrix.hpp"

namespace qps {

class RandomStream {
public:
    RandomStream(std::uint64_t seed, const std::string& label);

    std::uint64_t next_u64();
    double uniform();                 // [0, 1)
    double gaussian();                // standard normal (Box-Muller)
    int uniform_int(int lo, int hi);  // inclusive bounds

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Rank-k mixed state from the partial-trace (Hilbert-Schmidt induced)
// ensemble: rho = G G^dag / Tr, G a d^n x k complex Gaussian matrix.
DensityOperator random_state(int n, int d, int k, RandomStream& rng);

// Haar-random d x d unitary (QR of a Gaussian with phase fix).
Operator haar_unitary(int d, RandomStream& rng);

// Tensor product of n independent Haar d x d unitaries.
Operator random_local_unitary(int n, int d, RandomStream& rng);

} // namespace qps
