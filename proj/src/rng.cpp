#include "qpslab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qps {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed, const std::string& label) {
    std::uint64_t key = seed ^ fnv1a(label);
    // burn a few outputs so nearby keys decorrelate
    state_ = key;
    for (int i = 0; i < 4; ++i) splitmix64(state_);
}

std::uint64_t RandomStream::next_u64() { return splitmix64(state_); }

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
}

int RandomStream::uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

DensityOperator random_state(int n, int d, int k, RandomStream& rng) {
    Operator probe(n, d);
    const int dim = probe.dim();
    if (k < 1 || k > dim)
        throw std::invalid_argument("random_state: rank k must be in [1, d^n]");
    std::vector<std::vector<cplx>> g(dim, std::vector<cplx>(k));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < k; ++j)
            g[i][j] = cplx(rng.gaussian(), rng.gaussian());
    Operator rho(n, d);
    double tr = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            cplx s = 0.0;
            for (int c = 0; c < k; ++c) s += g[i][c] * std::conj(g[j][c]);
            rho.at(i, j) = s;
            if (i == j) tr += s.real();
        }
    rho = rho.scaled(1.0 / tr);
    // enforce exact Hermitian symmetry against rounding
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const cplx m = 0.5 * (rho.at(i, j) + std::conj(rho.at(j, i)));
            rho.at(i, j) = m;
            rho.at(j, i) = std::conj(m);
        }
    return DensityOperator(std::move(rho), false);  // GG^dag is PSD by form
}

Operator haar_unitary(int d, RandomStream& rng) {
    Operator g(1, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g.at(i, j) = cplx(rng.gaussian(), rng.gaussian());
    // Gram-Schmidt on columns, then fix column phases by the R diagonal.
    Operator q = g;
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx proj = 0.0;
            for (int i = 0; i < d; ++i) proj += std::conj(q.at(i, k)) * q.at(i, j);
            for (int i = 0; i < d; ++i) q.at(i, j) -= proj * q.at(i, k);
        }
        double nrm = 0.0;
        for (int i = 0; i < d; ++i) nrm += std::norm(q.at(i, j));
        nrm = std::sqrt(nrm);
        for (int i = 0; i < d; ++i) q.at(i, j) /= nrm;
        // phase fix: make <g_j, q_j> real positive (Mezzadri convention)
        cplx r = 0.0;
        for (int i = 0; i < d; ++i) r += std::conj(q.at(i, j)) * g.at(i, j);
        const cplx ph = r / std::abs(r);
        for (int i = 0; i < d; ++i) q.at(i, j) *= ph;
    }
    return q;
}

Operator random_local_unitary(int n, int d, RandomStream& rng) {
    Operator u = haar_unitary(d, rng);
    for (int f = 1; f < n; ++f) u = kron(u, haar_unitary(d, rng));
    return u;
}

} // namespace qps
