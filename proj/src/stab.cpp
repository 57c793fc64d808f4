#include "qpslab/stab.hpp"

#include "qpslab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qps {

namespace {

std::size_t phase_space_size(int n, int d) {
    std::size_t s = 1;
    for (int j = 0; j < 2 * n; ++j) s *= d;
    return s;
}

void symmetrize(Operator& a) {
    for (int i = 0; i < a.dim(); ++i) {
        a.at(i, i) = a.at(i, i).real();
        for (int j = i + 1; j < a.dim(); ++j) {
            const cplx m = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = m;
            a.at(j, i) = std::conj(m);
        }
    }
}

} // namespace

StabilizerGroup stabilizer_group(const CharTable& table) {
    const int n = table.n, d = table.d;
    std::vector<PhasePoint> support;
    for (std::size_t xi = 0; xi < table.size(); ++xi)
        if (std::abs(table.values[xi]) >= 1.0 - kEpsGroup)
            support.push_back(PhasePoint::from_index(d, n, xi));
    // the origin always qualifies (Xi(0) = 1)
    PhaseSubgroup sub = subgroup_from_points(support);
    if (!sub.is_isotropic())
        throw std::runtime_error(
            "stabilizer_group: support not isotropic; input numerically corrupt");
    StabilizerGroup g{sub, {}};
    for (const auto& b : sub.basis()) {
        const cplx ph = table.at(b);
        if (std::abs(std::abs(ph) - 1.0) > kEpsGroup)
            throw std::runtime_error("stabilizer_group: basis phase drifted off modulus 1");
        g.phases.push_back(ph / std::abs(ph));
    }
    return g;
}

StabilizerGroup stabilizer_group(const DensityOperator& rho) {
    return stabilizer_group(char_function(rho));
}

MeanState mean_state_threshold(const DensityOperator& rho) {
    auto table = char_function(rho);
    auto group = stabilizer_group(table);
    CharTable kept;
    kept.n = table.n;
    kept.d = table.d;
    kept.values.assign(table.size(), cplx(0, 0));
    for (std::size_t xi = 0; xi < table.size(); ++xi)
        if (std::abs(table.values[xi]) >= 1.0 - kEpsGroup)
            kept.values[xi] = table.values[xi];
    Operator m = inverse_char(kept);
    symmetrize(m);
    return MeanState{DensityOperator(std::move(m)), std::move(group)};
}

MeanState mean_state_twirl(const DensityOperator& rho) {
    const int n = rho.n(), d = rho.d();
    if (phase_space_size(n, d) > kTwirlCap)
        throw std::invalid_argument("mean_state_twirl: d^{2n} exceeds enumeration cap");
    auto group = stabilizer_group(rho);
    auto comp = symplectic_complement(group.support);
    auto points = comp.enumerate();
    std::sort(points.begin(), points.end());  // fixed summation order
    Operator acc(n, d);
    const double wgt = 1.0 / static_cast<double>(points.size());
    for (const auto& y : points)
        acc.add_scaled(conj_by_weyl(rho.op(), y), wgt);
    symmetrize(acc);
    return MeanState{DensityOperator(std::move(acc)), std::move(group)};
}

DensityOperator stabilizer_state_from_generators(
    const std::vector<std::pair<PhasePoint, int>>& gens, int n, int d) {
    PrimeModulus m(d);
    Operator probe(n, d);
    const int r = static_cast<int>(gens.size());
    if (r > n)
        throw std::invalid_argument("stabilizer_state_from_generators: more than n generators");

    if (r > 0) {
        std::vector<PhasePoint> pts;
        for (const auto& [x, c] : gens) {
            (void)c;
            if (x.d != d || x.n() != n)
                throw std::invalid_argument("generator (n, d) mismatch");
            pts.push_back(x);
        }
        for (const auto& a : pts)
            for (const auto& b : pts)
                if (symplectic_form(a, b) != 0)
                    throw std::invalid_argument("generators do not commute");
        if (subgroup_from_points(pts).rank() != r)
            throw std::invalid_argument("generators are not independent");
    }

    Operator prod = Operator::identity(n, d);
    for (const auto& [x, c] : gens) {
        cplx phase;
        if (d == 2) {
            if (c != 0 && c != 1)
                throw std::invalid_argument("d = 2 phase tag must be 0 (+1) or 1 (-1)");
            phase = (c == 0) ? 1.0 : -1.0;
        } else {
            phase = std::polar(1.0, 2.0 * M_PI * m.reduce(c) / d);
        }
        const Operator g = weyl_matrix(x).scaled(phase);
        // E = (1/d) sum_k g^k
        Operator avg = Operator::identity(n, d);
        Operator pw = Operator::identity(n, d);
        for (int k = 1; k < d; ++k) {
            pw = pw * g;
            avg = avg + pw;
        }
        prod = prod * avg.scaled(1.0 / d);
    }
    double norm = 1.0;
    for (int j = 0; j < n - r; ++j) norm *= d;
    Operator rho = prod.scaled(1.0 / norm);
    if (rho.herm_defect() > 1e-8)
        throw std::invalid_argument("generator phases do not produce a Hermitian product");
    symmetrize(rho);
    return DensityOperator(std::move(rho));  // PSD check rejects invalid phases
}

bool is_stabilizer(const DensityOperator& rho) {
    const auto m = mean_state_threshold(rho);
    return frob_dist(rho.op(), m.state.op()) <= kTolStabilizer;
}

DensityOperator random_stabilizer_state(int n, int d, int r, RandomStream& rng) {
    if (r < 0 || r > n)
        throw std::invalid_argument("random_stabilizer_state: need 0 <= r <= n");
    std::vector<PhasePoint> chosen;
    std::vector<std::pair<PhasePoint, int>> gens;
    int guard = 0;
    while (static_cast<int>(chosen.size()) < r) {
        if (++guard > 10000)
            throw std::runtime_error("random_stabilizer_state: sampling stalled");
        std::vector<int> p(n), q(n);
        for (int& v : p) v = rng.uniform_int(0, d - 1);
        for (int& v : q) v = rng.uniform_int(0, d - 1);
        PhasePoint x(d, p, q);
        if (x.is_zero()) continue;
        bool commutes = true;
        for (const auto& c : chosen)
            if (symplectic_form(c, x) != 0) { commutes = false; break; }
        if (!commutes) continue;
        auto trial = chosen;
        trial.push_back(x);
        if (subgroup_from_points(trial).rank() != static_cast<int>(trial.size()))
            continue;
        chosen.push_back(x);
        gens.emplace_back(x, rng.uniform_int(0, d - 1));
    }
    return stabilizer_state_from_generators(gens, n, d);
}

} // namespace qps
