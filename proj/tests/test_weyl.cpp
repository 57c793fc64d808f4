#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpslab/eig.hpp"
#include "qpslab/rng.hpp"
#include "qpslab/weyl.hpp"

using namespace qps;

namespace {

Operator pauli(int which) {  // 0=I 1=X 2=Y 3=Z, d=2
    Operator m(1, 2);
    switch (which) {
        case 0: m.at(0, 0) = 1; m.at(1, 1) = 1; break;
        case 1: m.at(0, 1) = 1; m.at(1, 0) = 1; break;
        case 2: m.at(0, 1) = cplx(0, -1); m.at(1, 0) = cplx(0, 1); break;
        case 3: m.at(0, 0) = 1; m.at(1, 1) = -1; break;
    }
    return m;
}

DensityOperator zx_qubit_state() {
    // rho = (I + (Z + X)/sqrt(2)) / 2
    const double r = 1.0 / std::sqrt(2.0);
    auto op = (pauli(0) + (pauli(3) + pauli(1)).scaled(r)).scaled(0.5);
    return DensityOperator(std::move(op));
}

} // namespace

TEST_CASE("qubit Weyl operators are I, Z, X, Y") {
    CHECK(frob_dist(weyl_matrix(PhasePoint(2, {0}, {0})), pauli(0)) < 1e-15);
    CHECK(frob_dist(weyl_matrix(PhasePoint(2, {1}, {0})), pauli(3)) < 1e-15);
    CHECK(frob_dist(weyl_matrix(PhasePoint(2, {0}, {1})), pauli(1)) < 1e-15);
    CHECK(frob_dist(weyl_matrix(PhasePoint(2, {1}, {1})), pauli(2)) < 1e-15);
    // w(1,1) is Hermitian thanks to the i^{-pq} phase
    CHECK(weyl_matrix(PhasePoint(2, {1}, {1})).herm_defect() < 1e-15);
}

TEST_CASE("qutrit w(1,1) matches direct synthesis") {
    // w(1,1) = omega^{-2^{-1}} Z X with 2^{-1} = 2 mod 3
    Operator z(1, 3), x(1, 3);
    const cplx w3 = std::polar(1.0, 2.0 * M_PI / 3.0);
    for (int k = 0; k < 3; ++k) {
        z.at(k, k) = std::pow(w3, k);
        x.at((k + 1) % 3, k) = 1.0;
    }
    auto want = (z * x).scaled(std::pow(w3, -2.0 + 3.0));  // omega^{-2} = omega^{1}
    CHECK(frob_dist(weyl_matrix(PhasePoint(3, {1}, {1})), want) < 1e-14);
}

TEST_CASE("Weyl operators are unitary") {
    RandomStream rng(1, "weyl-unit");
    for (int d : {2, 3, 7}) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> p{rng.uniform_int(0, d - 1)}, q{rng.uniform_int(0, d - 1)};
            auto w = weyl_matrix(PhasePoint(d, p, q));
            CHECK(frob_dist(w * w.adjoint(), Operator::identity(1, d)) < 1e-13);
        }
    }
}

TEST_CASE("Weyl orthonormality (exhaustive small, random d=7)") {
    for (int d : {2, 3}) {
        for (int n = 1; n <= 2; ++n) {
            std::size_t npts = 1;
            for (int j = 0; j < 2 * n; ++j) npts *= d;
            double dim = std::pow(d, n);
            for (std::size_t xi = 0; xi < npts; ++xi)
                for (std::size_t yi = 0; yi < npts; ++yi) {
                    auto wx = weyl_matrix(PhasePoint::from_index(d, n, xi));
                    auto wy = weyl_matrix(PhasePoint::from_index(d, n, yi));
                    const cplx ip = trace_product(wx.adjoint(), wy) / dim;
                    const double want = (xi == yi) ? 1.0 : 0.0;
                    CHECK(std::abs(ip - cplx(want, 0.0)) < 1e-12);
                }
        }
    }
    RandomStream rng(2, "weyl-orth7");
    for (int trial = 0; trial < 20; ++trial) {
        auto x = PhasePoint::from_index(7, 1, rng.uniform_int(0, 48));
        auto y = PhasePoint::from_index(7, 1, rng.uniform_int(0, 48));
        const cplx ip = trace_product(weyl_matrix(x).adjoint(), weyl_matrix(y)) / 7.0;
        const double want = (x == y) ? 1.0 : 0.0;
        CHECK(std::abs(ip - cplx(want, 0.0)) < 1e-12);
    }
}

TEST_CASE("char function of the maximally mixed state") {
    for (int d : {2, 3}) {
        DensityOperator mm(Operator::identity(2, d).scaled(1.0 / (d * d)), false);
        auto t = char_function(mm);
        CHECK(std::abs(t.values[0] - cplx(1.0, 0.0)) < 1e-14);
        for (std::size_t i = 1; i < t.size(); ++i)
            CHECK(std::abs(t.values[i]) < 1e-14);
        CHECK(pauli_rank(t) == 1);
    }
}

TEST_CASE("char function of |0><0| at d=3") {
    Operator proj(1, 3);
    proj.at(0, 0) = 1.0;
    auto t = char_function(DensityOperator(std::move(proj), false));
    // Xi(p, 0) = 1 for all p, zero otherwise
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            const cplx v = t.at(PhasePoint(3, {p}, {q}));
            if (q == 0)
                CHECK(std::abs(v - cplx(1.0, 0.0)) < 1e-12);
            else
                CHECK(std::abs(v) < 1e-12);
        }
    CHECK(pauli_rank(t) == 3);
}

TEST_CASE("char function of the (Z+X)/sqrt2 qubit state: four-trace oracle") {
    auto rho = zx_qubit_state();
    auto t = char_function(rho);
    // independent oracle: explicit traces against dense Weyl matrices
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            const cplx want =
                trace_product(rho.op(), weyl_matrix(PhasePoint(2, {p}, {q})).adjoint());
            CHECK(std::abs(t.at(PhasePoint(2, {p}, {q})) - want) < 1e-13);
        }
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(t.at(PhasePoint(2, {1}, {0})) - cplx(r, 0)) < 1e-12);
    CHECK(std::abs(t.at(PhasePoint(2, {0}, {1})) - cplx(r, 0)) < 1e-12);
    CHECK(std::abs(t.at(PhasePoint(2, {1}, {1}))) < 1e-12);
    CHECK(pauli_rank(t) == 3);
}

TEST_CASE("char table against dense-trace oracle on random states") {
    RandomStream rng(3, "weyl-oracle");
    for (int d : {2, 3}) {
        auto rho = random_state(2, d, 2, rng);
        auto t = char_function(rho);
        for (std::size_t xi = 0; xi < t.size(); ++xi) {
            auto x = PhasePoint::from_index(d, 2, xi);
            const cplx want = trace_product(rho.op(), weyl_matrix(x).adjoint());
            CHECK(std::abs(t.values[xi] - want) < 1e-12);
        }
    }
}

TEST_CASE("inverse_char round trips") {
    // delta_0 table -> I / d^n
    CharTable t;
    t.n = 2;
    t.d = 3;
    t.values.assign(81, cplx(0, 0));
    t.values[0] = 1.0;
    CHECK(frob_dist(inverse_char(t), Operator::identity(2, 3).scaled(1.0 / 9.0)) < 1e-14);

    RandomStream rng(4, "weyl-roundtrip");
    auto rho = random_state(2, 3, 4, rng);
    CHECK(frob_dist(inverse_char(char_function(rho)), rho.op()) < 1e-10);

    // |0><0| at d=3 reconstructs exactly
    Operator proj(1, 3);
    proj.at(0, 0) = 1.0;
    auto tz = char_function_op(proj);
    CHECK(frob_dist(inverse_char(tz), proj) < 1e-13);
}

TEST_CASE("Parseval and modulus bound on random states") {
    RandomStream rng(5, "weyl-parseval");
    for (int d : {2, 3, 7}) {
        const int n = (d == 7) ? 1 : 2;
        auto rho = random_state(n, d, rng.uniform_int(1, 3), rng);
        auto t = char_function(rho);
        double s = 0.0;
        double dim = std::pow(d, n);
        for (const auto& v : t.values) {
            CHECK(std::abs(v) <= 1.0 + 1e-10);
            s += std::norm(v);
        }
        CHECK(s / dim == doctest::Approx(rho.purity()).epsilon(1e-9));
    }
}

TEST_CASE("Weyl covariance preserves characteristic moduli") {
    RandomStream rng(6, "weyl-cov");
    auto rho = random_state(2, 3, 2, rng);
    auto t = char_function(rho);
    PhasePoint y(3, {1, 2}, {0, 1});
    auto conj = conj_by_weyl(rho.op(), y);
    // cross-check the O(dim^2) conjugation against dense products
    auto wy = weyl_matrix(y);
    CHECK(frob_dist(conj, wy * rho.op() * wy.adjoint()) < 1e-12);
    auto t2 = char_function_op(conj);
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(std::abs(t.values[i]) == doctest::Approx(std::abs(t2.values[i])).epsilon(1e-10));
}

TEST_CASE("pauli rank saturates the rank uncertainty bound on stabilizer examples") {
    // |0><0| single qudit: S_max = 0, chi_P = d, so log chi_P = n log d
    for (int d : {2, 3}) {
        Operator proj(1, d);
        proj.at(0, 0) = 1.0;
        DensityOperator rho(std::move(proj), false);
        CHECK(pauli_rank(rho) == d);
        CHECK(rank_eps(rho.op()) == 1);
    }
    // the (Z+X)/sqrt2 state: chi_P = 3 > 2, strict
    CHECK(pauli_rank(zx_qubit_state()) == 3);
}
