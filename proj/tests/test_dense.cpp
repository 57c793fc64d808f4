#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpslab/eig.hpp"
#include "qpslab/matrix.hpp"
#include "qpslab/rng.hpp"

using namespace qps;

namespace {

Operator pauli_x2() {
    Operator x(1, 2);
    x.at(0, 1) = 1.0;
    x.at(1, 0) = 1.0;
    return x;
}

Operator pauli_z2() {
    Operator z(1, 2);
    z.at(0, 0) = 1.0;
    z.at(1, 1) = -1.0;
    return z;
}

Operator random_op(int n, int d, RandomStream& rng) {
    Operator a(n, d);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            a.at(i, j) = cplx(rng.gaussian(), rng.gaussian());
    return a;
}

Operator random_hermitian(int n, int d, RandomStream& rng) {
    Operator a = random_op(n, d, rng);
    return (a + a.adjoint()).scaled(0.5);
}

DensityOperator bell_state() {
    Operator b(2, 2);
    for (int i : {0, 3})
        for (int j : {0, 3})
            b.at(i, j) = 0.5;
    return DensityOperator(std::move(b));
}

} // namespace

TEST_CASE("kron: identities and elementwise oracle") {
    auto i2 = Operator::identity(1, 2);
    auto i4 = kron(i2, i2);
    CHECK(frob_dist(i4, Operator::identity(2, 2)) == 0.0);

    // Z (x) X against a four-nested-loop oracle
    auto zx = kron(pauli_z2(), pauli_x2());
    auto z = pauli_z2(), x = pauli_x2();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    CHECK(zx.at(2 * i + k, 2 * j + l) == z.at(i, j) * x.at(k, l));
}

TEST_CASE("kron mixed-product identity on random 3x3 pairs") {
    RandomStream rng(3, "dense-kron");
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_op(1, 3, rng), b = random_op(1, 3, rng);
        auto c = random_op(1, 3, rng), e = random_op(1, 3, rng);
        CHECK(frob_dist(kron(a, b) * kron(c, e), kron(a * c, b * e)) < 1e-10);
    }
}

TEST_CASE("trace multiplies under kron") {
    RandomStream rng(4, "dense-tr");
    auto a = random_op(1, 3, rng), b = random_op(1, 3, rng);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-10);
}

TEST_CASE("partial trace recovers marginals of product states") {
    RandomStream rng(5, "dense-pt");
    auto ra = random_state(1, 3, 2, rng);
    auto rb = random_state(1, 3, 3, rng);
    DensityOperator prod(kron(ra.op(), rb.op()), false);
    CHECK(frob_dist(partial_trace(prod, {0}).op(), ra.op()) < 1e-12);
    CHECK(frob_dist(partial_trace(prod, {1}).op(), rb.op()) < 1e-12);
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
    auto rho_a = partial_trace(bell_state(), {0});
    CHECK(frob_dist(rho_a.op(), Operator::identity(1, 2).scaled(0.5)) < 1e-12);
}

TEST_CASE("partial trace matches explicit index-contraction oracle") {
    RandomStream rng(6, "dense-pt-oracle");
    auto rho = random_state(2, 3, 1, rng);
    auto got = partial_trace(rho, {1}).op();
    Operator want(1, 3);
    for (int b1 = 0; b1 < 3; ++b1)
        for (int b2 = 0; b2 < 3; ++b2) {
            cplx s = 0.0;
            for (int a = 0; a < 3; ++a)
                s += rho.op().at(a * 3 + b1, a * 3 + b2);
            want.at(b1, b2) = s;
        }
    CHECK(frob_dist(got, want) < 1e-12);
    CHECK(std::abs(got.trace() - cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("partial transpose: involution and Bell spectrum") {
    RandomStream rng(7, "dense-ptr");
    auto rho = random_state(2, 2, 3, rng);
    auto twice = partial_transpose(partial_transpose(rho.op(), {1}), {1});
    CHECK(frob_dist(twice, rho.op()) < 1e-14);

    auto pt = partial_transpose(bell_state().op(), {1});
    auto spec = eig_hermitian(pt);
    REQUIRE(spec.eigenvalues.size() == 4);
    CHECK(spec.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(spec.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(spec.eigenvalues[2] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(spec.eigenvalues[3] == doctest::Approx(-0.5).epsilon(1e-10));
}

TEST_CASE("product state eigenvalues unchanged by partial transpose") {
    RandomStream rng(8, "dense-ptr2");
    auto ra = random_state(1, 2, 2, rng);
    auto rb = random_state(1, 2, 2, rng);
    auto prod = kron(ra.op(), rb.op());
    auto s1 = eig_hermitian(prod).eigenvalues;
    auto s2 = eig_hermitian(partial_transpose(prod, {1})).eigenvalues;
    for (std::size_t i = 0; i < s1.size(); ++i)
        CHECK(s1[i] == doctest::Approx(s2[i]).epsilon(1e-9));
}

TEST_CASE("eig_hermitian: diagonal and Pauli X") {
    Operator diag(1, 3);
    diag.at(0, 0) = 0.2;
    diag.at(1, 1) = 1.7;
    diag.at(2, 2) = -0.4;
    auto s = eig_hermitian(diag);
    CHECK(s.eigenvalues[0] == doctest::Approx(1.7));
    CHECK(s.eigenvalues[1] == doctest::Approx(0.2));
    CHECK(s.eigenvalues[2] == doctest::Approx(-0.4));

    auto sx = eig_hermitian(pauli_x2());
    CHECK(sx.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(sx.eigenvalues[1] == doctest::Approx(-1.0));
}

TEST_CASE("eig_hermitian: 81x81 reconstruction residual") {
    RandomStream rng(9, "dense-eig81");
    auto a = random_hermitian(4, 3, rng);  // 81 x 81
    auto s = eig_hermitian(a);
    // A = V L V^dag
    Operator recon(4, 3);
    const int n = a.dim();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const cplx vik = s.eigenvectors.at(i, k);
            for (int j = 0; j < n; ++j)
                recon.at(i, j) += s.eigenvalues[k] * vik * std::conj(s.eigenvectors.at(j, k));
        }
    CHECK(frob_dist(recon, a) <= 1e-9 * a.frob_norm());
    // unitarity of V
    CHECK(frob_dist(s.eigenvectors * s.eigenvectors.adjoint(),
                    Operator::identity(4, 3)) < 1e-9);
    // trace preserved
    double lsum = 0.0;
    for (double l : s.eigenvalues) lsum += l;
    CHECK(lsum == doctest::Approx(a.trace().real()).epsilon(1e-9));
}

TEST_CASE("spectra are invariant under unitary conjugation") {
    RandomStream rng(10, "dense-eig-inv");
    auto a = random_hermitian(2, 2, rng);
    auto u = random_local_unitary(2, 2, rng);
    auto b = u * a * u.adjoint();
    auto sa = eig_hermitian(a).eigenvalues;
    auto sb = eig_hermitian(b).eigenvalues;
    for (std::size_t i = 0; i < sa.size(); ++i)
        CHECK(sa[i] == doctest::Approx(sb[i]).epsilon(1e-9));
    CHECK(trace_norm(a) == doctest::Approx(trace_norm(b)).epsilon(1e-9));
    CHECK(rank_eps(a) == rank_eps(b));
}

TEST_CASE("matrix functions: power, trace norm, rank") {
    RandomStream rng(11, "dense-fn");
    auto rho = random_state(1, 3, 2, rng);
    CHECK(frob_dist(matrix_power(rho.op(), 1.0), rho.op()) < 1e-9);
    CHECK(trace_norm(rho.op()) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rank_eps(rho.op()) == 2);

    auto pure = random_state(1, 3, 1, rng);
    CHECK(rank_eps(pure.op()) == 1);
    // sqrt squared gives back the operator
    auto root = matrix_power(rho.op(), 0.5);
    CHECK(frob_dist(root * root, rho.op()) < 1e-9);
}

TEST_CASE("random_state: purity and determinism") {
    RandomStream rng1(42, "state");
    RandomStream rng2(42, "state");
    auto a = random_state(2, 2, 1, rng1);
    auto b = random_state(2, 2, 1, rng2);
    CHECK(a.purity() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(frob_dist(a.op(), b.op()) == 0.0);  // bit-for-bit

    RandomStream rng3(43, "state");
    auto c = random_state(2, 2, 4, rng3);
    CHECK(rank_eps(c.op()) == 4);
}

TEST_CASE("empirical mean of random pure qubit states approaches I/2") {
    RandomStream rng(12, "dense-mc");
    Operator acc(1, 2);
    const int trials = 10000;
    for (int i = 0; i < trials; ++i)
        acc.add_scaled(random_state(1, 2, 1, rng).op(), 1.0 / trials);
    auto diff = acc - Operator::identity(1, 2).scaled(0.5);
    CHECK(trace_norm(diff) < 0.02);
}

TEST_CASE("haar unitaries are unitary") {
    RandomStream rng(13, "dense-haar");
    for (int d : {2, 3, 7}) {
        auto u = haar_unitary(d, rng);
        CHECK(frob_dist(u * u.adjoint(), Operator::identity(1, d)) < 1e-12);
    }
    auto ul = random_local_unitary(2, 3, rng);
    CHECK(frob_dist(ul * ul.adjoint(), Operator::identity(2, 3)) < 1e-12);
}

TEST_CASE("density operator validation rejects bad inputs") {
    Operator nh(1, 2);
    nh.at(0, 0) = 1.0;
    nh.at(0, 1) = cplx(0.0, 0.5);  // not Hermitian
    CHECK_THROWS(DensityOperator{nh});

    Operator tr2 = Operator::identity(1, 2);  // trace 2
    CHECK_THROWS(DensityOperator{tr2});

    Operator neg(1, 2);
    neg.at(0, 0) = 1.5;
    neg.at(1, 1) = -0.5;  // negative eigenvalue
    CHECK_THROWS(DensityOperator{neg});
}

TEST_CASE("embed places operators on designated factors") {
    auto x = pauli_x2();
    auto e = embed(x, {1}, 3, 2);
    auto want = kron(kron(Operator::identity(1, 2), x), Operator::identity(1, 2));
    CHECK(frob_dist(e, want) == 0.0);
    CHECK_THROWS(embed(x, {3}, 3, 2));
}
