#include <doctest.h>

#include <cmath>
#include <limits>

#include "generators.hpp"
#include "moyal/errors.hpp"
#include "moyal/operator.hpp"

using namespace moyal;

namespace {

double dist(const Operator& a, const Operator& b) { return (a.matrix() - b.matrix()).norm(); }

}  // namespace

TEST_SUITE("operator") {

TEST_CASE("annihilator entries") {
    const Operator b2 = annihilator(FockSpace(2));
    CHECK(b2(0, 1) == Complex(1.0, 0.0));
    CHECK(b2(0, 0) == Complex(0.0, 0.0));
    CHECK(b2(1, 0) == Complex(0.0, 0.0));
    CHECK(b2(1, 1) == Complex(0.0, 0.0));

    const Operator b4 = annihilator(FockSpace(4));
    CHECK(b4(2, 3).real() == doctest::Approx(1.7320508075688772).epsilon(1e-15));
    for (std::size_t n = 2; n <= 9; ++n) {
        Vector e0 = Vector::Zero(static_cast<Eigen::Index>(n));
        e0(0) = 1.0;
        CHECK(annihilator(FockSpace(n)).apply(e0).norm() == 0.0);
    }
    CHECK_THROWS_AS(FockSpace(1), InvalidParameter);
}

TEST_CASE("adjoint") {
    const Operator bd = adjoint(annihilator(FockSpace(2)));
    CHECK(bd(1, 0) == Complex(1.0, 0.0));
    CHECK(bd(0, 1) == Complex(0.0, 0.0));
    const Operator iI = kI * Operator::identity(3);
    CHECK(dist(adjoint(iI), -iI) == 0.0);

    testgen::Gen g(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + g.index(8);
        const Operator a = g.op(n), b = g.op(n);
        CHECK(dist(adjoint(adjoint(a)), a) == 0.0);
        CHECK(dist(adjoint(a * b), adjoint(b) * adjoint(a)) <= 1e-12 * (a.norm() * b.norm()));
    }
}

TEST_CASE("commutator and truncation law") {
    testgen::Gen g(12);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + g.index(10);
        const Operator a = g.op(n), b = g.op(n);
        CHECK(commutator(a, a).norm() <= 1e-14 * a.norm() * a.norm());
        CHECK(std::abs(commutator(a, b).trace()) <= 1e-12 * a.norm() * b.norm());
    }
    for (std::size_t n : {2u, 4u, 7u, 16u}) {
        const Operator b = annihilator(FockSpace(n));
        const Operator c = commutator(b, adjoint(b));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                const double want = k != l ? 0.0 : (k + 1 < n ? 1.0 : -static_cast<double>(n - 1));
                CHECK(std::abs(c(k, l) - want) <= 1e-14);
            }
        CHECK(std::abs(c.trace()) <= 1e-13);
    }
    const Operator c4 = commutator(annihilator(FockSpace(4)), adjoint(annihilator(FockSpace(4))));
    CHECK(c4(3, 3).real() == doctest::Approx(-3.0));
    CHECK_THROWS_AS(commutator(Operator::identity(2), Operator::identity(3)), DimensionMismatch);
}

TEST_CASE("tensor") {
    CHECK(dist(tensor(Operator::identity(2), Operator::identity(2)), Operator::identity(4)) == 0.0);
    testgen::Gen g(13);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t na = 2 + g.index(4), nb = 2 + g.index(4);
        const Operator a = g.op(na), b = g.op(nb);
        const Operator ia = Operator::identity(na), ib = Operator::identity(nb);
        CHECK(dist(tensor(a, ib) * tensor(ia, b), tensor(a, b)) <= 1e-12 * a.norm() * b.norm());
        CHECK(dist(adjoint(tensor(a, b)), tensor(adjoint(a), adjoint(b))) == 0.0);
        // (m, n) -> m * nb + n
        const std::size_t m = g.index(na), n = g.index(nb), mp = g.index(na), np = g.index(nb);
        CHECK(std::abs(tensor(a, b)(m * nb + n, mp * nb + np) - a(m, mp) * b(n, np)) <= 1e-14 * a.norm() * b.norm());
    }
    const Operator b = annihilator(FockSpace(5));
    const Operator one = Operator::identity(5);
    CHECK(commutator(tensor(b, one), tensor(one, b)).norm() == 0.0);
}

TEST_CASE("expm") {
    CHECK(dist(expm(Operator::zero(5)), Operator::identity(5)) <= 1e-15);
    CHECK(dist(expm((kI * M_PI) * Operator::identity(6)), -Operator::identity(6)) <= 1e-14);

    testgen::Gen g(14);
    for (std::size_t n : {2u, 5u, 16u, 64u}) {
        const Operator a = g.anti_hermitian(n);
        const Operator u = expm(a);
        CHECK(dist(u * expm(-a), Operator::identity(n)) <= 1e-12);
        const Vector v = g.vector(n);
        CHECK(std::abs(u.apply(v).norm() - v.norm()) <= 1e-12 * v.norm());
    }
    // non-normal path
    Matrix nil = Matrix::Zero(3, 3);
    nil(0, 1) = 1.0;
    nil(1, 2) = 1.0;
    const Operator e = expm(Operator(nil));
    CHECK(std::abs(e(0, 2) - 0.5) <= 1e-14);
    CHECK(std::abs(e(0, 1) - 1.0) <= 1e-14);
    const Operator a = g.op(6);
    CHECK(dist(expm(a) * expm(-a), Operator::identity(6)) <= 1e-10);

    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Operator{bad}, NonFiniteInput);
}

TEST_CASE("expm_apply matches expm") {
    testgen::Gen g(15);
    const Operator b = annihilator(FockSpace(6));
    const Operator gen = tensor(adjoint(b), b) - tensor(b, adjoint(b));
    for (double phi : {-0.7, 0.3, 1.1}) {
        const Vector v = g.vector(36);
        CHECK((expm_apply(phi * gen, v) - expm(phi * gen).apply(v)).norm() <= 1e-12 * v.norm());
    }
}

TEST_CASE("hermitian_eig") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const EigenSystem es = hermitian_eig(Operator(d));
    REQUIRE(es.size() == 3);
    CHECK(es.values[0] == doctest::Approx(1.0));
    CHECK(es.values[1] == doctest::Approx(2.0));
    CHECK(es.values[2] == doctest::Approx(3.0));

    testgen::Gen g(16);
    for (std::size_t n : {4u, 17u, 40u}) {
        const Operator h = g.hermitian(n);
        const EigenSystem s = hermitian_eig(h);
        for (std::size_t k = 0; k + 1 < s.size(); ++k) CHECK(s.values[k] <= s.values[k + 1]);
        double worst = 0.0;
        for (std::size_t k = 0; k < s.size(); ++k)
            worst = std::max(worst, (h.apply(s.vector(k)) - s.values[k] * s.vector(k)).cwiseAbs().maxCoeff());
        CHECK(worst <= 1e-10 * h.norm());
        const Matrix& v = s.vectors;
        CHECK((v.adjoint() * v - Matrix::Identity(v.cols(), v.cols())).norm() <= 1e-12 * static_cast<double>(n));

        const Operator u = g.unitary(n);
        const EigenSystem t = hermitian_eig(u * h * adjoint(u));
        for (std::size_t k = 0; k < s.size(); ++k) CHECK(std::abs(t.values[k] - s.values[k]) <= 1e-10 * h.norm());
    }
    CHECK_THROWS_AS(hermitian_eig(g.op(4)), NotHermitian);
}

TEST_CASE("hermitian_eig is deterministic with fixed phases") {
    testgen::Gen g(17);
    const Operator h = g.hermitian(12);
    const EigenSystem a = hermitian_eig(h), b = hermitian_eig(h);
    CHECK(a.values == b.values);
    CHECK((a.vectors - b.vectors).norm() == 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Vector v = a.vector(k);
        Eigen::Index first = 0;
        while (std::abs(v(first)) <= 1e-12) ++first;
        CHECK(v(first).imag() == 0.0);
        CHECK(v(first).real() > 0.0);
    }
}

TEST_CASE("invariant blocks") {
    Matrix m = Matrix::Zero(5, 5);
    m(0, 3) = m(3, 0) = 1.0;
    m(1, 4) = m(4, 1) = 2.0;
    const auto blocks = invariant_blocks(m);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::vector<Eigen::Index>{0, 3});
    CHECK(blocks[1] == std::vector<Eigen::Index>{1, 4});
    CHECK(blocks[2] == std::vector<Eigen::Index>{2});
}

}  // TEST_SUITE
