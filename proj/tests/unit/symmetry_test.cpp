#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "moyal/blocks.hpp"
#include "moyal/bogoliubov.hpp"
#include "moyal/symmetry.hpp"

using namespace moyal;

namespace {

HSSpace space_of(double theta, std::size_t n) { return HSSpace(ModelConfig(theta, n)); }

const OscParams kUnit(1.0, 1.0);

// Least-squares coefficient of d along j on the block.
double coefficient_along(const BasisBlock& b, const Operator& d, const Operator& j) {
    const Matrix dd = b.restrict(d.matrix());
    const Matrix jj = b.restrict(j.matrix());
    return (jj.adjoint() * dd).trace().real() / jj.squaredNorm();
}

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("time reversal on states") {
    const HSSpace s = space_of(1.0, 6);
    const HSState t = theta_apply(s, HSState::dyad(s, 1, 4));
    CHECK((t.amplitudes() - HSState::dyad(s, 4, 1).amplitudes()).norm() == 0.0);
    const HSState i01(s, kI * HSState::dyad(s, 0, 1).amplitudes());
    CHECK((theta_apply(s, i01).amplitudes() + kI * HSState::dyad(s, 1, 0).amplitudes()).norm() == 0.0);

    testgen::Gen g(61);
    for (int trial = 0; trial < 10; ++trial) {
        const HSState a = g.state(s), b = g.state(s);
        const Complex z = g.complex();
        CHECK((theta_apply(s, theta_apply(s, a)).amplitudes() - a.amplitudes()).norm() == 0.0);
        CHECK(theta_apply(s, a).norm() == doctest::Approx(a.norm()).epsilon(1e-15));
        const Complex lhs = hs_inner(theta_apply(s, a), theta_apply(s, b));
        CHECK(std::abs(lhs - std::conj(hs_inner(a, b))) <= 1e-12 * a.norm() * b.norm());
        const HSState za(s, z * a.amplitudes());
        CHECK((theta_apply(s, za).amplitudes() - std::conj(z) * theta_apply(s, a).amplitudes()).norm() <=
              1e-13 * std::abs(z) * a.norm());
    }
}

TEST_CASE("time reversal on operators") {
    const HSSpace s = space_of(1.0, 6);
    const Operator sw = swap_permutation(6);
    CHECK((sw * sw).matrix().isIdentity(0.0));
    testgen::Gen g(62);
    for (int trial = 0; trial < 10; ++trial) {
        const Operator o = g.op(s.dim());
        const HSState psi = g.state(s);
        const Vector lhs = theta_conjugate(o).apply(theta_apply(s, psi).amplitudes());
        const Vector rhs = theta_apply(s, HSState(s, o.apply(psi.amplitudes()))).amplitudes();
        CHECK((lhs - rhs).norm() <= 1e-12 * o.norm() * psi.norm());
        CHECK((theta_conjugate(theta_conjugate(o)).matrix() - o.matrix()).norm() == 0.0);
    }
    const RepOperators rep = build_rep(s);
    CHECK((theta_conjugate(rep.B_L).matrix() - rep.B_Rdag.matrix()).norm() == 0.0);
    const BasisBlock safe = BasisBlock::safe(6);
    CHECK(safe.distance(theta_conjugate(rep.X1c), rep.X1c) <= 1e-12 * rep.X1c.norm());
    CHECK(safe.distance(theta_conjugate(rep.P2), -rep.P2) <= 1e-12 * rep.P2.norm());
}

TEST_CASE("time-reversal rules and the Zeeman difference") {
    const HSSpace s = space_of(1.0, 12);
    const RepOperators rep = build_rep(s);
    const SU2Generators g = schwinger_noncommutative(s, rep);
    const SymmetryReport r = time_reversal_suite(s, rep, g, kUnit, Model::h3);
    const double tol = 1e-12 * std::max(1.0, r.hamiltonian_norm);
    CHECK(r.time_reversal.size() == 15);
    for (const auto& [name, residual] : r.time_reversal) {
        INFO(name);
        CHECK(residual <= tol);
    }
    CHECK(r.zeeman_difference_residual <= tol);
    CHECK(r.theta_breaking > 0.1);
    CHECK(r.su2_residuals[2] <= tol);
    CHECK(r.su2_residuals[0] > 0.01 * r.hamiltonian_norm);
    CHECK(r.su2_residuals[1] > 0.01 * r.hamiltonian_norm);
    // removing the Zeeman term restores both symmetries
    for (double v : r.su2_without_zeeman) CHECK(v <= 1e-10 * r.hamiltonian_norm);
    CHECK(r.theta_without_zeeman <= tol);

    const auto j = r.to_json();
    CHECK(j["model"] == "h3");
    CHECK(j["su2_residuals"].size() == 3);
    CHECK(j["time_reversal"].size() == 15);
    CHECK(j.contains("zeeman_difference_residual"));
}

TEST_CASE("SU(2) commutants by model") {
    const HSSpace s = space_of(1.0, 12);
    const RepOperators rep = build_rep(s);
    const SU2Generators g = schwinger_noncommutative(s, rep);
    const SymmetryReport a = time_reversal_suite(s, rep, g, kUnit, Model::h1);
    for (double v : a.su2_residuals) CHECK(v <= 1e-12 * a.hamiltonian_norm);
    CHECK(a.frame_phi == 0.0);

    // away from the critical point only the rotated-frame generators commute with H2
    const SymmetryReport b = time_reversal_suite(s, rep, g, OscParams(0.7, 1.6), Model::h2);
    for (double v : b.su2_frame_residuals) CHECK(v <= 1e-10 * b.hamiltonian_norm);
    CHECK(b.su2_residuals[2] <= 1e-12 * b.hamiltonian_norm);
    CHECK(b.su2_residuals[0] > 0.01 * b.hamiltonian_norm);

    const SymmetryReport c = time_reversal_suite(s, rep, g, critical_point(1.0), Model::h2);
    CHECK(c.frame_phi == 0.0);
    for (double v : c.su2_residuals) CHECK(v <= 1e-12 * c.hamiltonian_norm);
}

TEST_CASE("Zeeman coefficient vanishes linearly with theta") {
    const OscParams p(1.3, 0.8);
    std::vector<double> coeffs;
    for (double theta : {0.5, 0.25, 0.125}) {
        const HSSpace s = space_of(theta, 10);
        const SU2Generators g = schwinger_noncommutative(s);
        const Operator h = h3(s, p);
        const BasisBlock safe = BasisBlock::safe(10);
        const double c = coefficient_along(safe, theta_conjugate(h) - h, g.J3);
        CHECK(c == doctest::Approx(-2.0 * p.mu * theta * p.omega * p.omega).epsilon(1e-12));
        coeffs.push_back(c / theta);
    }
    CHECK(coeffs[0] == doctest::Approx(coeffs[1]).epsilon(1e-12));
    CHECK(coeffs[1] == doctest::Approx(coeffs[2]).epsilon(1e-12));
}

}  // TEST_SUITE
