#pragma once

// Schwinger SU(2) generators: two commuting oscillators, the Hilbert-Schmidt
// (left/right) realization, and the fixed 4x4 action on phase space.

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "moyal/blocks.hpp"
#include "moyal/hilbert_schmidt.hpp"
#include "moyal/operator.hpp"

namespace moyal {

enum class GeneratorContext { commutative, noncommutative, phase4d };

struct SU2Generators {
    Operator J1, J2, J3;
    GeneratorContext context;
    std::size_t levels;  // per-mode truncation; 0 for phase4d
    std::size_t reach = 1;  // largest step a generator moves a single mode

    const Operator& operator[](int k) const;
    Operator raising() const;   // J1 + i J2
    Operator lowering() const;  // J1 - i J2
    /// Block on which the truncated su(2) relations are exact.
    BasisBlock safe_block() const;
};

/// a1 = b (x) 1, a2 = 1 (x) b on H_c (x) H_c.
SU2Generators schwinger_commutative(std::size_t levels);

/// B_L takes the role of a1 and B_R that of a2^dagger.
SU2Generators schwinger_noncommutative(const HSSpace& space, const RepOperators& rep);
SU2Generators schwinger_noncommutative(const HSSpace& space);

/// The same construction from the Bogoliubov-rotated ladders
/// B_L' = cosh phi B_L + sinh phi B_R, B_R' = sinh phi B_L + cosh phi B_R.
/// J3' equals J3 identically. J1', J2' contain B_L^2 and B_R^2, so reach = 2.
SU2Generators schwinger_primed(const HSSpace& space, double phi);

/// J1^2 + J2^2 + J3^2.
Operator casimir(const SU2Generators& g);

/// (1/4)(N_L + N_R)(N_L + N_R + 2) with N_L = B_L^dag B_L, N_R = B_R B_R^dag.
Operator casimir_closed_form(const RepOperators& rep);

/// Basis label |m, n) = |j, j3) with j = (m+n)/2, j3 = (m-n)/2.
struct JLabel {
    std::size_t m, n;

    int two_j() const noexcept { return static_cast<int>(m + n); }
    int two_j3() const noexcept { return static_cast<int>(m) - static_cast<int>(n); }
    double j() const noexcept { return 0.5 * two_j(); }
    double j3() const noexcept { return 0.5 * two_j3(); }
};

/// All labels with 0 <= m, n <= N-1, ordered by j then j3 descending.
std::vector<JLabel> jj3_labels(std::size_t levels);

/// Labels grouped into shells of constant j; element k holds 2j = k.
std::vector<std::vector<JLabel>> shells(const std::vector<JLabel>& labels);

using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Real4 = Eigen::Matrix4d;
using Lambda3 = Eigen::Vector3d;

/// Generators acting on Xi = (x1c, x2c, p1/2, p2/2).
std::array<Matrix4, 3> phase_space_generators();

SU2Generators phase4d_generators();

/// Finite rotation of Xi generated by lambda . J, R(lambda) = exp(i lambda . J4),
/// matching Xi -> exp(-i lambda.J) Xi exp(i lambda.J) = R Xi.
Real4 rotation_matrix(const Lambda3& lambda);

/// max_{ij} || [Ji, Jj] - i eps_ijk Jk || over the safe block.
double closure_residual(const SU2Generators& g);

/// Returns M with [J, T_a] = sum_b M_ab T_b, fitted by least squares on the block;
/// fit_residual receives the largest row residual.
Matrix4 adjoint_matrix(const Operator& J, const std::array<Operator, 4>& tuple, const BasisBlock& block,
                       double* fit_residual = nullptr);

/// (x1c, x2c, p1/2, p2/2) from the scaled Hilbert-Schmidt operators.
std::array<Operator, 4> phase_space_tuple(const ScaledOperators& ops);

/// (x1, x2, p1, p2) of two commuting oscillators in units where mu*omega = 1.
std::array<Operator, 4> commutative_phase_tuple(std::size_t levels);

struct CovarianceResult {
    double max_difference;    // max_a || U Xi_a U^dag - (R Xi)_a ||
    double max_fit_residual;  // max_a distance of U Xi_a U^dag from span(Xi)
    Real4 rotation;
};

/// Conjugates each component of the tuple by exp(-i lambda . J) and compares
/// with R(lambda) applied to the tuple, on the complete-shell block.
CovarianceResult covariance_residual(const SU2Generators& g, const std::array<Operator, 4>& basis_ops,
                                     const Lambda3& lambda);

/// Residual of the best fit of exp(-i lambda.J) X_i exp(i lambda.J) inside
/// span{X1, X2}, maximized over i.
double position_noncovariance(const SU2Generators& g, const Operator& X1, const Operator& X2,
                              const Lambda3& lambda);

/// exp(-i lambda . J) on the generators' space.
Operator rotation_unitary(const SU2Generators& g, const Lambda3& lambda);

}  // namespace moyal
