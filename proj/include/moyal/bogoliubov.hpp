#pragma once

// Bogoliubov angle, primed ladder operators, the dilatation operator and its
// unitary, and the exact oscillator ground state in H_q.

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "moyal/hilbert_schmidt.hpp"
#include "moyal/operator.hpp"
#include "moyal/oscillators.hpp"

namespace moyal {

/// phi = log(mu w theta / 2) / 2 for h2, log(mu' w' theta / 2) / 2 for h3.
/// Other models have no Bogoliubov angle.
double phi_for(const OscParams& p, double theta, Model model);

/// Coefficients of alpha (N_L + N_R + 1) + beta (B_L^dag B_R + h.c.) after
/// rewriting in operators rotated by phi. The off-diagonal part vanishes at the
/// Bogoliubov angle, leaving omega.
AlphaBeta primed_ladder_coefficients(const AlphaBeta& ab, double phi);

/// D = i (B_L^dag B_R - B_L B_R^dag), exact ladder form.
Operator dilatation(const HSSpace& space);
/// (X^c_i P_i + P_i X^c_i) / 2.
Operator dilatation_quadratic(const RepOperators& rep);

struct DilatationCalibration {
    double fitted;          // least-squares c from the first-order commutator
    double c;               // fitted, snapped to a multiple of 1/2
    double slope_residual;  // finite-difference check at small phi
};

/// Finds c in U = expm(-i c phi D) such that U X^c U^dag = e^phi X^c.
DilatationCalibration calibrate_dilatation(const HSSpace& space);

/// The calibrated constant, computed once and frozen.
double dilatation_constant();

/// expm(-i c phi D) with the frozen c.
Operator dilatation_unitary(const HSSpace& space, double phi);

/// Ground state generator G = B_L^dag B_R - B_L B_R^dag (anti-Hermitian).
Operator squeeze_generator(const HSSpace& space);

/// Sign s with |0>'<0|' = exp(-s phi G)|0><0| matching the closed form,
/// calibrated at small phi and frozen.
double ground_state_exponent_sign();

struct BogoliubovFrame {
    double phi;
    Operator B_L_prime, B_R_prime;
    Operator U;            // U B U^dag = B' for B in {B_L, B_R}
    double scaling_constant;
    Eigen::Matrix2d transform;  // [[cosh, sinh], [sinh, cosh]]
};

/// B_L' = cosh phi B_L + sinh phi B_R, B_R' = sinh phi B_L + cosh phi B_R.
std::array<Operator, 2> bogoliubov_pair(const RepOperators& rep, double phi);
BogoliubovFrame bogoliubov_frame(const HSSpace& space, const RepOperators& rep, double phi);

struct GroundState {
    HSState psi0;
    double phi;
    double gamma;  // log |tanh phi|; -inf at phi = 0
    double norm;

    /// Eigenvalues of psi0 viewed as an operator on H_c (it is diagonal).
    std::vector<double> operator_eigenvalues() const;
    /// True if consecutive significant eigenvalues change sign.
    bool alternating() const;
};

/// Smallest N with tanh^{2N} phi <= 1e-14.
std::size_t required_levels(double phi);

/// sech phi sum_m (-tanh phi)^m |m><m|.
GroundState ground_state_closed(const HSSpace& space, double phi);
/// exp(-s phi G)|0><0| with the calibrated sign.
GroundState ground_state_unitary(const HSSpace& space, double phi);

/// C_i = (mu w X^c_i + i P_i) / sqrt(2 mu w).
std::array<Operator, 2> c_operators(const RepOperators& rep, const OscParams& p);
/// C'_1 = (B_L' + B_R'^dag)/sqrt 2, C'_2 = -i (B_L' - B_R'^dag)/sqrt 2.
std::array<Operator, 2> c_operators_primed(const BogoliubovFrame& frame);

/// ||C_1 psi||, ||C_2 psi|| from N x N matrix products, without building the
/// N^2 x N^2 operators.
std::array<double, 2> c_annihilation(const HSState& psi, const OscParams& p, double theta);

struct PrimedAnnihilation {
    double B_L_prime;       // ||B_L' psi0||
    double B_R_prime_dag;   // ||B_R'^dag psi0||
    double C1_prime, C2_prime;
};

/// Action of the primed annihilators on psi0 at its own angle, evaluated as
/// products of N x N matrices (B_L psi = b psi, B_R psi = psi b).
PrimedAnnihilation primed_annihilation(const GroundState& psi0);

struct IntertwinerResult {
    double lambda_relation;  // ||(1 + theta lambda+) b psi0 - psi0 b||
    double tanh_relation;    // ||b psi0 + tanh phi psi0 b||
    double conjugate_relation;  // ||psi0 b^dag + tanh phi b^dag psi0||
};

/// Relations between b and psi0 as operators on H_c, restricted to m, n <= N-2.
IntertwinerResult intertwiner_check(const GroundState& psi0, double lambda_plus, double theta);

struct LambdaIdentities {
    double product_one;     // |(1 + theta l+)(1 - theta l-) - 1|
    double product_mw;      // |l+ l- - (mu w)^2| / (mu w)^2
    double tanh_one_minus;  // ||tanh phi| - (1 - theta l-)|
    double tanh_ratio;      // ||tanh phi| - l-/l+|
    double tanh_inverse;    // ||tanh phi| - 1/(1 + theta l+)|
    double tanh_phi;

    double max() const;
};

/// Identities between lambda+-, theta and the h3 Bogoliubov angle.
LambdaIdentities lambda_identities(const OscParams& p, double theta);

}  // namespace moyal
