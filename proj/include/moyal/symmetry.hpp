#pragma once

// Time reversal on H_q and SU(2) commutant diagnostics.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "moyal/hilbert_schmidt.hpp"
#include "moyal/operator.hpp"
#include "moyal/oscillators.hpp"
#include "moyal/schwinger.hpp"

namespace moyal {

/// psi -> psi^dagger. Antilinear.
HSState theta_apply(const HSSpace& space, const HSState& psi);

/// Factor swap (m, n) -> (n, m) on the product basis.
Operator swap_permutation(std::size_t levels);

/// Theta O Theta^{-1} = S conj(O) S.
Operator theta_conjugate(const Operator& op);

/// Safe-block norms ||[H, J_i]||.
std::array<double, 3> su2_commutant(const Operator& h, const SU2Generators& gens);

struct SymmetryReport {
    Model model;
    OscParams params;
    double theta;
    std::size_t levels;
    double hamiltonian_norm;  // safe-block norm of the model Hamiltonian
    std::array<double, 3> su2_residuals;
    // Against the generators of the model's Bogoliubov frame (phi = 0 for h1).
    double frame_phi;
    std::array<double, 3> su2_frame_residuals;
    std::vector<std::pair<std::string, double>> time_reversal;  // rule -> residual
    // ||Theta H3 Theta^-1 - H3 + 2 mu theta w^2 J3||_safe
    double zeeman_difference_residual;
    double theta_breaking;  // ||Theta H3 Theta^-1 - H3||_safe
    // H3 minus its Zeeman term, against the generators of its own frame.
    std::array<double, 3> su2_without_zeeman;
    double theta_without_zeeman;

    nlohmann::ordered_json to_json() const;
};

/// Checks every time-reversal rule, the Zeeman difference of H3 and the
/// commutants of the model Hamiltonian and of H3 without its Zeeman term.
/// Away from the critical point H2 is invariant only under the generators
/// built from the rotated ladders, so those are reported alongside.
SymmetryReport time_reversal_suite(const HSSpace& space, const RepOperators& rep, const SU2Generators& gens,
                                   const OscParams& p, Model model);

}  // namespace moyal
