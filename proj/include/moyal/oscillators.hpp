#pragma once

// Oscillator Hamiltonians on the commutative and Moyal planes, their derived
// parameters and closed-form spectra.
//
// Every Hamiltonian has two constructions: the phase-space quadratic form
// (products of truncated position/momentum matrices) and the normal-ordered
// ladder form. The ladder form is the exact projection of the infinite
// operator onto the truncated space and is what the builders return.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "moyal/hilbert_schmidt.hpp"
#include "moyal/operator.hpp"

namespace moyal {

struct OscParams {
    double mu;
    double omega;

    OscParams(double mu, double omega);
};

enum class Model { commutative, h1, h2, h3 };

std::string to_string(Model model);
Model parse_model(std::string_view name);

// Commutative plane, H_c (x) H_c.
Operator h_commutative(std::size_t levels, const OscParams& p);
Operator h_commutative_quadratic(std::size_t levels, const OscParams& p);

// Unphysical oscillators built from the commuting coordinates X^c.
Operator h1(const HSSpace& space);
Operator h1_quadratic(const RepOperators& rep, double theta);

struct AlphaBeta {
    double alpha;
    double beta;
};

/// alpha = mu w^2 theta/4 + 1/(mu theta), beta = mu w^2 theta/4 - 1/(mu theta).
AlphaBeta alpha_beta(const OscParams& p, double theta);

/// alpha (N_L + N_R + 1) + beta (B_L^dag B_R + B_R^dag B_L), N_L = B_L^dag B_L,
/// N_R = B_R B_R^dag.
Operator h2(const HSSpace& space, const OscParams& p);
Operator h2_quadratic(const RepOperators& rep, const OscParams& p);

/// (mu0, omega0) = (1/sqrt(theta), 2/sqrt(theta)).
OscParams critical_point(double theta);

struct RenormalizedMassFrequency {
    double mu_prime;
    double omega_prime;
};

/// 1/mu' = 1/mu + mu w^2 theta^2 / 4, w'^2 = w^2 (1 + mu^2 w^2 theta^2 / 4).
RenormalizedMassFrequency renormalize(const OscParams& p, double theta);

struct Lambdas {
    double plus;
    double minus;
};

Lambdas lambdas(const OscParams& p, double theta);

/// Collected derived parameters for (mu, omega, theta). phi is the
/// Bogoliubov angle of the physical oscillator.
struct RenormalizedParams {
    double mu_prime, omega_prime;
    double lambda_plus, lambda_minus;
    double alpha, beta;
    double phi;
};

RenormalizedParams renormalized_params(const OscParams& p, double theta);

// Physical oscillator with non-commuting positions.
struct ZeemanDecomposition {
    Operator h2_part;     // H2 at (mu', omega')
    double zeeman_coeff;  // mu theta omega^2
    Operator J3;
    OscParams renormalized;
};

ZeemanDecomposition zeeman_decomposition(const HSSpace& space, const OscParams& p);
/// h2_part + zeeman_coeff * J3.
Operator h3(const HSSpace& space, const OscParams& p);
/// P^2 / (2 mu) + mu w^2 X^2 / 2 with left-action X.
Operator h3_direct(const RepOperators& rep, const OscParams& p);

/// Closed-form energies over labels (m, n), j = (m+n)/2, j3 = (m-n)/2.
class SpectrumFormula {
public:
    SpectrumFormula(Model model, const OscParams& p, double theta);

    Model model() const noexcept { return model_; }
    const OscParams& params() const noexcept { return p_; }
    double theta() const noexcept { return theta_; }
    double energy(std::size_t m, std::size_t n) const;
    /// For h3 the renormalized form w'(2j+1) + theta mu' w'^2 j3; otherwise
    /// identical to energy().
    double energy_jj3(double j, double j3) const;
    /// Lowest `count` energies over the untruncated label lattice, ascending.
    std::vector<double> lowest(std::size_t count) const;

private:
    Model model_;
    OscParams p_;
    double theta_;
};

SpectrumFormula analytic_spectrum(Model model, const OscParams& p, double theta);

/// The model's Hamiltonian at truncation N: H_c (x) H_c for commutative,
/// H_q otherwise.
Operator hamiltonian(Model model, const OscParams& p, double theta, std::size_t levels);

}  // namespace moyal
