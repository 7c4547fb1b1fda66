#pragma once

// Numerical spectroscopy against the closed-form spectra: trusted-level
// selection, degeneracy grouping, Zeeman splitting and convergence in N.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "moyal/bogoliubov.hpp"
#include "moyal/operator.hpp"
#include "moyal/oscillators.hpp"

namespace moyal {

struct DegeneracyEntry {
    double energy;  // mean of the group
    std::size_t multiplicity;
};

/// Groups ascending values whose neighbour gap is at most 1e-6 times the
/// median of the significant gaps.
std::vector<DegeneracyEntry> group_levels(const std::vector<double>& ascending);

struct SpectrumReport {
    Model model;
    double mu, omega, theta;
    std::size_t levels;
    std::size_t compared;
    std::vector<double> numeric;
    std::vector<double> analytic;
    std::vector<double> residuals;  // numeric - analytic
    double max_abs_residual;
    std::vector<DegeneracyEntry> degeneracy_table;  // grouped from numeric

    nlohmann::ordered_json to_json() const;
    /// Rows: model, mu, omega, theta, N, level_index, numeric, analytic, residual.
    std::vector<std::vector<std::string>> csv_rows() const;
    static std::vector<std::string> csv_header();
};

/// Number of labels with m + n <= floor(N/2).
std::size_t trusted_label_count(std::size_t levels);

/// For each eigenvector v (taken from the lowest `count`), ||H' v - E v|| with
/// v embedded into N+1 levels and H' the same operator at N+1. The ladder
/// Hamiltonians move each mode by at most one level, so H' v equals the
/// untruncated action and some exact eigenvalue lies within this distance.
std::vector<double> truncation_bounds(const EigenSystem& es, const Operator& extended, std::size_t levels,
                                      std::size_t count);

/// Default K: the trusted label count, reduced to the analytic levels lying
/// strictly below every label outside the trust region. With `extended` (the
/// Hamiltonian at N+1) it is further cut to the leading levels whose
/// truncation bound is at most 1e-5 (eigenvalue error of order
/// bound^2 / gap). K always ends on a complete analytic
/// multiplet.
std::size_t default_compared_levels(const SpectrumFormula& formula, const EigenSystem& es, std::size_t levels,
                                    const Operator* extended = nullptr);

SpectrumReport compare_spectrum(const EigenSystem& es, const SpectrumFormula& formula, std::size_t levels,
                                std::size_t compared);

/// Diagonalizes H and compares the lowest K levels with the formula; K is the
/// default above unless given.
SpectrumReport diagonalize_compare(const Operator& h, const SpectrumFormula& formula, std::size_t levels,
                                   std::optional<std::size_t> compared = std::nullopt,
                                   const Operator* extended = nullptr);

/// diagonalize_compare on the model Hamiltonian, with truncation bounds.
SpectrumReport model_spectrum(Model model, const OscParams& p, double theta, std::size_t levels,
                              std::optional<std::size_t> compared = std::nullopt);

struct ConvergencePoint {
    std::size_t levels;
    std::size_t compared;
    double max_abs_residual;
};

/// Residual over a fixed K0 lowest levels for each N. K0 defaults to the
/// label-based default K (no truncation bounds) of the smallest N.
std::vector<ConvergencePoint> convergence_study(Model model, const OscParams& p, double theta,
                                                const std::vector<std::size_t>& levels_list,
                                                std::optional<std::size_t> compared = std::nullopt);

/// True if residuals never rise by more than slack along the list.
bool non_increasing(const std::vector<ConvergencePoint>& study, double slack = 1e-10);

/// |(psi_num|psi0)| with psi_num the lowest eigenvector of H.
double ground_overlap(const Operator& h, const GroundState& psi0);
double ground_overlap(const EigenSystem& es, const GroundState& psi0);

struct ZeemanMultiplet {
    int two_j;
    std::vector<double> energies;  // j3 = -j, ..., j
    double max_spacing_error;
};

struct ZeemanSplitting {
    double expected_spacing;
    std::vector<ZeemanMultiplet> multiplets;
    double max_spacing_error;
};

/// Sorts eigenvectors into J3 sectors (J3 must be diagonal and commute with H)
/// and assembles the j-multiplets with 2j <= max_two_j.
ZeemanSplitting zeeman_splitting(const EigenSystem& es, const Operator& J3, double expected_spacing,
                                 int max_two_j);

}  // namespace moyal
