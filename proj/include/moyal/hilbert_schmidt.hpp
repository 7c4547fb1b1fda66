#pragma once

// Quantum Hilbert space of the Moyal plane as Hilbert-Schmidt operators on the
// truncated boson Fock space, vectorized as psi[m][n] -> amplitude m * N + n.
//
// Naming: x1, x2 in the dimensionless scaled set below are commuting
// coordinates divided by sqrt(theta). They are unrelated to the abstract
// non-commuting Moyal coordinates, which appear here only as X1, X2 (left
// action).

#include <cstddef>
#include <utility>

#include "moyal/operator.hpp"

namespace moyal {

class ModelConfig {
public:
    ModelConfig(double theta, std::size_t truncation);

    double theta() const noexcept { return theta_; }
    std::size_t truncation() const noexcept { return truncation_; }

private:
    double theta_;
    std::size_t truncation_;
};

class HSSpace {
public:
    explicit HSSpace(ModelConfig config);

    const ModelConfig& config() const noexcept { return config_; }
    double theta() const noexcept { return config_.theta(); }
    std::size_t levels() const noexcept { return config_.truncation(); }
    std::size_t dim() const noexcept { return levels() * levels(); }
    FockSpace fock() const { return FockSpace(levels()); }

    std::size_t index(std::size_t m, std::size_t n) const;
    std::pair<std::size_t, std::size_t> decode(std::size_t index) const;

private:
    ModelConfig config_;
};

/// Element of H_q: psi = sum_{mn} psi[m][n] |m><n|.
class HSState {
public:
    HSState(const HSSpace& space, Vector amplitudes);

    /// |m><n|.
    static HSState dyad(const HSSpace& space, std::size_t m, std::size_t n);
    static HSState from_matrix(const HSSpace& space, const Matrix& psi);

    std::size_t levels() const noexcept { return levels_; }
    const Vector& amplitudes() const noexcept { return amps_; }
    Matrix as_matrix() const;
    double norm() const { return amps_.norm(); }

private:
    std::size_t levels_;
    Vector amps_;
};

/// Operators on H_q. X1, X2 are the physical (left-action) positions; X1R, X2R
/// the right actions. Positions carry units sqrt(length^2), momenta 1/length.
struct RepOperators {
    Operator B_L, B_R, B_Ldag, B_Rdag;
    Operator X1, X2, X1R, X2R;
    Operator X1c, X2c;
    Operator P1, P2;
};

/// a psi.
Operator left_action(const Operator& a, const HSSpace& space);
/// psi a.
Operator right_action(const Operator& a, const HSSpace& space);
/// psi -> left psi right, i.e. left_action(left) * right_action(right).
Operator sandwich(const Operator& left, const Operator& right, const HSSpace& space);

RepOperators build_rep(const HSSpace& space);

/// (phi|psi) = Tr(phi^dagger psi).
Complex hs_inner(const HSState& phi, const HSState& psi);

/// x_c = X_c / sqrt(theta), p = sqrt(theta) P, p_half = p / 2.
struct ScaledOperators {
    Operator x1c, x2c, p1, p2, p1_half, p2_half;
};

ScaledOperators dimensionless(const RepOperators& rep, double theta);

}  // namespace moyal
