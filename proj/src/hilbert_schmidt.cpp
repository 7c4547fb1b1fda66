#include "moyal/hilbert_schmidt.hpp"

#include <cmath>

#include "moyal/errors.hpp"

namespace moyal {

ModelConfig::ModelConfig(double theta, std::size_t truncation) : theta_(theta), truncation_(truncation) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidParameter("theta must be positive");
    if (truncation < 4) throw InvalidParameter("truncation must be at least 4");
}

HSSpace::HSSpace(ModelConfig config) : config_(config) {}

std::size_t HSSpace::index(std::size_t m, std::size_t n) const {
    if (m >= levels() || n >= levels()) throw InvalidParameter("HSSpace::index: label out of range");
    return m * levels() + n;
}

std::pair<std::size_t, std::size_t> HSSpace::decode(std::size_t index) const {
    if (index >= dim()) throw InvalidParameter("HSSpace::decode: index out of range");
    return {index / levels(), index % levels()};
}

HSState::HSState(const HSSpace& space, Vector amplitudes) : levels_(space.levels()), amps_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amps_.size()) != space.dim())
        throw DimensionMismatch("HSState", space.dim(), static_cast<std::size_t>(amps_.size()));
    if (!amps_.allFinite()) throw NonFiniteInput("HSState: non-finite amplitude");
}

HSState HSState::dyad(const HSSpace& space, std::size_t m, std::size_t n) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
    v(static_cast<Eigen::Index>(space.index(m, n))) = 1.0;
    return {space, std::move(v)};
}

HSState HSState::from_matrix(const HSSpace& space, const Matrix& psi) {
    const auto n = static_cast<Eigen::Index>(space.levels());
    if (psi.rows() != n || psi.cols() != n)
        throw DimensionMismatch("HSState::from_matrix", space.levels(), static_cast<std::size_t>(psi.rows()));
    Vector v(n * n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) v(r * n + c) = psi(r, c);
    return {space, std::move(v)};
}

Matrix HSState::as_matrix() const {
    const auto n = static_cast<Eigen::Index>(levels_);
    Matrix psi(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) psi(r, c) = amps_(r * n + c);
    return psi;
}

Operator left_action(const Operator& a, const HSSpace& space) {
    if (a.dim() != space.levels()) throw DimensionMismatch("left_action", space.levels(), a.dim());
    return tensor(a, Operator::identity(space.levels()));
}

Operator right_action(const Operator& a, const HSSpace& space) {
    if (a.dim() != space.levels()) throw DimensionMismatch("right_action", space.levels(), a.dim());
    return tensor(Operator::identity(space.levels()), Operator(a.matrix().transpose()));
}

Operator sandwich(const Operator& left, const Operator& right, const HSSpace& space) {
    if (left.dim() != space.levels()) throw DimensionMismatch("sandwich", space.levels(), left.dim());
    if (right.dim() != space.levels()) throw DimensionMismatch("sandwich", space.levels(), right.dim());
    return tensor(left, Operator(right.matrix().transpose()));
}

RepOperators build_rep(const HSSpace& space) {
    const double theta = space.theta();
    const double s = std::sqrt(theta / 2.0);
    const Operator b = annihilator(space.fock());

    Operator B_L = left_action(b, space);
    Operator B_R = right_action(b, space);
    Operator B_Ldag = adjoint(B_L);
    Operator B_Rdag = adjoint(B_R);

    Operator X1 = s * (B_L + B_Ldag);
    Operator X2 = (kI * s) * (B_Ldag - B_L);
    Operator X1R = s * (B_R + B_Rdag);
    Operator X2R = (kI * s) * (B_Rdag - B_R);

    // P_i = (1/theta) eps_ij (X_j^L - X_j^R)
    Operator P1 = (1.0 / theta) * (X2 - X2R);
    Operator P2 = (-1.0 / theta) * (X1 - X1R);

    // X_i^c = X_i + (theta/2) eps_ij P_j
    Operator X1c = X1 + (theta / 2.0) * P2;
    Operator X2c = X2 - (theta / 2.0) * P1;

    return RepOperators{std::move(B_L), std::move(B_R), std::move(B_Ldag), std::move(B_Rdag),
                        std::move(X1),  std::move(X2),  std::move(X1R),    std::move(X2R),
                        std::move(X1c), std::move(X2c), std::move(P1),     std::move(P2)};
}

Complex hs_inner(const HSState& phi, const HSState& psi) {
    if (phi.levels() != psi.levels()) throw DimensionMismatch("hs_inner", phi.levels(), psi.levels());
    return (phi.as_matrix().adjoint() * psi.as_matrix()).trace();
}

ScaledOperators dimensionless(const RepOperators& rep, double theta) {
    if (!(theta > 0.0)) throw InvalidParameter("theta must be positive");
    const double r = std::sqrt(theta);
    Operator p1 = r * rep.P1;
    Operator p2 = r * rep.P2;
    Operator p1_half = 0.5 * p1;
    Operator p2_half = 0.5 * p2;
    return ScaledOperators{(1.0 / r) * rep.X1c, (1.0 / r) * rep.X2c, std::move(p1), std::move(p2),
                           std::move(p1_half), std::move(p2_half)};
}

}  // namespace moyal
