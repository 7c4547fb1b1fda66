#include "moyal/schwinger.hpp"

#include <algorithm>
#include <cmath>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

Vector flatten(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((i - j) * (j - k) * (k - i) > 0) ? 1 : -1;  // indices 0,1,2
}

}  // namespace

const Operator& SU2Generators::operator[](int k) const {
    switch (k) {
        case 0: return J1;
        case 1: return J2;
        case 2: return J3;
        default: throw InvalidParameter("SU2Generators: index must be 0, 1 or 2");
    }
}

Operator SU2Generators::raising() const { return J1 + kI * J2; }
Operator SU2Generators::lowering() const { return J1 - kI * J2; }

BasisBlock SU2Generators::safe_block() const {
    if (context == GeneratorContext::phase4d) return BasisBlock::full(4);
    return BasisBlock::interior(levels, reach);
}

SU2Generators schwinger_commutative(std::size_t levels) {
    const FockSpace space(levels);
    const Operator b = annihilator(space);
    const Operator one = Operator::identity(levels);
    const Operator a1 = tensor(b, one);
    const Operator a2 = tensor(one, b);
    const Operator a1d = adjoint(a1);
    const Operator a2d = adjoint(a2);
    Operator J1 = 0.5 * (a2d * a1 + a1d * a2);
    Operator J2 = Complex(0.0, 0.5) * (a2d * a1 - a1d * a2);
    const Operator n = number_operator(space);
    Operator J3 = 0.5 * (tensor(n, one) - tensor(one, n));
    return {std::move(J1), std::move(J2), std::move(J3), GeneratorContext::commutative, levels};
}

SU2Generators schwinger_noncommutative(const HSSpace& space, const RepOperators& rep) {
    if (rep.B_L.dim() != space.dim()) throw DimensionMismatch("schwinger_noncommutative", space.dim(), rep.B_L.dim());
    // Factor-wise products, entry for entry equal to B_R B_L etc.
    const Operator b = annihilator(space.fock());
    const Operator bd = adjoint(b);
    const Operator up = sandwich(b, b, space);      // B_R B_L: psi -> b psi b
    const Operator down = sandwich(bd, bd, space);  // B_L^dag B_R^dag: psi -> b^dag psi b^dag
    const Operator n = number_operator(space.fock());
    Operator J1 = 0.5 * (up + down);
    Operator J2 = Complex(0.0, 0.5) * (up - down);
    Operator J3 = 0.5 * (left_action(n, space) - right_action(n, space));
    return {std::move(J1), std::move(J2), std::move(J3), GeneratorContext::noncommutative, space.levels()};
}

SU2Generators schwinger_noncommutative(const HSSpace& space) {
    return schwinger_noncommutative(space, build_rep(space));
}

SU2Generators schwinger_primed(const HSSpace& space, double phi) {
    const Operator b = annihilator(space.fock());
    const Operator bd = adjoint(b);
    const Operator n = number_operator(space.fock());
    const double c = std::cosh(phi);
    const double s = std::sinh(phi);
    // B_R' B_L' with [B_L, B_R] = 0; the squares are exact projections of b^2.
    const Operator b2 = b * b;
    const Operator up =
        (c * s) * (left_action(b2, space) + right_action(b2, space)) + (c * c + s * s) * sandwich(b, b, space);
    const Operator down = adjoint(up);
    Operator J1 = 0.5 * (up + down);
    Operator J2 = Complex(0.0, 0.5) * (up - down);
    Operator J3 = 0.5 * (left_action(n, space) - right_action(n, space));
    return {std::move(J1), std::move(J2), std::move(J3), GeneratorContext::noncommutative, space.levels(),
            phi == 0.0 ? std::size_t{1} : std::size_t{2}};
}

Operator casimir(const SU2Generators& g) { return g.J1 * g.J1 + g.J2 * g.J2 + g.J3 * g.J3; }

Operator casimir_closed_form(const RepOperators& rep) {
    const Operator total = rep.B_Ldag * rep.B_L + rep.B_R * rep.B_Rdag;
    const Operator shifted = total + 2.0 * Operator::identity(total.dim());
    return 0.25 * (total * shifted);
}

std::vector<JLabel> jj3_labels(std::size_t levels) {
    if (levels < 2) throw InvalidParameter("jj3_labels: need N >= 2");
    std::vector<JLabel> labels;
    labels.reserve(levels * levels);
    for (std::size_t two_j = 0; two_j + 1 < 2 * levels; ++two_j) {
        // j3 descending means m descending within the shell.
        for (std::size_t m = std::min(two_j, levels - 1) + 1; m-- > 0;) {
            const std::size_t n = two_j - m;
            if (n < levels) labels.push_back({m, n});
        }
    }
    return labels;
}

std::vector<std::vector<JLabel>> shells(const std::vector<JLabel>& labels) {
    std::vector<std::vector<JLabel>> out;
    for (const auto& l : labels) {
        const auto k = static_cast<std::size_t>(l.two_j());
        if (out.size() <= k) out.resize(k + 1);
        out[k].push_back(l);
    }
    return out;
}

std::array<Matrix4, 3> phase_space_generators() {
    const Complex h(0.0, 0.5);
    Matrix4 J1, J2, J3;
    J1 << 0, 0, 1, 0,
          0, 0, 0, -1,
         -1, 0, 0, 0,
          0, 1, 0, 0;
    J2 << 0, 0, 0, -1,
          0, 0, -1, 0,
          0, 1, 0, 0,
          1, 0, 0, 0;
    J3 << 0, 1, 0, 0,
         -1, 0, 0, 0,
          0, 0, 0, 1,
          0, 0, -1, 0;
    return {h * J1, h * J2, h * J3};
}

SU2Generators phase4d_generators() {
    const auto J = phase_space_generators();
    return {Operator(Matrix(J[0])), Operator(Matrix(J[1])), Operator(Matrix(J[2])), GeneratorContext::phase4d, 0};
}

Real4 rotation_matrix(const Lambda3& lambda) {
    const auto J = phase_space_generators();
    Matrix gen = Matrix::Zero(4, 4);
    for (int k = 0; k < 3; ++k) gen += (kI * lambda(k)) * Matrix(J[static_cast<std::size_t>(k)]);
    return expm(Operator(gen)).matrix().real();
}

double closure_residual(const SU2Generators& g) {
    const BasisBlock block = g.safe_block();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Operator rhs = Operator::zero(g.J1.dim());
            for (int k = 0; k < 3; ++k) {
                const int e = levi_civita(i, j, k);
                if (e != 0) rhs += (kI * static_cast<double>(e)) * g[k];
            }
            worst = std::max(worst, block.distance(commutator(g[i], g[j]), rhs));
        }
    }
    return worst;
}

Matrix4 adjoint_matrix(const Operator& J, const std::array<Operator, 4>& tuple, const BasisBlock& block,
                       double* fit_residual) {
    const auto rows = static_cast<Eigen::Index>(block.size() * block.size());
    Matrix design(rows, 4);
    for (int b = 0; b < 4; ++b) design.col(b) = flatten(block.restrict(tuple[static_cast<std::size_t>(b)].matrix()));
    const auto qr = design.colPivHouseholderQr();
    Matrix4 M;
    double worst = 0.0;
    for (int a = 0; a < 4; ++a) {
        const Vector target = flatten(block.restrict(commutator(J, tuple[static_cast<std::size_t>(a)]).matrix()));
        const Vector coef = qr.solve(target);
        worst = std::max(worst, (design * coef - target).norm());
        M.row(a) = coef.transpose();
    }
    if (fit_residual != nullptr) *fit_residual = worst;
    return M;
}

std::array<Operator, 4> phase_space_tuple(const ScaledOperators& ops) {
    return {ops.x1c, ops.x2c, ops.p1_half, ops.p2_half};
}

std::array<Operator, 4> commutative_phase_tuple(std::size_t levels) {
    const FockSpace space(levels);
    const Operator b = annihilator(space);
    const Operator one = Operator::identity(levels);
    const Operator a1 = tensor(b, one);
    const Operator a2 = tensor(one, b);
    const double r = 1.0 / std::sqrt(2.0);
    return {r * (a1 + adjoint(a1)), r * (a2 + adjoint(a2)), (kI * r) * (adjoint(a1) - a1),
            (kI * r) * (adjoint(a2) - a2)};
}

Operator rotation_unitary(const SU2Generators& g, const Lambda3& lambda) {
    Operator gen = Operator::zero(g.J1.dim());
    for (int k = 0; k < 3; ++k) gen += (-kI * lambda(k)) * g[k];
    return expm(gen);
}

namespace {

BasisBlock conjugation_block(const SU2Generators& g) {
    if (g.context == GeneratorContext::phase4d) return BasisBlock::full(4);
    return BasisBlock::complete_shells(g.levels);
}

// Distance of `target` from span(columns) on the block.
double span_residual(const Matrix& design, const Vector& target) {
    const Vector coef = design.colPivHouseholderQr().solve(target);
    return (design * coef - target).norm();
}

}  // namespace

CovarianceResult covariance_residual(const SU2Generators& g, const std::array<Operator, 4>& basis_ops,
                                     const Lambda3& lambda) {
    for (const auto& op : basis_ops)
        if (op.dim() != g.J1.dim()) throw DimensionMismatch("covariance_residual", g.J1.dim(), op.dim());

    const Real4 R = rotation_matrix(lambda);
    const Operator U = rotation_unitary(g, lambda);
    const Operator Ud = adjoint(U);
    const BasisBlock block = conjugation_block(g);

    const auto rows = static_cast<Eigen::Index>(block.size() * block.size());
    Matrix design(rows, 4);
    for (int b = 0; b < 4; ++b)
        design.col(b) = flatten(block.restrict(basis_ops[static_cast<std::size_t>(b)].matrix()));

    CovarianceResult out{0.0, 0.0, R};
    for (int a = 0; a < 4; ++a) {
        const Operator moved = U * basis_ops[static_cast<std::size_t>(a)] * Ud;
        Operator expected = Operator::zero(g.J1.dim());
        for (int b = 0; b < 4; ++b) expected += R(a, b) * basis_ops[static_cast<std::size_t>(b)];
        out.max_difference = std::max(out.max_difference, block.distance(moved, expected));
        out.max_fit_residual =
            std::max(out.max_fit_residual, span_residual(design, flatten(block.restrict(moved.matrix()))));
    }
    return out;
}

double position_noncovariance(const SU2Generators& g, const Operator& X1, const Operator& X2,
                              const Lambda3& lambda) {
    if (X1.dim() != g.J1.dim()) throw DimensionMismatch("position_noncovariance", g.J1.dim(), X1.dim());
    if (X2.dim() != g.J1.dim()) throw DimensionMismatch("position_noncovariance", g.J1.dim(), X2.dim());
    const Operator U = rotation_unitary(g, lambda);
    const Operator Ud = adjoint(U);
    const BasisBlock block = conjugation_block(g);

    const auto rows = static_cast<Eigen::Index>(block.size() * block.size());
    Matrix design(rows, 2);
    design.col(0) = flatten(block.restrict(X1.matrix()));
    design.col(1) = flatten(block.restrict(X2.matrix()));

    double worst = 0.0;
    for (const Operator* x : {&X1, &X2}) {
        const Operator moved = U * (*x) * Ud;
        worst = std::max(worst, span_residual(design, flatten(block.restrict(moved.matrix()))));
    }
    return worst;
}

}  // namespace moyal
