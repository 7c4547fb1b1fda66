#pragma once

// Dense complex operator algebra on truncated Fock spaces.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace moyal {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Single-mode boson Fock space truncated to the levels |0>, ..., |N-1>.
class FockSpace {
public:
    explicit FockSpace(std::size_t levels);

    std::size_t levels() const noexcept { return levels_; }

private:
    std::size_t levels_;
};

/// Square complex matrix with finite entries. Immutable in practice: every
/// algebraic operation returns a new value.
class Operator {
public:
    explicit Operator(Matrix entries);

    static Operator identity(std::size_t dim);
    static Operator zero(std::size_t dim);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const Matrix& matrix() const noexcept { return m_; }
    Complex operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    /// Frobenius norm.
    double norm() const { return m_.norm(); }
    Complex trace() const { return m_.trace(); }

    Vector apply(const Vector& v) const;

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(Complex s);

    friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
    friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
    friend Operator operator-(const Operator& a) { return Operator(-a.m_); }
    friend Operator operator*(const Operator& lhs, const Operator& rhs);
    friend Operator operator*(Complex s, Operator a) { return a *= s; }
    friend Operator operator*(Operator a, Complex s) { return a *= s; }
    friend Operator operator*(double s, Operator a) { return a *= Complex(s, 0.0); }
    friend Operator operator*(Operator a, double s) { return a *= Complex(s, 0.0); }

private:
    Matrix m_;
};

/// Lowering operator b with <n-1|b|n> = sqrt(n).
Operator annihilator(const FockSpace& space);

/// b^dagger b, built from exact integers.
Operator number_operator(const FockSpace& space);

Operator adjoint(const Operator& a);

/// ab - ba.
Operator commutator(const Operator& a, const Operator& b);

/// Kronecker product; basis (m, n) of the product maps to index m * dim(b) + n.
Operator tensor(const Operator& a, const Operator& b);

/// Matrix exponential. Normal inputs go through a unitary eigendecomposition,
/// everything else through scaling-and-squaring Pade. Block-diagonal structure
/// (after permutation) is exploited: each invariant block is exponentiated alone.
Operator expm(const Operator& a);

/// expm(a) * v, exponentiating only the invariant blocks that v touches.
Vector expm_apply(const Operator& a, const Vector& v);

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // orthonormal columns, column k pairs with values[k]

    std::size_t size() const noexcept { return values.size(); }
    Vector vector(std::size_t k) const { return vectors.col(static_cast<Eigen::Index>(k)); }
};

/// Eigen-decomposition of a Hermitian operator. The input must satisfy
/// ||h - h^dagger|| <= 1e-10 ||h||; it is symmetrized before solving. The
/// first significant component of every eigenvector is made real positive,
/// and exact ties in the eigenvalue are ordered by that component's index.
EigenSystem hermitian_eig(const Operator& h);

/// Partition of basis indices into connected components of the nonzero
/// pattern of a (structurally symmetric) matrix. Components are ordered by
/// their smallest index; indices inside a component ascend.
std::vector<std::vector<Eigen::Index>> invariant_blocks(const Matrix& m);

}  // namespace moyal
