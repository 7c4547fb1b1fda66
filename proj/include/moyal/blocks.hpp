#pragma once

// Index selections on the two-mode product basis (m, n) -> m * N + n.
//
// Truncating each mode at N levels corrupts exactly those matrix elements of a
// product of ladder operators whose intermediate states would need level N.
// The selections below name the sub-blocks on which the truncated algebra is
// still exact.

#include <cstddef>
#include <vector>

#include "moyal/operator.hpp"

namespace moyal {

class BasisBlock {
public:
    /// m, n <= N-2. Exact for products of two single-step ladder operators.
    static BasisBlock safe(std::size_t levels);
    /// m, n <= N-1-margin; safe(N) is interior(N, 1).
    static BasisBlock interior(std::size_t levels, std::size_t margin);
    /// m + n <= N-2: complete j-shells with room for one step outward. Needed
    /// when exponentials of shell-preserving generators are involved.
    static BasisBlock complete_shells(std::size_t levels);
    /// m + n <= max_sum.
    static BasisBlock low_labels(std::size_t levels, std::size_t max_sum);
    static BasisBlock full(std::size_t dim);

    const std::vector<Eigen::Index>& indices() const noexcept { return idx_; }
    std::size_t size() const noexcept { return idx_.size(); }
    /// Dimension of the ambient operator space this block indexes into.
    std::size_t ambient_dim() const noexcept { return dim_; }

    Matrix restrict(const Matrix& m) const;
    Vector restrict(const Vector& v) const;
    /// Frobenius norm of the sub-block.
    double norm(const Operator& a) const;
    double distance(const Operator& a, const Operator& b) const;

private:
    BasisBlock(std::size_t dim, std::vector<Eigen::Index> idx) : dim_(dim), idx_(std::move(idx)) {}

    std::size_t dim_;
    std::vector<Eigen::Index> idx_;
};

}  // namespace moyal
