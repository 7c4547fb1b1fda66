#include "moyal/blocks.hpp"

#include "moyal/errors.hpp"

namespace moyal {

namespace {

template <typename Pred>
std::vector<Eigen::Index> select(std::size_t levels, Pred keep) {
    std::vector<Eigen::Index> idx;
    for (std::size_t m = 0; m < levels; ++m)
        for (std::size_t n = 0; n < levels; ++n)
            if (keep(m, n)) idx.push_back(static_cast<Eigen::Index>(m * levels + n));
    return idx;
}

}  // namespace

BasisBlock BasisBlock::safe(std::size_t levels) {
    if (levels < 2) throw InvalidParameter("BasisBlock::safe: need N >= 2");
    return {levels * levels,
            select(levels, [&](std::size_t m, std::size_t n) { return m + 2 <= levels && n + 2 <= levels; })};
}

BasisBlock BasisBlock::interior(std::size_t levels, std::size_t margin) {
    if (levels < margin + 1) throw InvalidParameter("BasisBlock::interior: margin leaves no levels");
    return {levels * levels, select(levels, [&](std::size_t m, std::size_t n) {
                return m + margin + 1 <= levels && n + margin + 1 <= levels;
            })};
}

BasisBlock BasisBlock::complete_shells(std::size_t levels) {
    if (levels < 2) throw InvalidParameter("BasisBlock::complete_shells: need N >= 2");
    return {levels * levels, select(levels, [&](std::size_t m, std::size_t n) { return m + n + 2 <= levels; })};
}

BasisBlock BasisBlock::low_labels(std::size_t levels, std::size_t max_sum) {
    return {levels * levels, select(levels, [&](std::size_t m, std::size_t n) { return m + n <= max_sum; })};
}

BasisBlock BasisBlock::full(std::size_t dim) {
    std::vector<Eigen::Index> idx(dim);
    for (std::size_t k = 0; k < dim; ++k) idx[k] = static_cast<Eigen::Index>(k);
    return {dim, std::move(idx)};
}

Matrix BasisBlock::restrict(const Matrix& m) const {
    if (static_cast<std::size_t>(m.rows()) != dim_)
        throw DimensionMismatch("BasisBlock::restrict", dim_, static_cast<std::size_t>(m.rows()));
    const auto k = static_cast<Eigen::Index>(idx_.size());
    Matrix out(k, k);
    for (Eigen::Index c = 0; c < k; ++c)
        for (Eigen::Index r = 0; r < k; ++r) out(r, c) = m(idx_[r], idx_[c]);
    return out;
}

Vector BasisBlock::restrict(const Vector& v) const {
    if (static_cast<std::size_t>(v.size()) != dim_)
        throw DimensionMismatch("BasisBlock::restrict", dim_, static_cast<std::size_t>(v.size()));
    Vector out(static_cast<Eigen::Index>(idx_.size()));
    for (std::size_t k = 0; k < idx_.size(); ++k) out(static_cast<Eigen::Index>(k)) = v(idx_[k]);
    return out;
}

double BasisBlock::norm(const Operator& a) const { return restrict(a.matrix()).norm(); }

double BasisBlock::distance(const Operator& a, const Operator& b) const {
    if (a.dim() != b.dim()) throw DimensionMismatch("BasisBlock::distance", a.dim(), b.dim());
    return restrict(Matrix(a.matrix() - b.matrix())).norm();
}

}  // namespace moyal
