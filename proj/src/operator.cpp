#include "moyal/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

constexpr double kHermiticityTol = 1e-10;
constexpr double kNormalityTol = 1e-12;

bool all_finite(const Matrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
        }
    }
    return true;
}

class DisjointSets {
public:
    explicit DisjointSets(Eigen::Index n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), Eigen::Index{0});
    }

    Eigen::Index find(Eigen::Index x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(Eigen::Index a, Eigen::Index b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<Eigen::Index> parent_;
};

Matrix gather(const Matrix& m, const std::vector<Eigen::Index>& idx) {
    const auto k = static_cast<Eigen::Index>(idx.size());
    Matrix out(k, k);
    for (Eigen::Index c = 0; c < k; ++c)
        for (Eigen::Index r = 0; r < k; ++r) out(r, c) = m(idx[r], idx[c]);
    return out;
}

void scatter(Matrix& m, const std::vector<Eigen::Index>& idx, const Matrix& block) {
    const auto k = static_cast<Eigen::Index>(idx.size());
    for (Eigen::Index c = 0; c < k; ++c)
        for (Eigen::Index r = 0; r < k; ++r) m(idx[r], idx[c]) = block(r, c);
}

Matrix exp_from_hermitian(const Matrix& h, Complex factor) {
    // exp(factor * h) for Hermitian h.
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Eigen::VectorXd& e = es.eigenvalues();
    Vector d(e.size());
    for (Eigen::Index k = 0; k < e.size(); ++k) d(k) = std::exp(factor * e(k));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix expm_block(const Matrix& a) {
    if (a.rows() == 1) return Matrix::Constant(1, 1, std::exp(a(0, 0)));
    const double scale = a.norm();
    if (scale == 0.0) return Matrix::Identity(a.rows(), a.cols());

    const Matrix commut = a * a.adjoint() - a.adjoint() * a;
    if (commut.norm() <= kNormalityTol * scale * scale) {
        const Matrix herm = 0.5 * (a + a.adjoint());
        const Matrix anti = Complex(0.0, -0.5) * (a - a.adjoint());  // a = herm + i anti
        const double hn = herm.norm();
        const double an = anti.norm();
        if (an <= 1e-15 * scale) return exp_from_hermitian(0.5 * (herm + herm.adjoint()), 1.0);
        if (hn <= 1e-15 * scale) return exp_from_hermitian(0.5 * (anti + anti.adjoint()), kI);

        // Generic normal matrix: the Hermitian and anti-Hermitian parts commute,
        // so an irrational combination shares their eigenvectors.
        const double kappa = 0.6180339887498949;
        const Matrix mix = herm + kappa * anti;
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (mix + mix.adjoint()));
        const Matrix& v = es.eigenvectors();
        const Matrix rot = v.adjoint() * a * v;
        const Vector lambda = rot.diagonal();
        const double off = (rot - Matrix(lambda.asDiagonal())).norm();
        if (off <= 1e-10 * scale) {
            Vector d(lambda.size());
            for (Eigen::Index k = 0; k < lambda.size(); ++k) d(k) = std::exp(lambda(k));
            return v * d.asDiagonal() * v.adjoint();
        }
    }
    return a.exp();
}

}  // namespace

FockSpace::FockSpace(std::size_t levels) : levels_(levels) {
    if (levels < 2) throw InvalidParameter("FockSpace: need at least 2 levels");
}

Operator::Operator(Matrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols())
        throw DimensionMismatch("Operator", static_cast<std::size_t>(m_.rows()),
                                static_cast<std::size_t>(m_.cols()));
    if (m_.rows() == 0) throw InvalidParameter("Operator: empty matrix");
    if (!all_finite(m_)) throw NonFiniteInput("Operator: non-finite entry");
}

Operator Operator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return Operator(Matrix::Identity(n, n));
}

Operator Operator::zero(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return Operator(Matrix::Zero(n, n));
}

Vector Operator::apply(const Vector& v) const {
    if (static_cast<std::size_t>(v.size()) != dim())
        throw DimensionMismatch("Operator::apply", dim(), static_cast<std::size_t>(v.size()));
    return m_ * v;
}

Operator& Operator::operator+=(const Operator& rhs) {
    if (rhs.dim() != dim()) throw DimensionMismatch("operator+", dim(), rhs.dim());
    m_ += rhs.m_;
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    if (rhs.dim() != dim()) throw DimensionMismatch("operator-", dim(), rhs.dim());
    m_ -= rhs.m_;
    return *this;
}

Operator& Operator::operator*=(Complex s) {
    m_ *= s;
    return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
    if (lhs.dim() != rhs.dim()) throw DimensionMismatch("operator*", lhs.dim(), rhs.dim());
    Matrix out(lhs.m_.rows(), rhs.m_.cols());
    out.noalias() = lhs.m_ * rhs.m_;
    return Operator(std::move(out));
}

Operator annihilator(const FockSpace& space) {
    const auto n = static_cast<Eigen::Index>(space.levels());
    Matrix b = Matrix::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) b(k - 1, k) = std::sqrt(static_cast<double>(k));
    return Operator(std::move(b));
}

Operator number_operator(const FockSpace& space) {
    const auto n = static_cast<Eigen::Index>(space.levels());
    Matrix d = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) d(k, k) = static_cast<double>(k);
    return Operator(std::move(d));
}

Operator adjoint(const Operator& a) { return Operator(a.matrix().adjoint()); }

Operator commutator(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("commutator", a.dim(), b.dim());
    Matrix out(a.matrix().rows(), a.matrix().cols());
    out.noalias() = a.matrix() * b.matrix();
    out.noalias() -= b.matrix() * a.matrix();
    return Operator(std::move(out));
}

Operator tensor(const Operator& a, const Operator& b) {
    const Matrix& am = a.matrix();
    const Matrix& bm = b.matrix();
    const Eigen::Index na = am.rows();
    const Eigen::Index nb = bm.rows();
    Matrix out = Matrix::Zero(na * nb, na * nb);
    for (Eigen::Index j = 0; j < na; ++j) {
        for (Eigen::Index i = 0; i < na; ++i) {
            const Complex s = am(i, j);
            if (s == Complex{}) continue;
            out.block(i * nb, j * nb, nb, nb) = s * bm;
        }
    }
    return Operator(std::move(out));
}

std::vector<std::vector<Eigen::Index>> invariant_blocks(const Matrix& m) {
    const Eigen::Index n = m.rows();
    DisjointSets sets(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != j && m(i, j) != Complex{}) sets.unite(i, j);
        }
    }
    std::vector<std::vector<Eigen::Index>> blocks;
    std::vector<Eigen::Index> slot(static_cast<std::size_t>(n), -1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index root = sets.find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<Eigen::Index>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(slot[root])].push_back(i);
    }
    return blocks;
}

Operator expm(const Operator& a) {
    const Matrix& m = a.matrix();
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (const auto& idx : invariant_blocks(m)) scatter(out, idx, expm_block(gather(m, idx)));
    return Operator(std::move(out));
}

Vector expm_apply(const Operator& a, const Vector& v) {
    if (static_cast<std::size_t>(v.size()) != a.dim())
        throw DimensionMismatch("expm_apply", a.dim(), static_cast<std::size_t>(v.size()));
    const Matrix& m = a.matrix();
    Vector out = Vector::Zero(v.size());
    for (const auto& idx : invariant_blocks(m)) {
        const auto k = static_cast<Eigen::Index>(idx.size());
        Vector part(k);
        for (Eigen::Index r = 0; r < k; ++r) part(r) = v(idx[r]);
        if (part.isZero(0.0)) continue;
        const Vector moved = expm_block(gather(m, idx)) * part;
        for (Eigen::Index r = 0; r < k; ++r) out(idx[r]) = moved(r);
    }
    return out;
}

EigenSystem hermitian_eig(const Operator& h) {
    const Matrix& raw = h.matrix();
    const double scale = raw.norm();
    const double skew = (raw - raw.adjoint()).norm();
    if (skew > kHermiticityTol * scale)
        throw NotHermitian("hermitian_eig: ||h - h^dagger|| = " + std::to_string(skew));
    const Matrix sym = 0.5 * (raw + raw.adjoint());
    const Eigen::Index n = sym.rows();

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n));
    Matrix vecs = Matrix::Zero(n, n);
    Eigen::Index col = 0;
    for (const auto& idx : invariant_blocks(sym)) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(gather(sym, idx));
        const auto k = static_cast<Eigen::Index>(idx.size());
        for (Eigen::Index c = 0; c < k; ++c, ++col) {
            values.push_back(es.eigenvalues()(c));
            for (Eigen::Index r = 0; r < k; ++r) vecs(idx[r], col) = es.eigenvectors()(r, c);
        }
    }

    // Phase fixing: first component above 1e-12 (relative) becomes real positive.
    std::vector<Eigen::Index> lead(static_cast<std::size_t>(n), 0);
    for (Eigen::Index c = 0; c < n; ++c) {
        const double peak = vecs.col(c).cwiseAbs().maxCoeff();
        Eigen::Index r = 0;
        while (r < n && std::abs(vecs(r, c)) <= 1e-12 * peak) ++r;
        if (r == n) r = 0;
        lead[static_cast<std::size_t>(c)] = r;
        const Complex z = vecs(r, c);
        if (std::abs(z) > 0.0) vecs.col(c) *= std::conj(z) / std::abs(z);
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        const double ea = values[static_cast<std::size_t>(a)];
        const double eb = values[static_cast<std::size_t>(b)];
        if (ea != eb) return ea < eb;
        return lead[static_cast<std::size_t>(a)] < lead[static_cast<std::size_t>(b)];
    });

    EigenSystem out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.values[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(src)];
        out.vectors.col(k) = vecs.col(src);
    }
    return out;
}

}  // namespace moyal
