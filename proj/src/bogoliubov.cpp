#include "moyal/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "moyal/blocks.hpp"
#include "moyal/errors.hpp"

namespace moyal {

namespace {

constexpr double kTailBound = 1e-14;

Vector vacuum(const HSSpace& space) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
    v(0) = 1.0;
    return v;
}

double real_dot(const Matrix& a, const Matrix& b) {
    return (a.array().conjugate() * b.array()).sum().real();
}

}  // namespace

double phi_for(const OscParams& p, double theta, Model model) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidParameter("theta must be positive");
    switch (model) {
        case Model::h2: {
            const AlphaBeta ab = alpha_beta(p, theta);
            if (std::abs(ab.beta) <= 1e-15 * ab.alpha) return 0.0;
            return 0.5 * std::log(p.mu * p.omega * theta / 2.0);
        }
        case Model::h3: {
            const auto mf = renormalize(p, theta);
            const double phi = 0.5 * std::log(mf.mu_prime * mf.omega_prime * theta / 2.0);
            if (!(phi < 0.0)) throw std::logic_error("phi_for: h3 angle must be negative");
            return phi;
        }
        case Model::commutative:
        case Model::h1: break;
    }
    throw InvalidParameter("phi_for: model '" + to_string(model) + "' has no Bogoliubov angle");
}

AlphaBeta primed_ladder_coefficients(const AlphaBeta& ab, double phi) {
    const double c = std::cosh(2.0 * phi);
    const double s = std::sinh(2.0 * phi);
    return {ab.alpha * c - ab.beta * s, ab.beta * c - ab.alpha * s};
}

Operator dilatation(const HSSpace& space) {
    const Operator b = annihilator(space.fock());
    const Operator bd = adjoint(b);
    // B_L^dag B_R: psi -> b^dag psi b; B_L B_R^dag: psi -> b psi b^dag.
    return kI * (sandwich(bd, b, space) - sandwich(b, bd, space));
}

Operator dilatation_quadratic(const RepOperators& rep) {
    const Operator sum = rep.X1c * rep.P1 + rep.P1 * rep.X1c + rep.X2c * rep.P2 + rep.P2 * rep.X2c;
    return 0.5 * sum;
}

DilatationCalibration calibrate_dilatation(const HSSpace& space) {
    const RepOperators rep = build_rep(space);
    const Operator D = dilatation(space);
    const BasisBlock safe = BasisBlock::safe(space.levels());

    // First order: U X U^dag = X - i c phi [D, X] + ..., so c K = X with K = -i[D, X].
    double kx = 0.0;
    double kk = 0.0;
    for (const Operator* x : {&rep.X1c, &rep.X2c}) {
        const Matrix K = safe.restrict((-kI * commutator(D, *x)).matrix());
        const Matrix X = safe.restrict(x->matrix());
        kx += real_dot(K, X);
        kk += real_dot(K, K);
    }
    DilatationCalibration cal{kx / kk, 0.0, 0.0};
    cal.c = 0.5 * std::round(2.0 * cal.fitted);
    if (std::abs(cal.c - cal.fitted) > 1e-8 || cal.c == 0.0)
        throw std::runtime_error("calibrate_dilatation: fitted constant " + std::to_string(cal.fitted) +
                                 " is not a half-integer");

    // Central difference normalized by sinh h, exact for the right scaling law.
    const double h = 1e-3;
    const Operator up = expm((-kI * cal.c * h) * D);
    const Operator down = expm((kI * cal.c * h) * D);
    const BasisBlock low = BasisBlock::low_labels(space.levels(), space.levels() / 3);
    for (const Operator* x : {&rep.X1c, &rep.X2c}) {
        const Operator slope = (0.5 / std::sinh(h)) * (up * (*x) * adjoint(up) - down * (*x) * adjoint(down));
        cal.slope_residual = std::max(cal.slope_residual, low.distance(slope, *x) / low.norm(*x));
    }
    return cal;
}

double dilatation_constant() {
    static const double c = [] {
        const auto cal = calibrate_dilatation(HSSpace(ModelConfig(1.0, 12)));
        if (cal.slope_residual > 1e-8)
            throw std::runtime_error("dilatation calibration: slope mismatch " + std::to_string(cal.slope_residual));
        return cal.c;
    }();
    return c;
}

Operator dilatation_unitary(const HSSpace& space, double phi) {
    return expm((-kI * dilatation_constant() * phi) * dilatation(space));
}

Operator squeeze_generator(const HSSpace& space) {
    const Operator b = annihilator(space.fock());
    const Operator bd = adjoint(b);
    return sandwich(bd, b, space) - sandwich(b, bd, space);
}

double ground_state_exponent_sign() {
    static const double sign = [] {
        const HSSpace space(ModelConfig(1.0, 8));
        const double phi = 1e-3;
        const Operator G = squeeze_generator(space);
        const Vector closed = ground_state_closed(space, phi).psi0.amplitudes();
        const double plus = (expm_apply((-phi) * G, vacuum(space)) - closed).norm();
        const double minus = (expm_apply(phi * G, vacuum(space)) - closed).norm();
        const double best = std::min(plus, minus);
        if (best > 1e-12 || std::max(plus, minus) < 1e-6)
            throw std::runtime_error("ground-state exponent calibration failed");
        return plus <= minus ? 1.0 : -1.0;
    }();
    return sign;
}

std::array<Operator, 2> bogoliubov_pair(const RepOperators& rep, double phi) {
    const double c = std::cosh(phi);
    const double s = std::sinh(phi);
    return {c * rep.B_L + s * rep.B_R, s * rep.B_L + c * rep.B_R};
}

BogoliubovFrame bogoliubov_frame(const HSSpace& space, const RepOperators& rep, double phi) {
    auto pair = bogoliubov_pair(rep, phi);
    Eigen::Matrix2d t;
    t << std::cosh(phi), std::sinh(phi), std::sinh(phi), std::cosh(phi);
    return {phi, std::move(pair[0]), std::move(pair[1]), dilatation_unitary(space, phi), dilatation_constant(), t};
}

std::vector<double> GroundState::operator_eigenvalues() const {
    const Matrix psi = psi0.as_matrix();
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (psi + psi.adjoint()), Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::stable_sort(ev.begin(), ev.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });
    return ev;
}

bool GroundState::alternating() const {
    const auto ev = operator_eigenvalues();
    if (ev.empty()) return false;
    const double floor = 1e-12 * std::abs(ev.front());
    std::size_t significant = 0;
    for (std::size_t k = 0; k < ev.size() && std::abs(ev[k]) > floor; ++k) {
        if (k > 0 && ev[k] * ev[k - 1] >= 0.0) return false;
        ++significant;
    }
    return significant >= 2;
}

std::size_t required_levels(double phi) {
    const double t = std::abs(std::tanh(phi));
    if (!(t < 1.0)) throw InvalidParameter("required_levels: |tanh phi| must be below 1");
    if (t == 0.0) return 1;
    auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(std::log(kTailBound) / (2.0 * std::log(t)))));
    while (n > 1 && std::pow(t, 2.0 * static_cast<double>(n - 1)) <= kTailBound) --n;
    while (std::pow(t, 2.0 * static_cast<double>(n)) > kTailBound) ++n;
    return n;
}

namespace {

GroundState make_ground(const HSSpace& space, double phi, Vector amps) {
    const double norm = amps.norm();
    const double t = std::abs(std::tanh(phi));
    const double gamma = t == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(t);
    return {HSState(space, std::move(amps)), phi, gamma, norm};
}

void require_tail_bound(const HSSpace& space, double phi) {
    const std::size_t need = required_levels(phi);
    if (space.levels() < need) throw TailBoundUnmet(space.levels(), need);
}

}  // namespace

GroundState ground_state_closed(const HSSpace& space, double phi) {
    require_tail_bound(space, phi);
    const double ratio = -std::tanh(phi);
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
    double d = 1.0 / std::cosh(phi);
    for (std::size_t m = 0; m < space.levels(); ++m) {
        amps(static_cast<Eigen::Index>(space.index(m, m))) = d;
        d *= ratio;
    }
    return make_ground(space, phi, std::move(amps));
}

GroundState ground_state_unitary(const HSSpace& space, double phi) {
    require_tail_bound(space, phi);
    const Operator gen = (-ground_state_exponent_sign() * phi) * squeeze_generator(space);
    return make_ground(space, phi, expm_apply(gen, vacuum(space)));
}

std::array<Operator, 2> c_operators(const RepOperators& rep, const OscParams& p) {
    const double mw = p.mu * p.omega;
    const double k = 1.0 / std::sqrt(2.0 * mw);
    return {k * (mw * rep.X1c + kI * rep.P1), k * (mw * rep.X2c + kI * rep.P2)};
}

std::array<Operator, 2> c_operators_primed(const BogoliubovFrame& frame) {
    const double r = 1.0 / std::sqrt(2.0);
    const Operator BRd = adjoint(frame.B_R_prime);
    return {r * (frame.B_L_prime + BRd), (-kI * r) * (frame.B_L_prime - BRd)};
}

std::array<double, 2> c_annihilation(const HSState& psi, const OscParams& p, double theta) {
    const Matrix m = psi.as_matrix();
    const Matrix b = annihilator(FockSpace(psi.levels())).matrix();
    const double s = std::sqrt(theta / 2.0);
    const Matrix x1 = s * (b + b.adjoint());
    const Matrix x2 = (kI * s) * (b.adjoint() - b);
    // X_i^c psi = (x_i psi + psi x_i)/2, P_1 psi = (x2 psi - psi x2)/theta, P_2 psi = -(x1 psi - psi x1)/theta.
    const Matrix x1c = 0.5 * (x1 * m + m * x1);
    const Matrix x2c = 0.5 * (x2 * m + m * x2);
    const Matrix p1 = (x2 * m - m * x2) / theta;
    const Matrix p2 = -(x1 * m - m * x1) / theta;
    const double mw = p.mu * p.omega;
    const double k = 1.0 / std::sqrt(2.0 * mw);
    return {(k * (mw * x1c + kI * p1)).norm(), (k * (mw * x2c + kI * p2)).norm()};
}

PrimedAnnihilation primed_annihilation(const GroundState& psi0) {
    const std::size_t n = psi0.psi0.levels();
    const Matrix psi = psi0.psi0.as_matrix();
    const Matrix b = annihilator(FockSpace(n)).matrix();
    const Matrix bd = b.adjoint();
    const double c = std::cosh(psi0.phi);
    const double s = std::sinh(psi0.phi);
    const Matrix left = c * b * psi + s * psi * b;       // B_L' psi
    const Matrix right_dag = s * bd * psi + c * psi * bd;  // B_R'^dag psi
    const double r = 1.0 / std::sqrt(2.0);
    return {left.norm(), right_dag.norm(), (r * (left + right_dag)).norm(), (r * (left - right_dag)).norm()};
}

IntertwinerResult intertwiner_check(const GroundState& psi0, double lambda_plus, double theta) {
    const std::size_t n = psi0.psi0.levels();
    const Matrix psi = psi0.psi0.as_matrix();
    const Matrix b = annihilator(FockSpace(n)).matrix();
    const Matrix bd = b.adjoint();
    const double t = std::tanh(psi0.phi);
    const auto k = static_cast<Eigen::Index>(n - 1);
    auto safe = [k](const Matrix& m) { return m.topLeftCorner(k, k).norm(); };
    return {safe((1.0 + theta * lambda_plus) * b * psi - psi * b), safe(b * psi + t * psi * b),
            safe(psi * bd + t * bd * psi)};
}

double LambdaIdentities::max() const {
    return std::max({product_one, product_mw, tanh_one_minus, tanh_ratio, tanh_inverse});
}

LambdaIdentities lambda_identities(const OscParams& p, double theta) {
    const Lambdas l = lambdas(p, theta);
    const double mw2 = p.mu * p.omega * p.mu * p.omega;
    const double t = std::tanh(phi_for(p, theta, Model::h3));
    const double at = std::abs(t);
    return {std::abs((1.0 + theta * l.plus) * (1.0 - theta * l.minus) - 1.0),
            std::abs(l.plus * l.minus - mw2) / mw2,
            std::abs(at - (1.0 - theta * l.minus)),
            std::abs(at - l.minus / l.plus),
            std::abs(at - 1.0 / (1.0 + theta * l.plus)),
            t};
}

}  // namespace moyal
