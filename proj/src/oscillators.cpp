#include "moyal/oscillators.hpp"

#include <algorithm>
#include <cmath>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

void require_positive_theta(double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidParameter("theta must be positive");
}

void require_nonnegative_theta(double theta) {
    if (!(theta >= 0.0) || !std::isfinite(theta)) throw InvalidParameter("theta must be non-negative");
}

// B_L^dag B_L + B_R B_R^dag + 1, from exact integer number operators.
Operator shell_number_plus_one(const HSSpace& space) {
    const Operator n = number_operator(space.fock());
    const Operator one = Operator::identity(space.levels());
    return tensor(n, one) + tensor(one, n) + Operator::identity(space.dim());
}

Operator number_difference(const HSSpace& space) {
    const Operator n = number_operator(space.fock());
    const Operator one = Operator::identity(space.levels());
    return tensor(n, one) - tensor(one, n);
}

// B_L^dag B_R + B_R^dag B_L: psi -> b^dag psi b + b psi b^dag.
Operator pair_hopping(const HSSpace& space) {
    const Operator b = annihilator(space.fock());
    const Operator bd = adjoint(b);
    return sandwich(bd, b, space) + sandwich(b, bd, space);
}

}  // namespace

OscParams::OscParams(double mu_, double omega_) : mu(mu_), omega(omega_) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidParameter("mu must be positive");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidParameter("omega must be positive");
}

std::string to_string(Model model) {
    switch (model) {
        case Model::commutative: return "commutative";
        case Model::h1: return "h1";
        case Model::h2: return "h2";
        case Model::h3: return "h3";
    }
    return "unknown";
}

Model parse_model(std::string_view name) {
    if (name == "commutative") return Model::commutative;
    if (name == "h1") return Model::h1;
    if (name == "h2") return Model::h2;
    if (name == "h3") return Model::h3;
    throw InvalidParameter("unknown model '" + std::string(name) + "'");
}

Operator h_commutative(std::size_t levels, const OscParams& p) {
    const FockSpace space(levels);
    const Operator n = number_operator(space);
    const Operator one = Operator::identity(levels);
    return p.omega * (tensor(n, one) + tensor(one, n) + Operator::identity(levels * levels));
}

Operator h_commutative_quadratic(std::size_t levels, const OscParams& p) {
    const FockSpace space(levels);
    const Operator b = annihilator(space);
    const Operator one = Operator::identity(levels);
    const double mw = p.mu * p.omega;
    Operator h = Operator::zero(levels * levels);
    for (const Operator& a : {tensor(b, one), tensor(one, b)}) {
        const Operator ad = adjoint(a);
        const Operator X = (1.0 / std::sqrt(2.0 * mw)) * (a + ad);
        const Operator P = (kI * std::sqrt(mw / 2.0)) * (ad - a);
        h += (0.5 * p.mu * p.omega * p.omega) * (X * X) + (0.5 / p.mu) * (P * P);
    }
    return h;
}

Operator h1(const HSSpace& space) { return shell_number_plus_one(space); }

Operator h1_quadratic(const RepOperators& rep, double theta) {
    require_positive_theta(theta);
    const Operator xc2 = rep.X1c * rep.X1c + rep.X2c * rep.X2c;
    const Operator p2 = rep.P1 * rep.P1 + rep.P2 * rep.P2;
    return (1.0 / theta) * xc2 + (theta / 4.0) * p2;
}

AlphaBeta alpha_beta(const OscParams& p, double theta) {
    require_positive_theta(theta);
    const double a = p.mu * p.omega * p.omega * theta / 4.0;
    const double c = 1.0 / (p.mu * theta);
    return {a + c, a - c};
}

Operator h2(const HSSpace& space, const OscParams& p) {
    const AlphaBeta ab = alpha_beta(p, space.theta());
    return ab.alpha * shell_number_plus_one(space) + ab.beta * pair_hopping(space);
}

Operator h2_quadratic(const RepOperators& rep, const OscParams& p) {
    const Operator xc2 = rep.X1c * rep.X1c + rep.X2c * rep.X2c;
    const Operator p2 = rep.P1 * rep.P1 + rep.P2 * rep.P2;
    return (0.5 / p.mu) * p2 + (0.5 * p.mu * p.omega * p.omega) * xc2;
}

OscParams critical_point(double theta) {
    require_positive_theta(theta);
    const double r = 1.0 / std::sqrt(theta);
    return {r, 2.0 * r};
}

RenormalizedMassFrequency renormalize(const OscParams& p, double theta) {
    require_nonnegative_theta(theta);
    if (theta == 0.0) return {p.mu, p.omega};
    const double s = p.mu * p.omega * theta;
    const double inv_mu = 1.0 / p.mu + p.mu * p.omega * p.omega * theta * theta / 4.0;
    return {1.0 / inv_mu, p.omega * std::sqrt(1.0 + s * s / 4.0)};
}

Lambdas lambdas(const OscParams& p, double theta) {
    require_nonnegative_theta(theta);
    const double mw = p.mu * p.omega;
    const double root = mw * std::sqrt(4.0 + mw * mw * theta * theta);
    const double shift = mw * mw * theta;
    // The difference form loses digits for large shift; recover minus from the
    // product plus * minus = (mu omega)^2.
    const double plus = 0.5 * (root + shift);
    return {plus, mw * mw / plus};
}

RenormalizedParams renormalized_params(const OscParams& p, double theta) {
    require_positive_theta(theta);
    const auto mf = renormalize(p, theta);
    const auto lam = lambdas(p, theta);
    const auto ab = alpha_beta(p, theta);
    const double phi = 0.5 * std::log(mf.mu_prime * mf.omega_prime * theta / 2.0);
    return {mf.mu_prime, mf.omega_prime, lam.plus, lam.minus, ab.alpha, ab.beta, phi};
}

ZeemanDecomposition zeeman_decomposition(const HSSpace& space, const OscParams& p) {
    const auto mf = renormalize(p, space.theta());
    const OscParams primed(mf.mu_prime, mf.omega_prime);
    return {h2(space, primed), p.mu * space.theta() * p.omega * p.omega, 0.5 * number_difference(space), primed};
}

Operator h3(const HSSpace& space, const OscParams& p) {
    const auto z = zeeman_decomposition(space, p);
    return z.h2_part + z.zeeman_coeff * z.J3;
}

Operator h3_direct(const RepOperators& rep, const OscParams& p) {
    const Operator x2 = rep.X1 * rep.X1 + rep.X2 * rep.X2;
    const Operator p2 = rep.P1 * rep.P1 + rep.P2 * rep.P2;
    return (0.5 / p.mu) * p2 + (0.5 * p.mu * p.omega * p.omega) * x2;
}

SpectrumFormula::SpectrumFormula(Model model, const OscParams& p, double theta)
    : model_(model), p_(p), theta_(theta) {
    if (model == Model::commutative)
        require_nonnegative_theta(theta);
    else
        require_positive_theta(theta);
}

double SpectrumFormula::energy(std::size_t m, std::size_t n) const {
    const double dm = static_cast<double>(m);
    const double dn = static_cast<double>(n);
    switch (model_) {
        case Model::commutative:
        case Model::h2: return p_.omega * (dm + dn + 1.0);
        case Model::h1: return dm + dn + 1.0;
        case Model::h3: {
            const auto lam = lambdas(p_, theta_);
            return (lam.plus * (2.0 * dm + 1.0) + lam.minus * (2.0 * dn + 1.0)) / (2.0 * p_.mu);
        }
    }
    throw InvalidParameter("SpectrumFormula: unknown model");
}

double SpectrumFormula::energy_jj3(double j, double j3) const {
    switch (model_) {
        case Model::commutative:
        case Model::h2: return p_.omega * (2.0 * j + 1.0);
        case Model::h1: return 2.0 * j + 1.0;
        case Model::h3: {
            const auto mf = renormalize(p_, theta_);
            return mf.omega_prime * (2.0 * j + 1.0) + theta_ * mf.mu_prime * mf.omega_prime * mf.omega_prime * j3;
        }
    }
    throw InvalidParameter("SpectrumFormula: unknown model");
}

std::vector<double> SpectrumFormula::lowest(std::size_t count) const {
    // E is increasing in m and n separately, so a label among the lowest
    // `count` levels has (m+1)(n+1) <= count.
    std::vector<double> all;
    for (std::size_t m = 0; m < count; ++m)
        for (std::size_t n = 0; (m + 1) * (n + 1) <= count; ++n) all.push_back(energy(m, n));
    std::sort(all.begin(), all.end());
    if (all.size() > count) all.resize(count);
    return all;
}

SpectrumFormula analytic_spectrum(Model model, const OscParams& p, double theta) {
    return SpectrumFormula(model, p, theta);
}

Operator hamiltonian(Model model, const OscParams& p, double theta, std::size_t levels) {
    if (model == Model::commutative) return h_commutative(levels, p);
    const HSSpace space(ModelConfig(theta, levels));
    switch (model) {
        case Model::h1: return h1(space);
        case Model::h2: return h2(space, p);
        case Model::h3: return h3(space, p);
        case Model::commutative: break;
    }
    throw InvalidParameter("hamiltonian: unknown model");
}

}  // namespace moyal
