// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "moyal/algebra.hpp"
#include "moyal/blocks.hpp"
#include "moyal/bogoliubov.hpp"
#include "moyal/hilbert_schmidt.hpp"
#include "moyal/oscillators.hpp"
#include "moyal/schwinger.hpp"
#include "moyal/spectra.hpp"
#include "moyal/symmetry.hpp"

using namespace moyal;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

HSSpace space_of(double theta, std::size_t n) { return HSSpace(ModelConfig(theta, n)); }

const OscParams kUnit(1.0, 1.0);

class Outcome {
public:
    explicit Outcome(std::string title) : title_(std::move(title)) {}

    // value <= bound
    void below(const std::string& what, double value, double bound) { add(what, value, bound, value <= bound, "<="); }
    // value > bound
    void above(const std::string& what, double value, double bound) { add(what, value, bound, value > bound, ">"); }
    void require(const std::string& what, bool ok) {
        if (!ok) {
            pass_ = false;
            failures_.push_back(what);
        }
    }
    void note(const std::string& text) { notes_.push_back(text); }

    bool pass() const { return pass_; }
    const std::string& title() const { return title_; }
    std::string details() const {
        std::string s;
        for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + std::string("FAILED ") + f;
        for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
        return s;
    }

private:
    void add(const std::string& what, double value, double bound, bool ok, const char* rel) {
        if (!ok) require(fmt::format("{} = {:.3e} (need {} {:.1e})", what, value, rel, bound), false);
    }

    std::string title_;
    bool pass_ = true;
    std::vector<std::string> failures_, notes_;
};

double diagonal_defect(const Operator& op, std::size_t k, double value) {
    Vector e = Vector::Zero(static_cast<Eigen::Index>(op.dim()));
    e(static_cast<Eigen::Index>(k)) = 1.0;
    return (op.apply(e) - value * e).cwiseAbs().maxCoeff();
}

double max_norm(const SU2Generators& g) { return std::max({g.J1.norm(), g.J2.norm(), g.J3.norm()}); }

Outcome algebra_suite() {
    Outcome o("Heisenberg algebra on the safe block, N=16, theta in {0.5, 1, 2}");
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (double theta : {0.5, 1.0, 2.0})
        for (const RelationCheck& c : heisenberg_suite(space_of(theta, 16))) {
            o.below(fmt::format("{} at theta={}", c.name, theta), c.residual, 1e-12);
            worst = std::max(worst, c.residual);
        }
    const double t = seconds_since(t0);
    o.below("runtime [s]", t, 1.0);
    o.note(fmt::format("max residual {:.2e}, {:.3f} s", worst, t));
    return o;
}

Outcome su2_closure() {
    Outcome o("su(2) closure in three contexts, J3 and J^2 labels, 4x4 Casimir");
    const std::size_t n = 16;
    const HSSpace s = space_of(1.0, n);
    const RepOperators rep = build_rep(s);
    const SU2Generators co = schwinger_commutative(n);
    const SU2Generators nc = schwinger_noncommutative(s, rep);
    const SU2Generators p4 = phase4d_generators();
    const double rc = closure_residual(co), rn = closure_residual(nc), rp = closure_residual(p4);
    o.below("commutative closure / |J|", rc / max_norm(co), 1e-12);
    o.below("noncommutative closure / |J|", rn / max_norm(nc), 1e-12);
    o.require(fmt::format("phase4d closure exact ({:.1e})", rp), rp == 0.0);

    const Operator c = casimir(nc);
    double j3_worst = 0.0, jj_worst = 0.0;
    for (std::size_t k = 0; k < s.dim(); ++k) {
        const auto [m, q] = s.decode(k);
        if (m + 2 > n || q + 2 > n) continue;
        const JLabel l{m, q};
        j3_worst = std::max(j3_worst, diagonal_defect(nc.J3, k, l.j3()));
        jj_worst = std::max(jj_worst, diagonal_defect(c, k, l.j() * (l.j() + 1.0)));
    }
    o.below("J3 label defect", j3_worst, 1e-12);
    o.below("J^2 label defect", jj_worst, 1e-12);
    const double cas = (casimir(p4).matrix() - 0.75 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff();
    o.require(fmt::format("4x4 Casimir = 3/4 I exactly ({:.1e})", cas), cas == 0.0);
    o.note(fmt::format("closure {:.1e}/{:.1e}/{:.1e}, labels {:.1e}/{:.1e}", rc, rn, rp, j3_worst, jj_worst));
    return o;
}

Outcome covariance() {
    Outcome o("Covariance of (x1c, x2c, p1/2, p2/2) vs non-covariance of X, theta=1, N=24, 20 random lambda");
    const HSSpace s = space_of(1.0, 24);
    const RepOperators rep = build_rep(s);
    const SU2Generators g = schwinger_noncommutative(s, rep);
    const auto xi = phase_space_tuple(dimensionless(rep, 1.0));
    const double xnorm = rep.X1.norm();
    std::mt19937_64 rng(20241014);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> radius(0.0, M_PI);
    double cov = 0.0, j3 = 0.0, generic = 1e300;
    for (int trial = 0; trial < 20; ++trial) {
        Lambda3 lam(normal(rng), normal(rng), normal(rng));
        lam *= radius(rng) / lam.norm();
        const CovarianceResult c = covariance_residual(g, xi, lam);
        cov = std::max({cov, c.max_difference, c.max_fit_residual});
        generic = std::min(generic, position_noncovariance(g, rep.X1, rep.X2, lam));
        if (trial % 4 == 0) j3 = std::max(j3, position_noncovariance(g, rep.X1, rep.X2, Lambda3(0.0, 0.0, lam.norm())));
    }
    o.below("tuple covariance residual", cov, 1e-8);
    o.below("X residual under pure J3", j3, 1e-8);
    o.above("X residual under J1/J2 rotations / |X1|", generic / xnorm, 0.01);
    o.note(fmt::format("covariance {:.1e}, X under J3 {:.1e}, X generic min {:.3f}|X1|", cov, j3, generic / xnorm));
    return o;
}

Outcome h2_spectrum() {
    Outcome o("H2 spectrum omega(2j+1), N=32, lowest 15 with full degeneracy");
    const auto t0 = Clock::now();
    struct Point {
        double mu, omega, theta;
    };
    for (const Point& p : {Point{1, 2, 1}, Point{1, 1, 1}, Point{2, 1, 1}, Point{0.5, 3, 0.2}}) {
        const SpectrumReport r = model_spectrum(Model::h2, OscParams(p.mu, p.omega), p.theta, 32, 15);
        const std::string at = fmt::format("({},{},{})", p.mu, p.omega, p.theta);
        o.below("max residual " + at, r.max_abs_residual, 1e-8);
        bool degenerate = r.degeneracy_table.size() == 5;
        for (std::size_t k = 0; degenerate && k < 5; ++k)
            degenerate = r.degeneracy_table[k].multiplicity == k + 1 &&
                         std::abs(r.degeneracy_table[k].energy - p.omega * static_cast<double>(k + 1)) <= 1e-8;
        o.require("degeneracies 1..5 at omega(2j+1) " + at, degenerate);
        o.note(fmt::format("{} residual {:.2e}", at, r.max_abs_residual));
    }
    const double t = seconds_since(t0);
    o.below("runtime [s]", t, 10.0);
    o.note(fmt::format("{:.2f} s", t));
    return o;
}

Outcome h3_spectrum() {
    Outcome o("H3 spectrum at mu=omega=theta=1, N=32: ground sqrt(5)/2, lowest 15 against both closed forms");
    const SpectrumReport r = model_spectrum(Model::h3, kUnit, 1.0, 32, 15);
    o.below("|E0 - sqrt(5)/2|", std::abs(r.numeric[0] - std::sqrt(5.0) / 2.0), 1e-8);
    o.below("max residual (lambda form)", r.max_abs_residual, 1e-8);

    const SpectrumFormula f = analytic_spectrum(Model::h3, kUnit, 1.0);
    std::vector<double> jj;
    for (std::size_t m = 0; m < 16; ++m)
        for (std::size_t n = 0; m + n < 16; ++n)
            jj.push_back(f.energy_jj3(0.5 * static_cast<double>(m + n), 0.5 * (double(m) - double(n))));
    std::sort(jj.begin(), jj.end());
    double jres = 0.0, forms = 0.0;
    for (std::size_t k = 0; k < 15; ++k) {
        jres = std::max(jres, std::abs(r.numeric[k] - jj[k]));
        forms = std::max(forms, std::abs(r.analytic[k] - jj[k]));
    }
    o.below("max residual (j, j3 form)", jres, 1e-8);
    o.below("closed forms against each other", forms, 1e-12);
    const Lambdas l = lambdas(kUnit, 1.0);
    const RenormalizedMassFrequency q = renormalize(kUnit, 1.0);
    o.below("omega' - (l+ + l-)/(2 mu)", std::abs(q.omega_prime - (l.plus + l.minus) / 2.0), 1e-12);
    o.below("theta mu' omega'^2 - (l+ - l-)/mu", std::abs(q.mu_prime * q.omega_prime * q.omega_prime - (l.plus - l.minus)),
            1e-12);
    o.note(fmt::format("E0 = {:.16g}, residuals {:.1e}/{:.1e}", r.numeric[0], r.max_abs_residual, jres));
    return o;
}

Outcome critical_point_checks() {
    Outcome o("Critical point theta in {0.25, 1, 4}: phi = 0, C_i |0><0| = 0, ground overlap with |0><0|");
    for (double theta : {0.25, 1.0, 4.0}) {
        const OscParams p = critical_point(theta);
        const HSSpace s = space_of(theta, 32);
        const double phi = phi_for(p, theta, Model::h2);
        o.require(fmt::format("phi = 0 at theta={} (got {:.1e})", theta, phi), phi == 0.0);
        const GroundState vac = ground_state_closed(s, 0.0);
        const auto c = c_annihilation(vac.psi0, p, theta);
        o.below(fmt::format("|C1 vac| theta={}", theta), c[0], 1e-12);
        o.below(fmt::format("|C2 vac| theta={}", theta), c[1], 1e-12);
        const double ov = ground_overlap(h2(s, p), vac);
        o.below(fmt::format("1 - overlap theta={}", theta), 1.0 - ov, 1e-10);
        o.note(fmt::format("theta={}: C {:.1e}/{:.1e}, 1-overlap {:.1e}", theta, c[0], c[1], 1.0 - ov));
    }
    return o;
}

Outcome ground_state() {
    Outcome o("Ground state at mu=omega=theta=1, N=48: closed vs unitary, B_L', intertwiner, norm, sign alternation");
    const HSSpace s = space_of(1.0, 48);
    const double phi = phi_for(kUnit, 1.0, Model::h3);
    o.below("tail tanh^(2N) phi", std::pow(std::tanh(phi), 96.0), 1e-14);
    const GroundState closed = ground_state_closed(s, phi);
    const GroundState unitary = ground_state_unitary(s, phi);
    const double diff = (closed.psi0.amplitudes() - unitary.psi0.amplitudes()).norm();
    const PrimedAnnihilation a = primed_annihilation(closed);
    const IntertwinerResult tw = intertwiner_check(closed, lambdas(kUnit, 1.0).plus, 1.0);
    o.below("|psi_closed - psi_unitary|", diff, 1e-10);
    o.below("|B_L' psi0|", a.B_L_prime, 1e-10);
    o.below("(1 + theta l+) b psi0 - psi0 b", tw.lambda_relation, 1e-10);
    o.below("|(psi0|psi0) - 1|", std::abs(closed.norm * closed.norm - 1.0), 1e-10);
    const auto ev = closed.operator_eigenvalues();
    o.require(fmt::format("operator eigenvalues alternate in sign (first {:.4f}, {:.4f}, {:.4f}; tanh phi = {:.7f})",
                          ev[0], ev[1], ev[2], std::tanh(phi)),
              closed.alternating());
    o.note(fmt::format("diff {:.1e}, B_L' {:.1e}, intertwiner {:.1e}", diff, a.B_L_prime, tw.lambda_relation));
    return o;
}

Outcome lambda_grid() {
    Outcome o("lambda identities on a 5x5x3 (mu, omega, theta) grid");
    double product_one = 0.0, product_mw = 0.0, tanh_one = 0.0, ratio = 0.0;
    for (double mu : {0.25, 0.5, 1.0, 2.0, 4.0})
        for (double omega : {0.25, 0.5, 1.0, 2.0, 4.0})
            for (double theta : {0.1, 1.0, 10.0}) {
                const LambdaIdentities id = lambda_identities(OscParams(mu, omega), theta);
                product_one = std::max(product_one, id.product_one);
                product_mw = std::max(product_mw, id.product_mw);
                tanh_one = std::max(tanh_one, id.tanh_one_minus);
                ratio = std::max(ratio, id.tanh_ratio);
            }
    o.below("(1 + theta l+)(1 - theta l-) - 1", product_one, 1e-12);
    o.below("l+ l- / (mu omega)^2 - 1", product_mw, 1e-12);
    o.below("|tanh phi| - (1 - theta l-)", tanh_one, 1e-12);
    o.below("|tanh phi| - l-/l+", ratio, 1e-12);
    o.note(fmt::format("max {:.1e}/{:.1e}/{:.1e}/{:.1e}", product_one, product_mw, tanh_one, ratio));
    return o;
}

Outcome symmetry_breaking() {
    Outcome o("SU(2) and time reversal: H1, H2 invariant, H3 only under J3, Zeeman term responsible");
    const HSSpace s = space_of(1.0, 16);
    const RepOperators rep = build_rep(s);
    const SU2Generators g = schwinger_noncommutative(s, rep);

    const SymmetryReport a = time_reversal_suite(s, rep, g, kUnit, Model::h1);
    for (int i = 0; i < 3; ++i) o.below(fmt::format("[H1, J{}] / |H1|", i + 1), a.su2_residuals[i] / a.hamiltonian_norm, 1e-10);

    const SymmetryReport b = time_reversal_suite(s, rep, g, kUnit, Model::h2);
    for (int i = 0; i < 3; ++i)
        o.below(fmt::format("[H2, J{}'] / |H2|", i + 1), b.su2_frame_residuals[i] / b.hamiltonian_norm, 1e-10);

    const SymmetryReport c = time_reversal_suite(s, rep, g, kUnit, Model::h3);
    const double hn = c.hamiltonian_norm;
    o.below("[H3, J3] / |H3|", c.su2_residuals[2] / hn, 1e-10);
    o.above("[H3, J1] / |H3|", c.su2_residuals[0] / hn, 0.01);
    o.above("[H3, J2] / |H3|", c.su2_residuals[1] / hn, 0.01);
    o.below("Theta H3 Theta^-1 - H3 + 2 mu theta omega^2 J3, / |H3|", c.zeeman_difference_residual / hn, 1e-12);
    for (int i = 0; i < 3; ++i)
        o.below(fmt::format("[H3 - Zeeman, J{}'] / |H3|", i + 1), c.su2_without_zeeman[i] / hn, 1e-10);
    o.below("Theta-odd part of H3 - Zeeman, / |H3|", c.theta_without_zeeman / hn, 1e-12);
    o.note(fmt::format("H2 against unrotated J1, J2: {:.2f}, {:.2f} of |H2|", b.su2_residuals[0] / b.hamiltonian_norm,
                       b.su2_residuals[1] / b.hamiltonian_norm));
    o.note(fmt::format("H3 breaking J1 {:.2f}, Theta {:.2f} of |H3|", c.su2_residuals[0] / hn, c.theta_breaking / hn));
    return o;
}

Outcome zeeman() {
    Outcome o("Zeeman splitting of H3 multiplets at mu=omega=theta=1, spacing theta mu' omega'^2 = 1");
    const std::size_t n = 32;
    const HSSpace s = space_of(1.0, n);
    const EigenSystem es = hermitian_eig(h3(s, kUnit));
    const SU2Generators g = schwinger_noncommutative(s);
    const RenormalizedMassFrequency r = renormalize(kUnit, 1.0);
    const double spacing = r.mu_prime * r.omega_prime * r.omega_prime;
    o.below("|spacing - 1|", std::abs(spacing - 1.0), 1e-8);
    const ZeemanSplitting z = zeeman_splitting(es, g.J3, spacing, 8);
    bool complete = z.multiplets.size() == 9;
    for (const ZeemanMultiplet& m : z.multiplets)
        complete = complete && m.energies.size() == static_cast<std::size_t>(m.two_j + 1);
    o.require("multiplets 2j = 0..8 each with 2j+1 levels", complete);
    o.below("max spacing error", z.max_spacing_error, 1e-8);
    o.note(fmt::format("spacing {:.16g}, max error {:.1e} over 2j <= 8", spacing, z.max_spacing_error));
    return o;
}

Outcome convergence() {
    Outcome o("Convergence of the lowest 10 H3 levels over N in {12, 16, 24, 32}");
    const auto study = convergence_study(Model::h3, kUnit, 1.0, {12, 16, 24, 32}, 10);
    o.below("residual at N=32", study.back().max_abs_residual, 1e-8);
    o.require("non-increasing within 1e-10", non_increasing(study, 1e-10));
    std::string pts;
    for (const auto& p : study) pts += fmt::format("{}N={}:{:.1e}", pts.empty() ? "" : " ", p.levels, p.max_abs_residual);
    o.note(pts);
    return o;
}

}  // namespace

int main() {
    using Check = Outcome (*)();
    const Check checks[] = {algebra_suite, su2_closure, covariance, h2_spectrum, h3_spectrum, critical_point_checks,
                            ground_state,  lambda_grid, symmetry_breaking, zeeman, convergence};
    int failed = 0;
    int index = 0;
    for (Check c : checks) {
        ++index;
        const auto t0 = Clock::now();
        const Outcome o = c();
        failed += o.pass() ? 0 : 1;
        fmt::print("{} {:2d} {} ({:.2f} s)\n    {}\n", o.pass() ? "PASS" : "FAIL", index, o.title(), seconds_since(t0),
                   o.details());
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria pass\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
