#include "moyal/symmetry.hpp"

#include <cmath>

#include "moyal/blocks.hpp"
#include "moyal/bogoliubov.hpp"
#include "moyal/errors.hpp"

namespace moyal {

HSState theta_apply(const HSSpace& space, const HSState& psi) {
    if (psi.levels() != space.levels()) throw DimensionMismatch("theta_apply", space.levels(), psi.levels());
    const std::size_t n = psi.levels();
    const Vector& a = psi.amplitudes();
    Vector out(a.size());
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k)
            out(static_cast<Eigen::Index>(m * n + k)) = std::conj(a(static_cast<Eigen::Index>(k * n + m)));
    return HSState(space, std::move(out));
}

Operator swap_permutation(std::size_t levels) {
    const auto n = static_cast<Eigen::Index>(levels);
    Matrix s = Matrix::Zero(n * n, n * n);
    for (Eigen::Index m = 0; m < n; ++m)
        for (Eigen::Index k = 0; k < n; ++k) s(k * n + m, m * n + k) = 1.0;
    return Operator(std::move(s));
}

Operator theta_conjugate(const Operator& op) {
    const auto dim = static_cast<Eigen::Index>(op.dim());
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(dim))));
    if (n * n != dim) throw DimensionMismatch("theta_conjugate", static_cast<std::size_t>(n * n), op.dim());
    // S conj(O) S as an index permutation.
    const Matrix& o = op.matrix();
    Matrix out(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        const Eigen::Index sc = (c % n) * n + c / n;
        for (Eigen::Index r = 0; r < dim; ++r) out(r, c) = std::conj(o((r % n) * n + r / n, sc));
    }
    return Operator(std::move(out));
}

std::array<double, 3> su2_commutant(const Operator& h, const SU2Generators& gens) {
    if (h.dim() != gens.J1.dim()) throw DimensionMismatch("su2_commutant", gens.J1.dim(), h.dim());
    const BasisBlock block = gens.safe_block();
    return {block.norm(commutator(h, gens.J1)), block.norm(commutator(h, gens.J2)),
            block.norm(commutator(h, gens.J3))};
}

SymmetryReport time_reversal_suite(const HSSpace& space, const RepOperators& rep, const SU2Generators& gens,
                                   const OscParams& p, Model model) {
    if (gens.context != GeneratorContext::noncommutative)
        throw InvalidParameter("time_reversal_suite: needs noncommutative generators");
    if (gens.J1.dim() != space.dim()) throw DimensionMismatch("time_reversal_suite", space.dim(), gens.J1.dim());
    if (model == Model::commutative) throw InvalidParameter("time_reversal_suite: model must act on H_q");
    const double theta = space.theta();
    const BasisBlock safe = BasisBlock::safe(space.levels());
    auto dist = [&](const Operator& a, const Operator& b) { return safe.distance(a, b); };
    auto tc = [](const Operator& o) { return theta_conjugate(o); };

    SymmetryReport r{model, p, theta, space.levels(), 0.0, {}, 0.0, {}, {}, 0.0, 0.0, {}, 0.0};
    auto rule = [&](const char* name, double v) { r.time_reversal.emplace_back(name, v); };

    rule("B_L->B_Rdag", dist(tc(rep.B_L), rep.B_Rdag));
    rule("B_R->B_Ldag", dist(tc(rep.B_R), rep.B_Ldag));
    rule("B_Ldag->B_R", dist(tc(rep.B_Ldag), rep.B_R));
    rule("B_Rdag->B_L", dist(tc(rep.B_Rdag), rep.B_L));
    rule("X1L->X1L+theta*P2", dist(tc(rep.X1), rep.X1 + theta * rep.P2));
    rule("X2L->X2L-theta*P1", dist(tc(rep.X2), rep.X2 - theta * rep.P1));
    rule("X1R->X1R-theta*P2", dist(tc(rep.X1R), rep.X1R - theta * rep.P2));
    rule("X2R->X2R+theta*P1", dist(tc(rep.X2R), rep.X2R + theta * rep.P1));
    rule("X1c->X1c", dist(tc(rep.X1c), rep.X1c));
    rule("X2c->X2c", dist(tc(rep.X2c), rep.X2c));
    rule("P1->-P1", dist(tc(rep.P1), -rep.P1));
    rule("P2->-P2", dist(tc(rep.P2), -rep.P2));
    rule("J3->-J3", dist(tc(gens.J3), -gens.J3));
    const Operator H2 = h2(space, p);
    rule("H2->H2", dist(tc(H2), H2));

    const ZeemanDecomposition z = zeeman_decomposition(space, p);
    const Operator H3 = z.h2_part + z.zeeman_coeff * z.J3;
    const Operator flipped = tc(H3);
    r.zeeman_difference_residual = dist(flipped - H3, (-2.0 * z.zeeman_coeff) * gens.J3);
    r.theta_breaking = dist(flipped, H3);
    rule("H3->H3-2*mu*theta*omega^2*J3", r.zeeman_difference_residual);

    const Operator& symmetric = z.h2_part;
    const double phi3 = phi_for(p, theta, Model::h3);
    r.su2_without_zeeman = su2_commutant(symmetric, schwinger_primed(space, phi3));
    r.theta_without_zeeman = dist(tc(symmetric), symmetric);

    const Operator H = hamiltonian(model, p, theta, space.levels());
    r.hamiltonian_norm = safe.norm(H);
    r.su2_residuals = su2_commutant(H, gens);
    r.frame_phi = model == Model::h1 ? 0.0 : phi_for(p, theta, model);
    r.su2_frame_residuals = su2_commutant(H, schwinger_primed(space, r.frame_phi));
    return r;
}

nlohmann::ordered_json SymmetryReport::to_json() const {
    nlohmann::ordered_json tr = nlohmann::ordered_json::object();
    for (const auto& [name, v] : time_reversal) tr[name] = v;
    return {
        {"model", to_string(model)},
        {"params", {{"mu", params.mu}, {"omega", params.omega}, {"theta", theta}, {"N", levels}}},
        {"hamiltonian_norm", hamiltonian_norm},
        {"su2_residuals", {su2_residuals[0], su2_residuals[1], su2_residuals[2]}},
        {"frame_phi", frame_phi},
        {"su2_residuals_frame", {su2_frame_residuals[0], su2_frame_residuals[1], su2_frame_residuals[2]}},
        {"time_reversal", tr},
        {"zeeman_difference_residual", zeeman_difference_residual},
        {"theta_breaking", theta_breaking},
        {"su2_residuals_without_zeeman", {su2_without_zeeman[0], su2_without_zeeman[1], su2_without_zeeman[2]}},
        {"theta_residual_without_zeeman", theta_without_zeeman},
    };
}

}  // namespace moyal
