#include <doctest.h>

#include <cmath>

#include "moyal/bogoliubov.hpp"
#include "moyal/errors.hpp"
#include "moyal/schwinger.hpp"
#include "moyal/spectra.hpp"

using namespace moyal;

namespace {

const OscParams kUnit(1.0, 1.0);

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("grouping levels") {
    const auto g = group_levels({1.0, 2.0, 2.0 + 1e-12, 3.0, 3.0, 3.0 - 1e-13, 4.5});
    REQUIRE(g.size() == 4);
    CHECK(g[0].multiplicity == 1);
    CHECK(g[1].multiplicity == 2);
    CHECK(g[2].multiplicity == 3);
    CHECK(g[2].energy == doctest::Approx(3.0));
    CHECK(g[3].multiplicity == 1);
    CHECK(group_levels({}).empty());
    CHECK(group_levels({2.0, 2.0}).size() == 1);
}

TEST_CASE("trusted label count") {
    CHECK(trusted_label_count(8) == 15);
    CHECK(trusted_label_count(16) == 45);
    CHECK(trusted_label_count(32) == 153);
}

TEST_CASE("h1 degeneracies at N = 16") {
    const SpectrumReport r = model_spectrum(Model::h1, kUnit, 1.0, 16, 45);
    CHECK(r.max_abs_residual <= 1e-12);
    REQUIRE(r.degeneracy_table.size() == 9);
    for (std::size_t k = 0; k < 9; ++k) {
        CHECK(r.degeneracy_table[k].energy == doctest::Approx(static_cast<double>(k + 1)));
        CHECK(r.degeneracy_table[k].multiplicity == k + 1);
    }
}

TEST_CASE("h2 at the critical point") {
    const SpectrumReport r = model_spectrum(Model::h2, critical_point(1.0), 1.0, 32, 15);
    CHECK(r.compared == 15);
    CHECK(r.max_abs_residual <= 1e-8);
    for (std::size_t k = 0; k < r.compared; ++k) {
        const double e = r.analytic[k];
        CHECK(std::abs(e / 2.0 - std::round(e / 2.0)) <= 1e-12);  // 2(2j + 1)
    }
    REQUIRE(r.degeneracy_table.size() == 5);
    for (std::size_t k = 0; k < 5; ++k) CHECK(r.degeneracy_table[k].multiplicity == k + 1);
}

TEST_CASE("h3 at N = 32") {
    const SpectrumReport r = model_spectrum(Model::h3, kUnit, 1.0, 32, 15);
    CHECK(std::abs(r.numeric[0] - std::sqrt(5.0) / 2.0) <= 1e-8);
    CHECK(r.max_abs_residual <= 1e-8);
    const Lambdas l = lambdas(kUnit, 1.0);
    const SpectrumFormula f = analytic_spectrum(Model::h3, kUnit, 1.0);
    CHECK(std::abs(f.energy(2, 1) - (5.0 * l.plus + 3.0 * l.minus) / 2.0) <= 1e-12);

    const SpectrumReport d = model_spectrum(Model::h3, kUnit, 1.0, 32);
    CHECK(d.compared >= 15);
    CHECK(d.max_abs_residual <= 1e-8);
    for (std::size_t k = 0; k + 1 < d.compared; ++k) CHECK(d.numeric[k] <= d.numeric[k + 1]);
    CHECK(d.numeric.size() == d.compared);
    CHECK(d.analytic.size() == d.compared);
}

TEST_CASE("report serialization") {
    const SpectrumReport r = model_spectrum(Model::commutative, kUnit, 1.0, 8, 6);
    CHECK(r.numeric[1] == doctest::Approx(2.0));
    const auto j = r.to_json();
    CHECK(j["compared_levels"] == 6);
    CHECK(j["numeric"].size() == 6);
    CHECK(SpectrumReport::csv_header() ==
          std::vector<std::string>{"model", "mu", "omega", "theta", "N", "level_index", "numeric", "analytic",
                                   "residual"});
    const auto rows = r.csv_rows();
    REQUIRE(rows.size() == 6);
    CHECK(rows[0][0] == "commutative");
    CHECK(rows[0][5] == "0");
}

TEST_CASE("no trusted levels") {
    CHECK_THROWS_AS(model_spectrum(Model::h2, OscParams(0.5, 3.0), 0.2, 16), NoTrustedLevels);
    CHECK_THROWS_AS(compare_spectrum(hermitian_eig(h1(HSSpace(ModelConfig(1.0, 8)))),
                                     analytic_spectrum(Model::h1, kUnit, 1.0), 8, 0),
                    InvalidParameter);
}

TEST_CASE("convergence in N") {
    const std::vector<std::size_t> ns{12, 16, 24, 32};
    const auto a = convergence_study(Model::h2, kUnit, 1.0, ns, 10);
    REQUIRE(a.size() == 4);
    CHECK(a.back().max_abs_residual <= 1e-8);
    CHECK(non_increasing(a));
    for (const auto& p : a) CHECK(p.compared == 10);

    const auto c = convergence_study(Model::h2, critical_point(1.0), 1.0, ns);
    for (const auto& p : c) CHECK(p.max_abs_residual <= 1e-12);

    const auto h = convergence_study(Model::h3, kUnit, 1.0, ns);
    CHECK(h.back().max_abs_residual <= 1e-8);
    CHECK(non_increasing(h));

    CHECK_THROWS_AS(convergence_study(Model::h2, kUnit, 1.0, {16, 12}), InvalidParameter);
    CHECK_THROWS_AS(convergence_study(Model::h2, kUnit, 1.0, {6, 12}), InvalidParameter);
    CHECK_FALSE(non_increasing({{8, 3, 1e-3}, {12, 3, 2e-3}}));
}

TEST_CASE("ground overlap") {
    const HSSpace s(ModelConfig(1.0, 32));
    const double phi = phi_for(kUnit, 1.0, Model::h3);
    CHECK(ground_overlap(h3(s, kUnit), ground_state_closed(s, phi)) >= 1.0 - 1e-8);
    const OscParams c = critical_point(1.0);
    CHECK(ground_overlap(h2(s, c), ground_state_closed(s, 0.0)) >= 1.0 - 1e-10);

    const EigenSystem es = hermitian_eig(h_commutative(8, OscParams(1.0, 2.7)));
    const Vector v = es.vector(0);
    CHECK(std::abs(std::abs(v(0)) - 1.0) <= 1e-12);
    CHECK(v.norm() == doctest::Approx(1.0));

    CHECK_THROWS_AS(ground_overlap(Operator::identity(s.dim()), ground_state_closed(s, 0.0)), DegenerateGroundLevel);
}

TEST_CASE("Zeeman splitting") {
    const HSSpace s(ModelConfig(1.0, 32));
    const Operator h = h3(s, kUnit);
    const EigenSystem es = hermitian_eig(h);
    const SU2Generators g = schwinger_noncommutative(s);
    const RenormalizedMassFrequency r = renormalize(kUnit, 1.0);
    const double spacing = r.mu_prime * r.omega_prime * r.omega_prime;
    CHECK(spacing == doctest::Approx(1.0).epsilon(1e-14));
    const ZeemanSplitting z = zeeman_splitting(es, g.J3, spacing, 4);
    REQUIRE(z.multiplets.size() == 5);
    for (const ZeemanMultiplet& m : z.multiplets) CHECK(m.energies.size() == static_cast<std::size_t>(m.two_j + 1));
    CHECK(z.max_spacing_error <= 1e-8);
    CHECK(z.multiplets[2].energies[0] == doctest::Approx(3.0 * r.omega_prime - spacing));
}

}  // TEST_SUITE
