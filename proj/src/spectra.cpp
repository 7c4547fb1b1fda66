#include "moyal/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "moyal/errors.hpp"
#include "moyal/report_format.hpp"

namespace moyal {

namespace {

// Residual bound r on an eigenvector; the eigenvalue error is of order r^2/gap.
constexpr double kTruncationBoundTol = 1e-5;

bool same_level(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

}  // namespace

std::vector<DegeneracyEntry> group_levels(const std::vector<double>& v) {
    std::vector<DegeneracyEntry> out;
    if (v.empty()) return out;
    double top = 0.0;
    for (double x : v) top = std::max(top, std::abs(x));
    const double floor = 1e-9 * std::max(1.0, top);

    std::vector<double> gaps;
    for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] - v[k - 1] > floor) gaps.push_back(v[k] - v[k - 1]);
    double scale = std::max(1.0, top);
    if (!gaps.empty()) {
        std::sort(gaps.begin(), gaps.end());
        const std::size_t h = gaps.size() / 2;
        scale = gaps.size() % 2 == 1 ? gaps[h] : 0.5 * (gaps[h - 1] + gaps[h]);
    }
    const double tol = 1e-6 * scale;

    double sum = v[0];
    std::size_t count = 1;
    for (std::size_t k = 1; k <= v.size(); ++k) {
        if (k < v.size() && v[k] - v[k - 1] <= tol) {
            sum += v[k];
            ++count;
            continue;
        }
        out.push_back({sum / static_cast<double>(count), count});
        if (k < v.size()) {
            sum = v[k];
            count = 1;
        }
    }
    return out;
}

std::size_t trusted_label_count(std::size_t levels) {
    const std::size_t h = levels / 2;  // h <= N-1, so every shell is complete
    return (h + 1) * (h + 2) / 2;
}

std::vector<double> truncation_bounds(const EigenSystem& es, const Operator& extended, std::size_t levels,
                                      std::size_t count) {
    const std::size_t big = levels + 1;
    if (static_cast<std::size_t>(es.vectors.rows()) != levels * levels)
        throw DimensionMismatch("truncation_bounds", levels * levels, static_cast<std::size_t>(es.vectors.rows()));
    if (extended.dim() != big * big) throw DimensionMismatch("truncation_bounds", big * big, extended.dim());
    count = std::min(count, es.size());
    const auto dim = static_cast<Eigen::Index>(big * big);
    const auto k = static_cast<Eigen::Index>(count);
    Matrix v = Matrix::Zero(dim, k);
    for (std::size_t m = 0; m < levels; ++m)
        for (std::size_t n = 0; n < levels; ++n)
            v.row(static_cast<Eigen::Index>(m * big + n)) =
                es.vectors.row(static_cast<Eigen::Index>(m * levels + n)).head(k);
    Matrix r = extended.matrix() * v;
    std::vector<double> out(count);
    for (Eigen::Index c = 0; c < k; ++c) {
        r.col(c) -= es.values[static_cast<std::size_t>(c)] * v.col(c);
        out[static_cast<std::size_t>(c)] = r.col(c).norm();
    }
    return out;
}

std::size_t default_compared_levels(const SpectrumFormula& formula, const EigenSystem& es, std::size_t levels,
                                    const Operator* extended) {
    const std::size_t trusted = std::min(trusted_label_count(levels), es.size());
    const std::size_t h = levels / 2;

    double outside = formula.energy(0, h + 1);
    for (std::size_t m = 1; m <= h + 1; ++m) outside = std::min(outside, formula.energy(m, h + 1 - m));
    const std::vector<double> analytic = formula.lowest(trusted + 1);
    std::size_t k = 0;
    while (k < trusted && analytic[k] < outside && !same_level(analytic[k], outside)) ++k;

    if (extended != nullptr) {
        const std::vector<double> bound = truncation_bounds(es, *extended, levels, k);
        std::size_t clean = 0;
        while (clean < k && bound[clean] <= kTruncationBoundTol) ++clean;
        k = clean;
    }

    // End on a complete analytic multiplet.
    while (k > 0 && k < analytic.size() && same_level(analytic[k - 1], analytic[k])) --k;
    return k;
}

SpectrumReport compare_spectrum(const EigenSystem& es, const SpectrumFormula& formula, std::size_t levels,
                                std::size_t compared) {
    if (compared == 0) throw InvalidParameter("compare_spectrum: no levels to compare");
    if (compared > es.size()) throw InvalidParameter("compare_spectrum: K exceeds the dimension");
    SpectrumReport r{formula.model(), formula.params().mu, formula.params().omega, formula.theta(), levels,
                     compared, {}, formula.lowest(compared), {}, 0.0, {}};
    r.numeric.assign(es.values.begin(), es.values.begin() + static_cast<std::ptrdiff_t>(compared));
    r.residuals.resize(compared);
    for (std::size_t k = 0; k < compared; ++k) {
        r.residuals[k] = r.numeric[k] - r.analytic[k];
        r.max_abs_residual = std::max(r.max_abs_residual, std::abs(r.residuals[k]));
    }
    r.degeneracy_table = group_levels(r.numeric);
    return r;
}

SpectrumReport diagonalize_compare(const Operator& h, const SpectrumFormula& formula, std::size_t levels,
                                   std::optional<std::size_t> compared, const Operator* extended) {
    if (h.dim() != levels * levels) throw DimensionMismatch("diagonalize_compare", levels * levels, h.dim());
    const EigenSystem es = hermitian_eig(h);
    const std::size_t k = compared ? *compared : default_compared_levels(formula, es, levels, extended);
    if (k == 0)
        throw NoTrustedLevels("diagonalize_compare: no level is clear of the truncation edge at N=" +
                              std::to_string(levels));
    return compare_spectrum(es, formula, levels, k);
}

SpectrumReport model_spectrum(Model model, const OscParams& p, double theta, std::size_t levels,
                              std::optional<std::size_t> compared) {
    const SpectrumFormula formula(model, p, theta);
    const Operator h = hamiltonian(model, p, theta, levels);
    if (compared) return diagonalize_compare(h, formula, levels, compared);
    const Operator extended = hamiltonian(model, p, theta, levels + 1);
    return diagonalize_compare(h, formula, levels, std::nullopt, &extended);
}

nlohmann::ordered_json SpectrumReport::to_json() const {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const auto& d : degeneracy_table) table.push_back({{"energy", d.energy}, {"multiplicity", d.multiplicity}});
    return {
        {"model", to_string(model)},
        {"params", {{"mu", mu}, {"omega", omega}, {"theta", theta}, {"N", levels}}},
        {"compared_levels", compared},
        {"numeric", numeric},
        {"analytic", analytic},
        {"residuals", residuals},
        {"max_abs_residual", max_abs_residual},
        {"degeneracy_table", table},
    };
}

std::vector<std::string> SpectrumReport::csv_header() {
    return {"model", "mu", "omega", "theta", "N", "level_index", "numeric", "analytic", "residual"};
}

std::vector<std::vector<std::string>> SpectrumReport::csv_rows() const {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(compared);
    for (std::size_t k = 0; k < compared; ++k)
        rows.push_back({to_string(model), format_double(mu), format_double(omega), format_double(theta),
                        std::to_string(levels), std::to_string(k), format_double(numeric[k]),
                        format_double(analytic[k]), format_double(residuals[k])});
    return rows;
}

std::vector<ConvergencePoint> convergence_study(Model model, const OscParams& p, double theta,
                                                const std::vector<std::size_t>& levels_list,
                                                std::optional<std::size_t> compared) {
    if (levels_list.empty()) throw InvalidParameter("convergence_study: empty N list");
    for (std::size_t k = 0; k < levels_list.size(); ++k) {
        if (levels_list[k] < 8) throw InvalidParameter("convergence_study: every N must be at least 8");
        if (k > 0 && levels_list[k] <= levels_list[k - 1])
            throw InvalidParameter("convergence_study: N list must be strictly ascending");
    }
    const SpectrumFormula formula(model, p, theta);
    std::vector<ConvergencePoint> out;
    std::optional<std::size_t> k0 = compared;
    for (std::size_t n : levels_list) {
        const EigenSystem es = hermitian_eig(hamiltonian(model, p, theta, n));
        if (!k0) k0 = default_compared_levels(formula, es, n);
        if (*k0 == 0)
            throw NoTrustedLevels("convergence_study: no level is clear of the truncation edge at N=" +
                                  std::to_string(n));
        const SpectrumReport r = compare_spectrum(es, formula, n, *k0);
        out.push_back({n, *k0, r.max_abs_residual});
    }
    return out;
}

bool non_increasing(const std::vector<ConvergencePoint>& study, double slack) {
    for (std::size_t k = 1; k < study.size(); ++k)
        if (study[k].max_abs_residual > study[k - 1].max_abs_residual + slack) return false;
    return true;
}

double ground_overlap(const EigenSystem& es, const GroundState& psi0) {
    if (static_cast<std::size_t>(es.vectors.rows()) != static_cast<std::size_t>(psi0.psi0.amplitudes().size()))
        throw DimensionMismatch("ground_overlap", static_cast<std::size_t>(es.vectors.rows()),
                                static_cast<std::size_t>(psi0.psi0.amplitudes().size()));
    if (es.size() > 1 && es.values[1] - es.values[0] <= 1e-8 * std::max(1.0, std::abs(es.values[0])))
        throw DegenerateGroundLevel("ground_overlap: lowest level is degenerate");
    return std::abs(es.vectors.col(0).dot(psi0.psi0.amplitudes()));
}

double ground_overlap(const Operator& h, const GroundState& psi0) { return ground_overlap(hermitian_eig(h), psi0); }

ZeemanSplitting zeeman_splitting(const EigenSystem& es, const Operator& J3, double expected_spacing,
                                 int max_two_j) {
    if (static_cast<std::size_t>(es.vectors.rows()) != J3.dim())
        throw DimensionMismatch("zeeman_splitting", J3.dim(), static_cast<std::size_t>(es.vectors.rows()));
    const Eigen::VectorXd diag = J3.matrix().diagonal().real();

    std::map<int, std::vector<double>> sectors;  // 2 j3 -> ascending energies
    for (std::size_t k = 0; k < es.size(); ++k) {
        const Vector v = es.vector(k);
        const double twice = 2.0 * (v.cwiseAbs2().transpose() * diag)(0);
        const int d = static_cast<int>(std::lround(twice));
        if (std::abs(twice - d) > 1e-8) throw InvalidParameter("zeeman_splitting: eigenvector mixes J3 sectors");
        sectors[d].push_back(es.values[k]);
    }

    ZeemanSplitting out{expected_spacing, {}, 0.0};
    for (int two_j = 0; two_j <= max_two_j; ++two_j) {
        ZeemanMultiplet mult{two_j, {}, 0.0};
        for (int d = -two_j; d <= two_j; d += 2) {
            const auto it = sectors.find(d);
            const auto k = static_cast<std::size_t>((two_j - std::abs(d)) / 2);
            if (it == sectors.end() || it->second.size() <= k)
                throw InvalidParameter("zeeman_splitting: multiplet exceeds the truncated space");
            mult.energies.push_back(it->second[k]);
        }
        for (std::size_t k = 1; k < mult.energies.size(); ++k)
            mult.max_spacing_error = std::max(
                mult.max_spacing_error, std::abs(mult.energies[k] - mult.energies[k - 1] - expected_spacing));
        out.max_spacing_error = std::max(out.max_spacing_error, mult.max_spacing_error);
        out.multiplets.push_back(std::move(mult));
    }
    return out;
}

}  // namespace moyal
