#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "moyal/algebra.hpp"
#include "moyal/blocks.hpp"
#include "moyal/bogoliubov.hpp"
#include "moyal/errors.hpp"
#include "moyal/report_format.hpp"
#include "moyal/schwinger.hpp"
#include "moyal/spectra.hpp"
#include "moyal/symmetry.hpp"

namespace cli {

using nlohmann::ordered_json;
using moyal::format_double;

namespace {

constexpr double kSpectrumThreshold = 1e-6;
constexpr double kConvergeThreshold = 1e-8;
constexpr double kRelativeTol = 1e-10;
constexpr double kIdentityTol = 1e-12;
constexpr double kGroundTol = 1e-10;

std::string yes_no(bool b) { return b ? "true" : "false"; }

ordered_json params_json(const RunConfig& cfg, std::size_t n) {
    return {{"mu", cfg.mu.front()}, {"omega", cfg.omega.front()}, {"theta", cfg.theta.front()}, {"N", n}};
}

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool below;  // pass iff value <= tolerance, otherwise iff value > tolerance

    bool pass() const { return below ? value <= tolerance : value > tolerance; }
};

void add_checks(Report& r, const std::vector<Check>& checks) {
    ordered_json arr = ordered_json::array();
    r.csv_header = {"check", "value", "tolerance", "expect", "pass"};
    for (const auto& c : checks) {
        const char* expect = c.below ? "<=" : ">";
        arr.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"expect", expect},
                       {"pass", c.pass()}});
        r.csv_rows.push_back({c.name, format_double(c.value), format_double(c.tolerance), expect, yes_no(c.pass())});
        r.pass = r.pass && c.pass();
    }
    r.json["checks"] = arr;
    r.json["pass"] = r.pass;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Report cmd_algebra(const RunConfig& cfg) {
    const std::size_t n = cfg.truncation.front();
    const moyal::HSSpace space(moyal::ModelConfig(cfg.theta.front(), n));
    const auto suite = moyal::heisenberg_suite(space);

    Report r;
    r.json = {{"command", "algebra"}, {"params", {{"theta", cfg.theta.front()}, {"N", n}}}, {"block", "m,n<=N-2"}};
    ordered_json rel = ordered_json::array();
    r.csv_header = {"relation", "residual", "tolerance", "pass"};
    std::size_t failed = 0;
    for (const auto& c : suite) {
        rel.push_back({{"relation", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass()}});
        r.csv_rows.push_back({c.name, format_double(c.residual), format_double(c.tolerance), yes_no(c.pass())});
        if (!c.pass()) ++failed;
    }
    r.pass = failed == 0;
    r.json["relations"] = rel;
    r.json["pass"] = r.pass;
    r.summary = "algebra: " + std::to_string(suite.size() - failed) + "/" + std::to_string(suite.size()) +
                " relations hold at N=" + std::to_string(n);
    return r;
}

Report cmd_spectrum(const RunConfig& cfg) {
    const std::size_t n = cfg.truncation.front();
    const auto rep = moyal::model_spectrum(cfg.model, cfg.params(), cfg.theta.front(), n, cfg.levels);
    Report r;
    r.json = {{"command", "spectrum"}};
    r.json.update(rep.to_json());
    r.pass = rep.max_abs_residual <= kSpectrumThreshold;
    r.json["threshold"] = kSpectrumThreshold;
    r.json["pass"] = r.pass;
    r.csv_header = moyal::SpectrumReport::csv_header();
    r.csv_rows = rep.csv_rows();
    r.summary = "spectrum: " + moyal::to_string(cfg.model) + " K=" + std::to_string(rep.compared) +
                " max residual " + format_double(rep.max_abs_residual);
    return r;
}

namespace {

struct SweepRow {
    double mu, omega, theta;
    moyal::RenormalizedParams derived;
    double phi_h2;
    double zeeman_coeff;
    double identity_product;  // |(1 + theta l+)(1 - theta l-) - 1|
    double identity_max;
    double ground_numeric, ground_analytic;
    double su2_h2;      // max_i ||[H2, Ji']|| / ||H2||, generators of the H2 frame
    double su2_h2_bare;  // the same against the unrotated generators
    double su2_h3_j3;   // ||[H3, J3]|| / ||H3||
    double su2_h3_j12;  // max(||[H3, J1]||, ||[H3, J2]||) / ||H3||
    double theta_h3;    // ||Theta H3 Theta^-1 - H3|| / ||H3||
    double su2_h3_free;   // SU(2) residual of H3 without its Zeeman term
    double theta_h3_free;

    bool pass() const {
        return identity_max <= kIdentityTol && su2_h2 <= kRelativeTol && su2_h3_j3 <= kRelativeTol &&
               su2_h3_free <= kRelativeTol && theta_h3_free <= kRelativeTol;
    }
};

SweepRow sweep_point(moyal::Model model, double mu, double omega, double theta, std::size_t n) {
    const moyal::OscParams p(mu, omega);
    const moyal::HSSpace space(moyal::ModelConfig(theta, n));
    const moyal::BasisBlock safe = moyal::BasisBlock::safe(n);
    const auto gens = moyal::schwinger_noncommutative(space);
    const auto ids = moyal::lambda_identities(p, theta);

    SweepRow row{mu, omega, theta, moyal::renormalized_params(p, theta), moyal::phi_for(p, theta, moyal::Model::h2),
                 mu * theta * omega * omega, ids.product_one, ids.max(), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};

    const auto es = moyal::hermitian_eig(moyal::hamiltonian(model, p, theta, n));
    row.ground_numeric = es.values.front();
    row.ground_analytic = moyal::SpectrumFormula(model, p, theta).lowest(1).front();

    auto max3 = [](const std::array<double, 3>& a) { return std::max({a[0], a[1], a[2]}); };
    const moyal::Operator H2 = moyal::h2(space, p);
    row.su2_h2 = max3(moyal::su2_commutant(H2, moyal::schwinger_primed(space, row.phi_h2))) / safe.norm(H2);
    row.su2_h2_bare = max3(moyal::su2_commutant(H2, gens)) / safe.norm(H2);

    const auto z = moyal::zeeman_decomposition(space, p);
    const moyal::Operator H3 = z.h2_part + z.zeeman_coeff * z.J3;
    const double h3n = safe.norm(H3);
    const auto c3 = moyal::su2_commutant(H3, gens);
    row.su2_h3_j3 = c3[2] / h3n;
    row.su2_h3_j12 = std::max(c3[0], c3[1]) / h3n;
    row.theta_h3 = safe.distance(moyal::theta_conjugate(H3), H3) / h3n;
    const double fn = safe.norm(z.h2_part);
    row.su2_h3_free = max3(moyal::su2_commutant(z.h2_part, moyal::schwinger_primed(space, row.derived.phi))) / fn;
    row.theta_h3_free = safe.distance(moyal::theta_conjugate(z.h2_part), z.h2_part) / fn;
    return row;
}

}  // namespace

Report cmd_sweep(const RunConfig& cfg) {
    struct Point { double mu, omega, theta; };
    std::vector<Point> grid;
    for (double mu : cfg.mu)
        for (double omega : cfg.omega)
            for (double theta : cfg.theta) grid.push_back({mu, omega, theta});
    const std::size_t n = cfg.truncation.front();

    std::vector<std::optional<SweepRow>> rows(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < grid.size(); k = next++) {
            try {
                rows[k] = sweep_point(cfg.model, grid[k].mu, grid[k].omega, grid[k].theta, n);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(grid.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Report r;
    r.json = {{"command", "sweep"}, {"model", moyal::to_string(cfg.model)}, {"N", n}};
    r.csv_header = {"mu", "omega", "theta", "N", "lambda_plus", "lambda_minus", "mu_prime", "omega_prime",
                    "phi_h2", "phi_h3", "zeeman_coeff", "identity_product_residual", "identity_max_residual",
                    "ground_energy", "ground_energy_analytic", "su2_residual_h2", "su2_residual_h2_bare", "su2_j3_residual_h3",
                    "su2_j12_residual_h3", "theta_residual_h3", "su2_residual_h3_without_zeeman",
                    "theta_residual_h3_without_zeeman", "pass"};
    ordered_json arr = ordered_json::array();
    std::size_t failed = 0;
    for (const auto& opt : rows) {
        const SweepRow& w = *opt;
        const std::vector<double> nums{w.mu, w.omega, w.theta, static_cast<double>(n), w.derived.lambda_plus,
                                       w.derived.lambda_minus, w.derived.mu_prime, w.derived.omega_prime, w.phi_h2,
                                       w.derived.phi, w.zeeman_coeff, w.identity_product, w.identity_max,
                                       w.ground_numeric, w.ground_analytic, w.su2_h2, w.su2_h2_bare, w.su2_h3_j3, w.su2_h3_j12,
                                       w.theta_h3, w.su2_h3_free, w.theta_h3_free};
        std::vector<std::string> csv;
        ordered_json obj;
        for (std::size_t c = 0; c < nums.size(); ++c) {
            if (c == 3) {
                csv.push_back(std::to_string(n));
                obj[r.csv_header[c]] = n;
            } else {
                csv.push_back(format_double(nums[c]));
                obj[r.csv_header[c]] = nums[c];
            }
        }
        csv.push_back(yes_no(w.pass()));
        obj["pass"] = w.pass();
        r.csv_rows.push_back(std::move(csv));
        arr.push_back(std::move(obj));
        if (!w.pass()) ++failed;
    }
    r.pass = failed == 0;
    r.json["rows"] = arr;
    r.json["pass"] = r.pass;
    r.summary = "sweep: " + std::to_string(grid.size() - failed) + "/" + std::to_string(grid.size()) +
                " points pass at N=" + std::to_string(n);
    return r;
}

Report cmd_symmetry(const RunConfig& cfg) {
    const std::size_t n = cfg.truncation.front();
    const moyal::HSSpace space(moyal::ModelConfig(cfg.theta.front(), n));
    const auto rep = moyal::build_rep(space);
    const auto gens = moyal::schwinger_noncommutative(space, rep);
    const auto s = moyal::time_reversal_suite(space, rep, gens, cfg.params(), cfg.model);

    Report r;
    r.json = {{"command", "symmetry"}};
    r.json.update(s.to_json());
    const double tol = kRelativeTol * std::max(1.0, s.hamiltonian_norm);
    std::vector<Check> checks;
    for (const auto& [name, v] : s.time_reversal) checks.push_back({"theta:" + name, v, tol, true});
    const char* names[] = {"J1", "J2", "J3"};
    for (int k = 0; k < 3; ++k) {
        const std::string j = names[k];
        switch (cfg.model) {
            case moyal::Model::h1: checks.push_back({"su2:[H," + j + "]", s.su2_residuals[k], tol, true}); break;
            case moyal::Model::h2:
                checks.push_back({"su2_frame:[H," + j + "']", s.su2_frame_residuals[k], tol, true});
                break;
            default:
                checks.push_back({"su2:[H," + j + "]", s.su2_residuals[k], tol, k == 2});
                checks.push_back({"su2_frame:[H," + j + "']", s.su2_frame_residuals[k], tol, k == 2});
        }
    }
    for (int k = 0; k < 3; ++k)
        checks.push_back({std::string("su2_without_zeeman:[H,") + names[k] + "']", s.su2_without_zeeman[k], tol, true});
    checks.push_back({"theta_without_zeeman", s.theta_without_zeeman, tol, true});
    checks.push_back({"theta_breaking_h3", s.theta_breaking, tol, false});
    add_checks(r, checks);
    r.summary = "symmetry: " + moyal::to_string(cfg.model) + " zeeman difference residual " +
                format_double(s.zeeman_difference_residual) + (r.pass ? ", all checks pass" : ", checks FAILED");
    return r;
}

Report cmd_ground(const RunConfig& cfg) {
    const moyal::OscParams p = cfg.params();
    const double theta = cfg.theta.front();
    const double phi = moyal::phi_for(p, theta, cfg.model);
    const std::size_t need = moyal::required_levels(phi);
    const std::size_t n = cfg.truncation_given ? cfg.truncation.front() : std::max<std::size_t>(16, 2 * need);
    const moyal::HSSpace space(moyal::ModelConfig(theta, n));

    const auto closed = moyal::ground_state_closed(space, phi);
    const auto unitary = moyal::ground_state_unitary(space, phi);
    const double diff = (closed.psi0.amplitudes() - unitary.psi0.amplitudes()).norm();
    const auto primed = moyal::primed_annihilation(closed);
    const auto lam = moyal::lambdas(p, theta);
    const auto tw = moyal::intertwiner_check(closed, lam.plus, theta);
    const auto c_vac = moyal::c_annihilation(moyal::HSState::dyad(space, 0, 0), p, theta);

    const auto es = moyal::hermitian_eig(moyal::hamiltonian(cfg.model, p, theta, n));
    const double overlap = moyal::ground_overlap(es, closed);
    const double vacuum_overlap = std::abs(es.vectors(0, 0));
    const double e_analytic = moyal::SpectrumFormula(cfg.model, p, theta).lowest(1).front();
    const auto eigen = closed.operator_eigenvalues();
    const bool h3 = cfg.model == moyal::Model::h3;

    Report r;
    r.json = {{"command", "ground"},
              {"model", moyal::to_string(cfg.model)},
              {"params", params_json(cfg, n)},
              {"phi", phi},
              {"tanh_phi", std::tanh(phi)},
              {"gamma", closed.gamma},
              {"required_levels", need},
              {"closed_vs_unitary", diff},
              {"norm", closed.norm},
              {"B_L_prime_residual", primed.B_L_prime},
              {"B_R_prime_dag_residual", primed.B_R_prime_dag},
              {"C_prime_residuals", {primed.C1_prime, primed.C2_prime}},
              {"C_on_vacuum", {c_vac[0], c_vac[1]}},
              {"intertwiner_lambda", h3 ? ordered_json(tw.lambda_relation) : ordered_json(nullptr)},
              {"intertwiner_tanh", tw.tanh_relation},
              {"intertwiner_tanh_conjugate", tw.conjugate_relation},
              {"ground_energy", es.values.front()},
              {"ground_energy_analytic", e_analytic},
              {"overlap", overlap},
              {"vacuum_overlap", vacuum_overlap},
              {"operator_eigenvalues", eigen},
              {"alternating", closed.alternating()}};

    std::vector<Check> checks{
        {"closed_vs_unitary", diff, kGroundTol, true},
        {"norm_error", std::abs(closed.norm - 1.0), kGroundTol, true},
        {"B_L_prime_residual", primed.B_L_prime, kGroundTol, true},
        {"C_prime_residual", std::max(primed.C1_prime, primed.C2_prime), kGroundTol, true},
        {"intertwiner_tanh", std::max(tw.tanh_relation, tw.conjugate_relation), kGroundTol, true},
        {"overlap_defect", 1.0 - overlap, kGroundTol, true},
    };
    if (h3) checks.push_back({"intertwiner_lambda", tw.lambda_relation, kGroundTol, true});
    if (phi == 0.0) {
        checks.push_back({"C_on_vacuum", std::max(c_vac[0], c_vac[1]), 1e-12, true});
        checks.push_back({"vacuum_overlap_defect", 1.0 - vacuum_overlap, kGroundTol, true});
    }
    add_checks(r, checks);
    r.summary = "ground: " + moyal::to_string(cfg.model) + " phi=" + format_double(phi) + " N=" + std::to_string(n) +
                " overlap " + format_double(overlap) + (r.pass ? ", all checks pass" : ", checks FAILED");
    return r;
}

Report cmd_converge(const RunConfig& cfg) {
    const auto study =
        moyal::convergence_study(cfg.model, cfg.params(), cfg.theta.front(), cfg.truncation, cfg.levels);
    const bool monotone = moyal::non_increasing(study);
    const double last = study.back().max_abs_residual;

    Report r;
    r.json = {{"command", "converge"},
              {"model", moyal::to_string(cfg.model)},
              {"params", {{"mu", cfg.mu.front()}, {"omega", cfg.omega.front()}, {"theta", cfg.theta.front()}}},
              {"compared_levels", study.front().compared}};
    ordered_json pts = ordered_json::array();
    r.csv_header = {"model", "mu", "omega", "theta", "N", "compared", "max_abs_residual"};
    for (const auto& pt : study) {
        pts.push_back({{"N", pt.levels}, {"compared", pt.compared}, {"max_abs_residual", pt.max_abs_residual}});
        r.csv_rows.push_back({moyal::to_string(cfg.model), format_double(cfg.mu.front()),
                              format_double(cfg.omega.front()), format_double(cfg.theta.front()),
                              std::to_string(pt.levels), std::to_string(pt.compared),
                              format_double(pt.max_abs_residual)});
    }
    r.pass = monotone && last <= kConvergeThreshold;
    r.json["points"] = pts;
    r.json["final_residual"] = last;
    r.json["threshold"] = kConvergeThreshold;
    r.json["non_increasing"] = monotone;
    r.json["pass"] = r.pass;
    r.summary = "converge: final residual " + format_double(last) + (monotone ? "" : ", not monotone");
    return r;
}

Report run(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::algebra: return cmd_algebra(cfg);
        case Command::spectrum: return cmd_spectrum(cfg);
        case Command::sweep: return cmd_sweep(cfg);
        case Command::symmetry: return cmd_symmetry(cfg);
        case Command::ground: return cmd_ground(cfg);
        case Command::converge: return cmd_converge(cfg);
    }
    throw std::logic_error("unknown command");
}

std::string render(const Report& report, Format format, const std::string& timestamp) {
    if (format == Format::json) {
        ordered_json doc;
        if (!timestamp.empty()) doc["generated_at"] = timestamp;
        doc.update(report.json);
        return moyal::dump_json(doc);
    }
    std::ostringstream out;
    if (!timestamp.empty()) out << "# generated_at=" << timestamp << "\n";
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t k = 0; k < fields.size(); ++k) out << (k ? "," : "") << csv_field(fields[k]);
        out << "\n";
    };
    line(report.csv_header);
    for (const auto& row : report.csv_rows) line(row);
    return out.str();
}

}  // namespace cli
