#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "moyal/errors.hpp"

namespace {

struct FlagValues {
    std::string config;
    std::vector<std::string> model, mu, omega, theta, truncation, format, out, jobs, levels;
    bool no_timestamp = false;
};

void add_common(CLI::App* sub, FlagValues& f) {
    sub->add_option("--config", f.config, "Config file of key = value lines");
    sub->add_option("--model", f.model, "commutative | h1 | h2 | h3");
    sub->add_option("--mu", f.mu, "Mass (repeat for sweep grids)");
    sub->add_option("--omega", f.omega, "Frequency (repeat for sweep grids)");
    sub->add_option("--theta", f.theta, "Non-commutativity (repeat for sweep grids)");
    sub->add_option("--truncation", f.truncation, "Levels per mode N (repeat for converge)");
    sub->add_option("--format", f.format, "json | csv");
    sub->add_option("--out", f.out, "Output path (default stdout)");
    sub->add_option("--jobs", f.jobs, "Worker threads for sweep");
    sub->add_option("--levels", f.levels, "Number of compared levels K");
    sub->add_flag("--no-timestamp", f.no_timestamp, "Omit the generated_at field");
}

cli::RawSettings flag_settings(const CLI::App* sub, const FlagValues& f) {
    cli::RawSettings s;
    auto put = [&](const char* flag, const char* key, const std::vector<std::string>& v) {
        if (sub->count(flag) > 0) s[key] = v;
    };
    put("--model", "model", f.model);
    put("--mu", "mu", f.mu);
    put("--omega", "omega", f.omega);
    put("--theta", "theta", f.theta);
    put("--truncation", "truncation", f.truncation);
    put("--format", "format", f.format);
    put("--out", "out", f.out);
    put("--jobs", "jobs", f.jobs);
    put("--levels", "levels", f.levels);
    if (f.no_timestamp) s["no_timestamp"] = {"true"};
    return s;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Oscillators on the Moyal plane: algebra, spectra, symmetry and ground-state checks"};
    app.require_subcommand(1);
    FlagValues flags;
    const std::pair<cli::Command, const char*> commands[] = {
        {cli::Command::algebra, "Heisenberg relations on the safe block"},
        {cli::Command::spectrum, "Numeric spectrum against the closed form"},
        {cli::Command::sweep, "Derived parameters and residuals over a mu x omega x theta grid"},
        {cli::Command::symmetry, "SU(2) and time-reversal diagnostics"},
        {cli::Command::ground, "Closed and unitary ground states"},
        {cli::Command::converge, "Residual of fixed low levels against N"},
    };
    std::vector<std::pair<cli::Command, CLI::App*>> subs;
    for (const auto& [cmd, help] : commands) {
        CLI::App* sub = app.add_subcommand(cli::to_string(cmd), help);
        add_common(sub, flags);
        subs.emplace_back(cmd, sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cli::Command command{};
    const CLI::App* chosen = nullptr;
    for (const auto& [cmd, sub] : subs)
        if (sub->parsed()) {
            command = cmd;
            chosen = sub;
        }

    cli::RunConfig cfg;
    try {
        const cli::RawSettings file = flags.config.empty() ? cli::RawSettings{} : cli::read_config_file(flags.config);
        cfg = cli::resolve(command, file, flag_settings(chosen, flags));
    } catch (const cli::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    cli::Report report;
    try {
        report = cli::run(cfg);
    } catch (const moyal::NoTrustedLevels& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const moyal::TailBoundUnmet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const std::string text = cli::render(report, cfg.format, cfg.timestamp ? utc_now() : "");
    if (cfg.out) {
        std::ofstream out(*cfg.out, std::ios::binary);
        if (!out || !(out << text) || !out.flush()) {
            std::cerr << "error: cannot write '" << *cfg.out << "'\n";
            return 2;
        }
    } else {
        std::cout << text;
    }
    std::cerr << report.summary << "\n";
    return report.pass ? 0 : 1;
}
