#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace cli {

namespace {

const std::set<std::string> kKnownKeys{"model", "mu",   "omega",  "theta", "truncation",
                                       "format", "out", "jobs", "levels", "no_timestamp"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) throw ConfigError(key + ": '" + text + "' is not a number");
    if (!std::isfinite(v)) throw ConfigError(key + " must be finite");
    if (!(v > 0.0)) throw ConfigError(key + " must be positive");
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
    unsigned long long v = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        throw ConfigError(key + ": '" + text + "' is not a non-negative integer");
    return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError(key + ": '" + text + "' is not a boolean");
}

const std::string& single(const std::string& key, const std::vector<std::string>& values) {
    if (values.size() != 1) throw ConfigError(key + " takes exactly one value");
    return values.front();
}

std::vector<double> reals(const std::string& key, const std::vector<std::string>& values) {
    std::vector<double> out;
    for (const auto& v : values) out.push_back(parse_real(key, v));
    return out;
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::algebra: return "algebra";
        case Command::spectrum: return "spectrum";
        case Command::sweep: return "sweep";
        case Command::symmetry: return "symmetry";
        case Command::ground: return "ground";
        case Command::converge: return "converge";
    }
    return "?";
}

RawSettings parse_config_text(const std::string& text, const std::string& origin) {
    RawSettings out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.count(key)) throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        auto& slot = out[key];
        if (!value.empty()) slot.push_back(value);
    }
    return out;
}

RawSettings read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

RunConfig resolve(Command command, const RawSettings& file, const RawSettings& flags) {
    RawSettings merged = file;
    for (const auto& [key, values] : flags) {
        std::vector<std::string> kept;
        for (const auto& v : values)
            if (!v.empty()) kept.push_back(v);
        merged[key] = kept;
    }

    RunConfig cfg;
    cfg.command = command;
    cfg.format = command == Command::sweep || command == Command::converge ? Format::csv : Format::json;
    const bool grid = command == Command::sweep;

    for (const auto& [key, values] : merged) {
        if (key == "model") {
            try {
                cfg.model = moyal::parse_model(single(key, values));
            } catch (const std::invalid_argument&) {
                throw ConfigError("model must be one of commutative, h1, h2, h3");
            }
        } else if (key == "mu" || key == "omega" || key == "theta") {
            std::vector<double> v = reals(key, values);
            if (grid) {
                if (v.empty()) throw ConfigError("empty grid: " + key + " has no values");
            } else if (v.size() != 1) {
                throw ConfigError(key + " takes exactly one value for " + to_string(command));
            }
            (key == "mu" ? cfg.mu : key == "omega" ? cfg.omega : cfg.theta) = std::move(v);
        } else if (key == "truncation") {
            cfg.truncation.clear();
            for (const auto& s : values) cfg.truncation.push_back(parse_count(key, s));
            cfg.truncation_given = true;
        } else if (key == "format") {
            const std::string& f = single(key, values);
            if (f == "json") cfg.format = Format::json;
            else if (f == "csv") cfg.format = Format::csv;
            else throw ConfigError("format must be json or csv");
        } else if (key == "out") {
            cfg.out = single(key, values);
        } else if (key == "jobs") {
            const std::size_t j = parse_count(key, single(key, values));
            if (j == 0) throw ConfigError("jobs must be at least 1");
            cfg.jobs = static_cast<unsigned>(j);
        } else if (key == "levels") {
            const std::size_t k = parse_count(key, single(key, values));
            if (k == 0) throw ConfigError("levels must be at least 1");
            cfg.levels = k;
        } else if (key == "no_timestamp") {
            cfg.timestamp = !parse_bool(key, single(key, values));
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }

    const std::size_t min_n = command == Command::algebra ? 4 : 8;
    if (cfg.truncation_given) {
        if (cfg.truncation.empty()) throw ConfigError("truncation has no values");
        if (command != Command::converge && cfg.truncation.size() != 1)
            throw ConfigError("truncation takes exactly one value for " + to_string(command));
        for (std::size_t k = 0; k < cfg.truncation.size(); ++k) {
            if (cfg.truncation[k] < min_n)
                throw ConfigError("truncation must be at least " + std::to_string(min_n));
            if (k > 0 && cfg.truncation[k] <= cfg.truncation[k - 1])
                throw ConfigError("truncation list must be strictly ascending");
        }
    } else {
        cfg.truncation = command == Command::converge ? std::vector<std::size_t>{12, 16, 24, 32}
                                                      : std::vector<std::size_t>{16};
    }

    if (command == Command::symmetry && cfg.model == moyal::Model::commutative)
        throw ConfigError("symmetry needs a model on the Moyal plane (h1, h2 or h3)");
    if (command == Command::ground && cfg.model != moyal::Model::h2 && cfg.model != moyal::Model::h3)
        throw ConfigError("ground needs model h2 or h3");
    if (cfg.levels && command != Command::spectrum && command != Command::converge)
        throw ConfigError("levels applies to spectrum and converge only");
    return cfg;
}

}  // namespace cli
