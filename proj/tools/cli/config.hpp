#pragma once

// Run configuration: flat `key = value` files, flag overrides and validation.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moyal/oscillators.hpp"

namespace cli {

/// Invalid user input; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { algebra, spectrum, sweep, symmetry, ground, converge };
enum class Format { json, csv };

std::string to_string(Command c);

/// Raw string values per key. A present key with an empty list is an explicit
/// empty list; an absent key falls back to the default.
using RawSettings = std::map<std::string, std::vector<std::string>>;

/// Parses `key = value` lines. `#` starts a comment, repeated keys append.
RawSettings parse_config_text(const std::string& text, const std::string& origin);
RawSettings read_config_file(const std::string& path);

struct RunConfig {
    Command command;
    moyal::Model model = moyal::Model::h3;
    std::vector<double> mu{1.0};
    std::vector<double> omega{1.0};
    std::vector<double> theta{1.0};
    std::vector<std::size_t> truncation;
    bool truncation_given = false;
    Format format = Format::json;
    std::optional<std::string> out;
    unsigned jobs = 1;
    bool timestamp = true;
    std::optional<std::size_t> levels;

    moyal::OscParams params() const { return {mu.front(), omega.front()}; }
};

/// Merges file and flag settings (flags replace file values key by key) and
/// validates everything. Throws ConfigError.
RunConfig resolve(Command command, const RawSettings& file, const RawSettings& flags);

}  // namespace cli
