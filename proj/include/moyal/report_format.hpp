#pragma once

// Text output with 17 significant digits so that reports round-trip exactly.

#include <string>

#include <json.hpp>

namespace moyal {

/// %.17g; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

/// Indented JSON with every floating-point number printed by format_double.
/// Non-finite numbers become null.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace moyal
