#include "moyal/report_format.hpp"

#include <cmath>
#include <cstdio>

namespace moyal {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write(std::string& out, const nlohmann::ordered_json& j, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(indent * depth), ' ');
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + nlohmann::ordered_json(key).dump() + ": ";
                write(out, value, indent, depth + 1);
            }
            out += "\n" + close + "}";
            return;
        }
        case nlohmann::ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k > 0) out += ",\n";
                out += pad;
                write(out, j[k], indent, depth + 1);
            }
            out += "\n" + close + "]";
            return;
        }
        case nlohmann::ordered_json::value_t::number_float: {
            const double v = j.get<double>();
            out += std::isfinite(v) ? format_double(v) : "null";
            return;
        }
        default: out += j.dump();
    }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
    std::string out;
    write(out, j, indent, 0);
    out += "\n";
    return out;
}

}  // namespace moyal
