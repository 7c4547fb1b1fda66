#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moyal {

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(const std::string& where, std::size_t lhs, std::size_t rhs)
        : std::invalid_argument(where + ": dimension mismatch (" + std::to_string(lhs) + " vs " +
                                std::to_string(rhs) + ")") {}
};

class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotHermitian : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NonFiniteInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when a closed-form state does not fit in the truncated space.
class TailBoundUnmet : public std::domain_error {
public:
    TailBoundUnmet(std::size_t levels, std::size_t required)
        : std::domain_error("truncation N=" + std::to_string(levels) +
                            " too small for ground-state tail bound; need N >= " +
                            std::to_string(required)),
          required_(required) {}

    std::size_t required_levels() const noexcept { return required_; }

private:
    std::size_t required_;
};

// No numeric level is clear of the truncation edge.
class NoTrustedLevels : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateGroundLevel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace moyal
