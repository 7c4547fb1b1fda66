#pragma once

// Heisenberg relations of the Hilbert-Schmidt representation, checked entrywise
// on the safe block.

#include <string>
#include <vector>

#include "moyal/hilbert_schmidt.hpp"

namespace moyal {

struct RelationCheck {
    std::string name;
    double residual;  // max |entry| of (lhs - rhs) on the safe block
    double tolerance;
    bool pass() const noexcept { return residual <= tolerance; }
};

std::vector<RelationCheck> heisenberg_suite(const HSSpace& space, const RepOperators& rep, double tolerance = 1e-12);
std::vector<RelationCheck> heisenberg_suite(const HSSpace& space, double tolerance = 1e-12);

}  // namespace moyal
