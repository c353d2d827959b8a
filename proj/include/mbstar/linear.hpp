#pragma once

#include <optional>
#include <vector>

#include "mbstar/rational.hpp"

namespace mbstar {

// Exact feasibility of A x = b, x >= 0 over the rationals, by phase-one
// simplex with Bland's rule (no cycling, deterministic witness). Rows of A
// must all have the same length; returns a solution when one exists.
std::optional<std::vector<Rat>> solve_nonneg_exact(std::vector<std::vector<Rat>> a,
                                                   std::vector<Rat> b);

}  // namespace mbstar
