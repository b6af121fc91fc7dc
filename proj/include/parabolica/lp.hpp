#pragma once

#include <map>
#include <optional>
#include <vector>

#include "parabolica/rational.hpp"

namespace parabolica {

// One row: sum over (var, coeff) of coeff * x_var >= rhs, with rhs >= 0.
struct LinearConstraint {
    std::map<int, Rat> coeffs;
    Rat rhs;
};

// Finds x >= 0 satisfying every constraint, or nullopt when infeasible.
// Exact phase-one simplex with Bland's rule; deterministic.
std::optional<std::vector<Rat>> lp_feasible_point(int nvars,
                                                  const std::vector<LinearConstraint>& cons);

}  // namespace parabolica
