#pragma once

#include "perdel/polytope.hpp"

#include <vector>

namespace perdel {

/// Finite map x -> w_x with w_x > 0 (the |xi_x|^2 of a torus point).
struct WeightedSupport {
    std::vector<LatticeVector> points;
    std::vector<Rational> weights;
};

/// sum w_x x / sum w_x. Throws Error("EmptySupport") or Error("NonPositiveWeight").
std::vector<Rational> moment_point(const WeightedSupport& s);

}  // namespace perdel
