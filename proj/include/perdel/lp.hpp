#pragma once

#include "perdel/matrix.hpp"

#include <vector>

namespace perdel {

struct LpResult {
    bool bounded = true;
    Rational value;
    std::vector<Rational> x;     // primal optimum
    std::vector<Rational> dual;  // y >= 0 with A^T y >= c and b.y = value
};

/// maximize c.x subject to A x <= b, x >= 0, for b >= 0 (the origin is feasible).
/// Exact tableau simplex with Bland's rule.
LpResult lp_maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace perdel
