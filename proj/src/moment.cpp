#include "perdel/moment.hpp"

#include "perdel/error.hpp"

namespace perdel {

std::vector<Rational> moment_point(const WeightedSupport& s) {
    if (s.points.empty()) throw Error("EmptySupport", "moment map needs at least one support point");
    if (s.points.size() != s.weights.size()) throw InputError("support points and weights differ in length");
    const std::size_t g = s.points.front().size();
    std::vector<Rational> sum(g, 0);
    Rational total = 0;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        Rational w = s.weights[i];
        w.canonicalize();
        if (w <= 0) throw Error("NonPositiveWeight", "support weights must be positive");
        if (s.points[i].size() != g) throw InputError("support points have different dimensions");
        total += w;
        for (std::size_t k = 0; k < g; ++k) sum[k] += w * s.points[i][k];
    }
    for (auto& x : sum) x /= total;
    return sum;
}

}  // namespace perdel
