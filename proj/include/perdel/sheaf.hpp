#pragma once

#include "perdel/decomposition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace perdel {

enum class H0Method { general, simplicial, pullback };

std::string to_string(H0Method m);

struct StratumReport {
    std::size_t h0 = 0;
    H0Method method = H0Method::general;
    std::vector<std::size_t> l_values;  // per maximal class
    Integer volume = 0;                 // sum of normalized volumes (g! when tiling)
    std::optional<std::size_t> voronoi_cone_dim;  // secondary-cone dimension
    std::optional<std::size_t> stratum_dim;       // g(g+1)/2 - cone dimension
    std::optional<bool> et_flag;
};

/// |c cap X| - affine_dim(c) - 1.
std::size_t lhat_dim(const Cell& c);

/// Sizes of the gluing system behind h0_general, kept for reports and tests.
struct SectionSpaceStats {
    std::size_t variables = 0;
    std::size_t constraints = 0;
    std::size_t rank = 0;
    std::size_t affine_dim = 0;  // (g + 1) per maximal class
};

/// Which shared faces impose gluing. all_faces is the default reading; codim1_only exists to
/// test whether lower-dimensional faces ever change the answer.
enum class GluingScope { all_faces, codim1_only };

/// Values on every cell's lattice points, glued across shared faces modulo affine functions.
/// Throws Error("NotPolytopal") or Error("MissingWalls").
StratumReport h0_general(const PeriodicDecomposition& d, SectionSpaceStats* stats = nullptr,
                         GluingScope scope = GluingScope::all_faces);

/// Sum of lhat_dim over classes. Throws Error("HypothesisViolated") unless every cell has
/// simplicial boundary.
StratumReport h0_simplicial(const PeriodicDecomposition& d);

/// h0(base) + a(a+1)/2 + a(g-a); the base contributes nothing when a = g.
std::size_t h0_pullback(std::size_t base_h0, std::size_t a, std::size_t g);

/// Pullbacks: h0_pullback over the base's h0_general. Otherwise h0_simplicial when every cell
/// has simplicial boundary, else h0_general. With `cross_check` the simplicial answer is
/// confirmed by the general method (Error("MethodMismatch") if they differ).
StratumReport h0_auto(const PeriodicDecomposition& d, bool cross_check = false);

/// h0 < sum of normalized volumes (= g!).
bool volume_upper_bound_check(const PeriodicDecomposition& d);
bool volume_upper_bound_check(const PeriodicDecomposition& d, const StratumReport& r);

}  // namespace perdel
