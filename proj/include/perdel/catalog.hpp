#pragma once

#include "perdel/decomposition.hpp"
#include "perdel/form.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace perdel {

struct NamedForm {
    std::string name;
    std::size_t n = 0;
    QuadraticForm form;
};

/// Registered names: Zg (identity), Dn (n >= 3), E8, A2. Throws Error("UnknownName").
QuadraticForm gram(const std::string& name, std::size_t n);

/// Del(graphic_form(K33)), checked on construction: 20 classes with vertex counts {6, 6, 5 x 18},
/// the two 6-vertex classes swapped by x -> -x and each a cyclic polytope C6 (4-dimensional,
/// 9 facets, 2-neighborly). Throws Error("CatalogPostcondition").
PeriodicDecomposition delta_rt();

/// The 6-vertex classes of a decomposition.
std::vector<std::size_t> c6_classes(const PeriodicDecomposition& d);

struct RtRefinement {
    std::size_t choice_a = 0;  // triangulation used for the first C6 class
    std::size_t choice_b = 0;  // and for the second
    bool centrally_symmetric = false;
    PeriodicDecomposition decomposition;
};

/// Each C6 class of delta_rt() triangulated in one of its two ways: 4 decompositions.
std::vector<RtRefinement> rt_refinements();

/// Names with a short description, for `catalog list`.
std::vector<std::pair<std::string, std::string>> catalog_names();

}  // namespace perdel
