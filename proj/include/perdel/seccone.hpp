#pragma once

#include "perdel/decomposition.hpp"
#include "perdel/form.hpp"
#include "perdel/sheaf.hpp"

#include <optional>
#include <vector>

namespace perdel {

/// Nonnegative combination lambda of the strict inequality rows R (sum lambda = 1) and a
/// combination mu of the equality rows E with lambda^T R = mu^T E. Any q with E q = 0 and
/// R q > 0 would give 0 < lambda^T R q = mu^T E q = 0.
struct FarkasCertificate {
    std::vector<IntVec> inequalities;  // R, over the coordinates q_ij (i <= j)
    std::vector<IntVec> equalities;    // E
    std::vector<Rational> lambda;
    std::vector<Rational> mu;

    bool valid() const;
};

struct ConeCertificate {
    std::size_t form_dim = 0;                 // g(g+1)/2
    std::size_t equality_solution_dim = 0;    // dim of {q : q agrees with an affine lift on every cell}
    std::optional<std::size_t> cone_dim;      // = equality_solution_dim when the cone is open in that span
    std::optional<std::size_t> stratum_dim;   // g(g+1)/2 - cone_dim
    std::optional<QuadraticForm> witness;
    std::optional<FarkasCertificate> farkas;

    bool delaunay() const { return witness.has_value(); }
};

/// Coordinates of q as the g(g+1)/2 entries q_ij, i <= j, row by row.
std::vector<std::pair<std::size_t, std::size_t>> form_coordinates(std::size_t g);

/// Rows over form_coordinates: q is in the secondary cone iff E q = 0 and R q > 0.
struct ConeSystem {
    std::vector<IntVec> equalities;    // E: q agrees with the cell's affine lift on its lattice points
    std::vector<IntVec> inequalities;  // R: the lift folds strictly across every codimension-1 wall
};

ConeSystem cone_system(const PeriodicDecomposition& d);

/// Coordinate vector of a form (entries q_ij, i <= j).
std::vector<Rational> form_vector(const QuadraticForm& q);

/// Throws Error("NotFaceFitting"), Error("NotPolytopal"), Error("WitnessNotDelaunay").
ConeCertificate secondary_cone(const PeriodicDecomposition& d);

/// h0_general compared against the Voronoi stratum dimension. Throws Error("NotDelaunay") when
/// the decomposition has no witness form.
StratumReport et_detect(const PeriodicDecomposition& d);
StratumReport et_detect(const PeriodicDecomposition& d, const ConeCertificate& cone);

}  // namespace perdel
