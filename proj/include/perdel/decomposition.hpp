#pragma once

#include "perdel/polytope.hpp"

#include <cstddef>
#include <vector>

namespace perdel {

/// Shared face between class a's representative and class b's representative translated by t.
/// face_vertices are given in a's coordinates.
struct Wall {
    std::size_t a = 0;
    std::size_t b = 0;
    LatticeVector t;
    int face_dim = -1;
    std::vector<LatticeVector> face_vertices;

    Cell face() const { return convex_hull(face_vertices); }
    bool codim1(std::size_t g) const { return face_dim + 1 == static_cast<int>(g); }
};

/// X-periodic decomposition of R^g given by maximal cell classes mod Z^g.
/// A positive fiber_rank marks a pullback from dimension g - fiber_rank; such objects carry no cells.
class PeriodicDecomposition {
public:
    PeriodicDecomposition() = default;

    /// Polytopal decomposition from class representatives. Representatives are moved so the
    /// lexicographically smallest vertex sits at the origin, classes are sorted, and walls are
    /// derived by facet matching. Throws Error("NotFaceFitting").
    static PeriodicDecomposition from_cells(std::size_t g, std::vector<Cell> cells);

    /// Preimage of a polytopal decomposition of R^(g-a) (given by its cells) under a projection
    /// with a-dimensional fibers. For a = g the base is a point and `base_cells` must be empty.
    static PeriodicDecomposition pullback(std::size_t g, std::size_t fiber_rank, std::vector<Cell> base_cells = {});

    /// The polytopal base of a pullback (dimension g - a). Throws Error("NotPullback") if a = 0.
    PeriodicDecomposition base() const;

    std::size_t dim() const noexcept { return dim_; }
    std::size_t fiber_rank() const noexcept { return fiber_rank_; }
    /// For a pullback these are the base's cells, of ambient dimension g - a.
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const std::vector<Wall>& walls() const noexcept { return walls_; }

    Integer total_volume() const;

    /// Tiling volume and disjoint-interior checks. Throws Error("NotFaceFitting") or
    /// Error("TilingVolume").
    void validate() const;

    /// Class index and translation t such that cell = cells()[index] + t, if any.
    bool locate(const std::vector<LatticeVector>& vertices, std::size_t* index, LatticeVector* t) const;

private:
    std::size_t dim_ = 0;
    std::size_t fiber_rank_ = 0;
    std::vector<Cell> cells_;
    std::vector<Wall> walls_;
};

Integer factorial(std::size_t n);

/// The class set is invariant under x -> -x.
bool is_centrally_symmetric(const PeriodicDecomposition& d);

/// Number of distinct primitive normals (up to sign) of codimension-1 walls, i.e. the number of
/// parallel hyperplane families when the decomposition is a dicing.
std::size_t wall_hyperplane_classes(const PeriodicDecomposition& d);

}  // namespace perdel
