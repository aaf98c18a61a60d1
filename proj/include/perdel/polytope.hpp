#pragma once

#include "perdel/linalg.hpp"

#include <cstdint>
#include <vector>

namespace perdel {

/// Element of X = Z^g.
using LatticeVector = IntVec;

/// Inner-pointing facet inequality normal . x >= offset, tight on the facet.
struct Facet {
    LatticeVector normal;                 // primitive
    std::int64_t offset = 0;
    std::vector<std::size_t> vertices;    // indices into Cell::vertices()
};

/// Affine-hull equation normal . x == offset.
struct Equation {
    LatticeVector normal;
    std::int64_t offset = 0;
};

/// A proper face of a cell. Indices refer to the owning cell's vertices / lattice points.
struct Face {
    int dim = -1;
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> lattice_points;
};

/// Lattice polytope in Z^g. Immutable; facets and lattice points are computed on construction.
class Cell {
public:
    Cell() = default;

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    int affine_dim() const noexcept { return affine_dim_; }
    const std::vector<LatticeVector>& vertices() const noexcept { return vertices_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    const std::vector<Equation>& equations() const noexcept { return equations_; }
    const std::vector<LatticeVector>& lattice_points() const noexcept { return lattice_points_; }

    bool is_full_dimensional() const noexcept { return affine_dim_ == static_cast<int>(ambient_dim_); }
    bool is_simplex() const noexcept { return vertices_.size() == static_cast<std::size_t>(affine_dim_ + 1); }

    /// Closed membership test (facets and equations).
    bool contains(const LatticeVector& x) const;

    Cell translated(const LatticeVector& t) const;

    /// All nonempty proper faces (dimension 0 .. affine_dim-1).
    std::vector<Face> proper_faces() const;

    friend bool operator==(const Cell& a, const Cell& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

    friend Cell convex_hull(std::vector<LatticeVector> points);

private:
    std::size_t ambient_dim_ = 0;
    int affine_dim_ = -1;
    std::vector<LatticeVector> vertices_;
    std::vector<Facet> facets_;
    std::vector<Equation> equations_;
    std::vector<LatticeVector> lattice_points_;
};

/// Convex hull of a nonempty point set; the vertex set is exactly the extreme points.
Cell convex_hull(std::vector<LatticeVector> points);

/// Integer points of the cell, boundary included (bounding box scan filtered by inequalities).
std::vector<LatticeVector> lattice_points(const Cell& c);

/// g! times the Euclidean volume. Throws Error("DegenerateCell") unless full-dimensional.
Integer normalized_volume(const Cell& c);

/// Every proper face is a simplex.
bool is_simplicial_boundary(const Cell& c);

/// Pulling triangulation from the lexicographically first vertex; each simplex lists vertices.
std::vector<std::vector<LatticeVector>> pulling_triangulation(const Cell& c);

/// Triangulations of a full-dimensional cell using only its vertices, induced by lifting with
/// every 0/1 height vector and projecting the lower hull. Each triangulation is sorted.
std::vector<std::vector<Cell>> lifted_triangulations(const Cell& c);

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(const std::vector<LatticeVector>& points);

/// Greedy affinely independent subset (indices), scanning in the given order.
std::vector<std::size_t> affine_basis(const std::vector<LatticeVector>& points);

/// Sorted copy translated so the lexicographically smallest point is the origin.
std::vector<LatticeVector> canonical_translate(std::vector<LatticeVector> points, LatticeVector* shift = nullptr);

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
std::int64_t dot(const LatticeVector& a, const LatticeVector& b);

}  // namespace perdel
