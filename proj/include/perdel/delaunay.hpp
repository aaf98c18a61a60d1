#pragma once

#include "perdel/decomposition.hpp"
#include "perdel/error.hpp"
#include "perdel/form.hpp"

namespace perdel {

/// q-circumsphere of a cell: q(v - center) = squared_radius on every vertex.
struct EmptySphereCertificate {
    std::vector<Rational> center;
    Rational squared_radius;
};

/// Raised by verify_empty_sphere; carries the lattice point found strictly inside.
class SphereNotEmpty : public Error {
public:
    SphereNotEmpty(LatticeVector witness, const std::string& detail)
        : Error("SphereNotEmpty", detail), witness_(std::move(witness)) {}
    const LatticeVector& witness() const noexcept { return witness_; }

private:
    LatticeVector witness_;
};

/// 4 * trace(q). Upper bound for the squared q-distance from the origin to any vertex of a
/// Delaunay cell having the origin as a vertex (twice the covering radius, squared, is at most trace).
Rational window_radius(const QuadraticForm& q);

/// All lattice points x with q(x) <= radius, sorted.
std::vector<LatticeVector> lattice_window(const QuadraticForm& q, const Rational& radius);

/// Throws Error("NoCircumsphere") or SphereNotEmpty. Lattice points on the sphere are allowed.
EmptySphereCertificate verify_empty_sphere(const Cell& c, const QuadraticForm& q,
                                           const std::vector<LatticeVector>& window);

struct DelaunayOptions {
    Rational window_scale = 1;  // multiplies the starting window
};

/// Del_q as classes of maximal cells. Throws Error("NotPositiveDefinite"),
/// Error("WindowUnstable"), Error("ArithmeticOverflow").
PeriodicDecomposition delaunay_decomposition(const QuadraticForm& q, const DelaunayOptions& opts = {});

}  // namespace perdel
