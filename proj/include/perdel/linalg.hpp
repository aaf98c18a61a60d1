#pragma once

#include "perdel/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace perdel {

/// Exact rank over Q by fraction-free (content-normalized integer) elimination.
std::size_t rank(const Matrix& m);

/// Columns form a basis of the right null space; each column is a primitive integer vector.
Matrix kernel_basis(const Matrix& m);

/// Unique solution of a square nonsingular system, nullopt if singular.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

Rational determinant(const Matrix& m);

/// Row-echelon accumulator over Q with integer-preserving row updates. Rows are added one at a
/// time; rank() is the number of independent rows seen so far. Sparse, so it handles the large
/// wall-gluing systems.
class EchelonAccumulator {
public:
    explicit EchelonAccumulator(std::size_t cols) : cols_(cols) {}

    /// Returns true when the row was independent of those already added.
    bool add(const std::vector<std::pair<std::size_t, Rational>>& sparse_row);
    bool add_dense(const std::vector<Rational>& row);

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t cols() const noexcept { return cols_; }

private:
    using SparseRow = std::vector<std::pair<std::size_t, Integer>>;
    std::size_t cols_;
    std::vector<std::pair<std::size_t, SparseRow>> pivots_;  // sorted by pivot column
    std::vector<std::size_t> pivot_of_col_;
};

// --- quadratic form classification --------------------------------------------------------

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };

struct Signature {
    Definiteness kind = Definiteness::indefinite;
    Matrix kernel;  // kernel basis (columns) in the semidefinite case
};

/// Fraction-free LDL^T with symmetric pivoting. Throws Error("NonSymmetric").
Signature ldlt_signature(const Matrix& q);

// --- small integer helpers used by the geometry code ---------------------------------------

using IntVec = std::vector<std::int64_t>;

/// Rank of integer row vectors.
std::size_t int_rank(const std::vector<IntVec>& rows);

/// Determinant of a square integer matrix.
Integer int_determinant(const std::vector<IntVec>& rows);

/// For k = n-1 independent rows in Z^n: the primitive integer vector orthogonal to all rows
/// (generalized cross product, divided by its content). Zero vector if the rows are dependent.
IntVec cofactor_normal(const std::vector<IntVec>& rows, std::size_t n);

/// Primitive integer vector along a rational vector (same direction).
IntVec primitive_integer(const std::vector<Rational>& v);

std::int64_t gcd_content(const IntVec& v);

}  // namespace perdel
