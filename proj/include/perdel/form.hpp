#pragma once

#include "perdel/linalg.hpp"
#include "perdel/polytope.hpp"

namespace perdel {

/// Symmetric g x g rational matrix read as the quadratic form x -> x^T Q x.
class QuadraticForm {
public:
    QuadraticForm() = default;
    explicit QuadraticForm(Matrix m);  // throws Error("NonSymmetric")

    std::size_t dim() const noexcept { return m_.rows(); }
    const Matrix& matrix() const noexcept { return m_; }

    Rational operator()(const std::vector<Rational>& x) const;
    Rational at(const LatticeVector& x) const;

    /// Positive integer multiple of the form with coprime entries, and the multiplier used.
    std::vector<IntVec> integer_matrix(Rational* multiplier = nullptr) const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.m_ == b.m_; }

private:
    Matrix m_;
};

/// U^T Q U for an integer matrix U (rows of U given as IntVec).
QuadraticForm change_basis(const QuadraticForm& q, const std::vector<IntVec>& u);

std::int64_t int_form_value(const std::vector<IntVec>& q, const LatticeVector& x);

}  // namespace perdel
