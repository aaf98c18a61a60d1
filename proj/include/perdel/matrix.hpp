#pragma once

#include "perdel/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace perdel {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    std::vector<Rational> col(std::size_t c) const;

    Matrix transpose() const;
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v);

}  // namespace perdel
