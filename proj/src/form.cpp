#include "perdel/form.hpp"

#include "perdel/error.hpp"

namespace perdel {

QuadraticForm::QuadraticForm(Matrix m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw Error("NonSymmetric", "quadratic form matrix is not symmetric");
}

Rational QuadraticForm::operator()(const std::vector<Rational>& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < dim(); ++j) row += m_(i, j) * x[j];
        s += x[i] * row;
    }
    return s;
}

Rational QuadraticForm::at(const LatticeVector& x) const {
    std::vector<Rational> r(x.begin(), x.end());
    return (*this)(r);
}

std::vector<IntVec> QuadraticForm::integer_matrix(Rational* multiplier) const {
    std::vector<Rational> all;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) all.push_back(m_(i, j));
    Integer l = lcm_of_denominators(all);
    Integer g = gcd_of_numerators(all);
    if (g == 0) g = 1;
    Rational scale(l, g);
    scale.canonicalize();
    std::vector<IntVec> out(dim(), IntVec(dim()));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            Rational v = m_(i, j) * scale;
            out[i][j] = to_int64(v.get_num());
        }
    if (multiplier) *multiplier = scale;
    return out;
}

QuadraticForm change_basis(const QuadraticForm& q, const std::vector<IntVec>& u) {
    const std::size_t g = q.dim();
    Matrix um(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) um(i, j) = static_cast<long>(u[i][j]);
    return QuadraticForm(um.transpose() * q.matrix() * um);
}

std::int64_t int_form_value(const std::vector<IntVec>& q, const LatticeVector& x) {
    __int128 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        __int128 row = 0;
        for (std::size_t j = 0; j < x.size(); ++j) row += static_cast<__int128>(q[i][j]) * x[j];
        s += row * x[i];
    }
    if (s > INT64_MAX || s < INT64_MIN) throw Error("ArithmeticOverflow", "form value exceeds 64 bits");
    return static_cast<std::int64_t>(s);
}

}  // namespace perdel
