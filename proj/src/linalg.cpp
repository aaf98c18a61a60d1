#include "perdel/linalg.hpp"

#include "perdel/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace perdel {

namespace {

using IntRow = std::vector<Integer>;

// Scales a rational row to a primitive integer row (same direction).
IntRow integer_row(const std::vector<Rational>& row) {
    Integer l = lcm_of_denominators(row);
    IntRow out(row.size());
    Integer g = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        out[i] = row[i].get_num() * (l / row[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

void remove_content(IntRow& row) {
    Integer g = 0;
    for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

struct ReducedEchelon {
    std::vector<IntRow> rows;          // nonzero rows
    std::vector<std::size_t> pivots;   // pivot column per row, increasing
};

// Integer-preserving Gauss-Jordan: every row update is r <- p_c * r - r_c * p, followed by
// removal of the row content. Pivot entries end up as the only nonzero entries in their column.
ReducedEchelon reduced_echelon(const Matrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(integer_row(m.row(r)));
    ReducedEchelon out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[next]);
        const IntRow& piv = rows[next];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][c] == 0) continue;
            Integer a = piv[c], b = rows[r][c];
            for (std::size_t k = 0; k < m.cols(); ++k) rows[r][k] = a * rows[r][k] - b * piv[k];
            remove_content(rows[r]);
        }
        out.pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

// a*b - c*d divided exactly by e, in 128-bit; false when the result leaves int64.
bool combine(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
             std::int64_t& out) {
    __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
    v /= e;
    if (v > INT64_MAX || v < INT64_MIN) return false;
    out = static_cast<std::int64_t>(v);
    return true;
}

struct Overflow {};

// Bareiss elimination in place; returns rank. Throws Overflow when int64 is insufficient.
std::size_t bareiss_rank_int64(std::vector<IntVec> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!combine(a[r][c], a[i][j], a[i][c], a[r][j], prev, a[i][j])) throw Overflow{};
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::size_t bareiss_rank_mpz(const std::vector<IntVec>& in) {
    if (in.empty()) return 0;
    const std::size_t rows = in.size(), cols = in[0].size();
    std::vector<IntRow> a(rows, IntRow(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(in[i][j]);
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

Integer bareiss_det_mpz(std::vector<IntRow> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool bareiss_det_int64(std::vector<IntVec> a, std::int64_t& det) {
    const std::size_t n = a.size();
    if (n == 0) {
        det = 1;
        return true;
    }
    std::int64_t prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) {
            det = 0;
            return true;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                if (!combine(a[k][k], a[i][j], a[i][k], a[k][j], prev, a[i][j])) return false;
        prev = a[k][k];
    }
    det = sign * a[n - 1][n - 1];
    return true;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    EchelonAccumulator acc(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) acc.add_dense(m.row(r));
    return acc.rank();
}

Matrix kernel_basis(const Matrix& m) {
    ReducedEchelon e = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> columns;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols());
        x[f] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            std::size_t c = e.pivots[r];
            x[c] = Rational(-e.rows[r][f], e.rows[r][c]);
            x[c].canonicalize();
        }
        IntRow ints = integer_row(x);
        std::vector<Rational> col(ints.begin(), ints.end());
        columns.push_back(std::move(col));
    }
    Matrix k(m.cols(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) k(i, j) = columns[j][i];
    return k;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
    if (!a.is_square() || a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    ReducedEchelon e = reduced_echelon(aug);
    if (e.rows.size() != n) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
        if (e.pivots[r] != r) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) {
        x[r] = Rational(e.rows[r][n], e.rows[r][r]);
        x[r].canonicalize();
    }
    return x;
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    Rational scale = 1;
    std::vector<IntRow> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        Integer l = lcm_of_denominators(row);
        scale /= l;
        IntRow ir(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) ir[c] = row[c].get_num() * (l / row[c].get_den());
        rows.push_back(std::move(ir));
    }
    return scale * Rational(bareiss_det_mpz(std::move(rows)));
}

// --- EchelonAccumulator ---------------------------------------------------------------------

bool EchelonAccumulator::add_dense(const std::vector<Rational>& row) {
    std::vector<std::pair<std::size_t, Rational>> sparse;
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) sparse.emplace_back(c, row[c]);
    return add(sparse);
}

bool EchelonAccumulator::add(const std::vector<std::pair<std::size_t, Rational>>& sparse_row) {
    if (pivot_of_col_.size() != cols_) pivot_of_col_.assign(cols_, SIZE_MAX);
    SparseRow row;
    {
        std::vector<Rational> vals;
        for (const auto& [c, v] : sparse_row)
            if (v != 0) vals.push_back(v);
        if (vals.empty()) return false;
        Integer l = lcm_of_denominators(vals);
        for (const auto& [c, v] : sparse_row)
            if (v != 0) row.emplace_back(c, v.get_num() * (l / v.get_den()));
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    while (!row.empty()) {
        std::size_t lead = row.front().first;
        std::size_t p = pivot_of_col_[lead];
        if (p == SIZE_MAX) {
            Integer g = 0;
            for (const auto& e : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
            if (g > 1)
                for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
            pivot_of_col_[lead] = pivots_.size();
            pivots_.emplace_back(lead, std::move(row));
            return true;
        }
        const SparseRow& piv = pivots_[p].second;
        Integer a = piv.front().second, b = row.front().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= g;
        b /= g;
        // row <- a*row - b*piv (leading entries cancel)
        SparseRow merged;
        merged.reserve(row.size() + piv.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < piv.size()) {
            if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                merged.emplace_back(row[i].first, a * row[i].second);
                ++i;
            } else if (i == row.size() || piv[j].first < row[i].first) {
                merged.emplace_back(piv[j].first, -b * piv[j].second);
                ++j;
            } else {
                Integer v = a * row[i].second - b * piv[j].second;
                if (v != 0) merged.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        Integer content = 0;
        for (const auto& e : merged) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.second.get_mpz_t());
        if (content > 1)
            for (auto& e : merged) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
        row = std::move(merged);
    }
    return false;
}

// --- LDL^T ------------------------------------------------------------------------------------

Signature ldlt_signature(const Matrix& q) {
    if (!q.is_symmetric()) throw Error("NonSymmetric", "quadratic form matrix is not symmetric");
    const std::size_t n = q.rows();
    std::vector<Rational> all;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) all.push_back(q(i, j));
    Integer l = lcm_of_denominators(all);
    std::vector<IntRow> a(n, IntRow(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = q(i, j).get_num() * (l / q(i, j).get_den());

    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        bool negative = false;
        for (std::size_t i = k; i < n; ++i) {
            if (a[i][i] > 0 && p == n) p = i;
            if (a[i][i] < 0) negative = true;
        }
        if (negative) return {Definiteness::indefinite, {}};
        if (p == n) {
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (a[i][j] != 0) return {Definiteness::indefinite, {}};
            return {Definiteness::positive_semidefinite, kernel_basis(q)};
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            for (auto& row : a) std::swap(row[p], row[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return {Definiteness::positive_definite, {}};
}

// --- integer helpers -------------------------------------------------------------------------

std::size_t int_rank(const std::vector<IntVec>& rows) {
    try {
        return bareiss_rank_int64(rows);
    } catch (const Overflow&) {
        return bareiss_rank_mpz(rows);
    }
}

Integer int_determinant(const std::vector<IntVec>& rows) {
    std::int64_t d;
    if (bareiss_det_int64(rows, d)) return Integer(static_cast<long>(d));
    std::vector<IntRow> a(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto x : rows[i]) a[i].emplace_back(static_cast<long>(x));
    return bareiss_det_mpz(std::move(a));
}

IntVec cofactor_normal(const std::vector<IntVec>& rows, std::size_t n) {
    if (rows.size() + 1 != n) throw std::invalid_argument("cofactor_normal needs n-1 rows in Z^n");
    std::vector<Integer> comps(n);
    std::vector<IntVec> minor(rows.size(), IntVec(n - 1));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != k) minor[i][jj++] = rows[i][j];
        Integer d = int_determinant(minor);
        comps[k] = (k % 2 == 0) ? d : Integer(-d);
    }
    Integer g = 0;
    for (const auto& c : comps) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    IntVec out(n, 0);
    if (g == 0) return out;
    for (std::size_t k = 0; k < n; ++k) out[k] = to_int64(comps[k] / g);
    return out;
}

IntVec primitive_integer(const std::vector<Rational>& v) {
    Integer l = lcm_of_denominators(v);
    std::vector<Integer> ints(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    IntVec out(v.size(), 0);
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_int64(ints[i] / g);
    return out;
}

std::int64_t gcd_content(const IntVec& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

}  // namespace perdel
