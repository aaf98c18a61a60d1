#pragma once
// Independent reference computations used only by tests.

#include "perdel/form.hpp"
#include "perdel/linalg.hpp"
#include "perdel/matrix.hpp"
#include "perdel/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using perdel::Rational;

/// Leibniz-formula determinant (permutation expansion); fine for n <= 7.
inline Rational leibniz_det(const perdel::Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline perdel::Matrix leading_minor(const perdel::Matrix& m, std::size_t k) {
    perdel::Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
    return out;
}

inline Rational random_rational(std::mt19937& rng, int range = 5, int den = 4) {
    std::uniform_int_distribution<int> num(-range, range), d(1, den);
    Rational r(num(rng), d(rng));
    r.canonicalize();
    return r;
}

/// Random unimodular matrix as a product of elementary operations with small multipliers.
inline std::vector<perdel::IntVec> random_unimodular(std::mt19937& rng, std::size_t g, int steps = 6) {
    std::vector<perdel::IntVec> u(g, perdel::IntVec(g, 0));
    for (std::size_t i = 0; i < g; ++i) u[i][i] = 1;
    if (g < 2) return u;
    std::uniform_int_distribution<std::size_t> idx(0, g - 1);
    std::uniform_int_distribution<int> mult(-1, 1), coin(0, 3);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b) continue;
        int c = coin(rng);
        if (c == 0) {
            std::swap(u[a], u[b]);
        } else if (c == 1) {
            for (auto& x : u[a]) x = -x;
        } else {
            int k = mult(rng);
            if (k == 0) k = 1;
            for (std::size_t j = 0; j < g; ++j) u[a][j] += k * u[b][j];
        }
    }
    return u;
}

inline perdel::LatticeVector apply(const std::vector<perdel::IntVec>& u, const perdel::LatticeVector& x) {
    perdel::LatticeVector y(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += u[i][j] * x[j];
    return y;
}

/// Random positive definite form B^T B (+ small symmetric rational perturbation when `generic`).
inline perdel::QuadraticForm random_pd_form(std::mt19937& rng, std::size_t g, bool generic) {
    std::uniform_int_distribution<int> e(-1, 1), pert(-2, 2);
    while (true) {
        perdel::Matrix b(g, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) b(i, j) = (i == j ? 1 : 0) + (i < j || i > j ? e(rng) : 0);
        perdel::Matrix q = b.transpose() * b;
        if (generic)
            for (std::size_t i = 0; i < g; ++i)
                for (std::size_t j = i; j < g; ++j) {
                    Rational d(pert(rng), 7);
                    d.canonicalize();
                    q(i, j) += d;
                    if (i != j) q(j, i) += d;
                }
        if (perdel::ldlt_signature(q).kind == perdel::Definiteness::positive_definite) return perdel::QuadraticForm(q);
    }
}

/// Canonical class set of a decomposition, for set comparisons.
template <class D>
std::set<std::vector<perdel::LatticeVector>> class_set(const D& d) {
    std::set<std::vector<perdel::LatticeVector>> s;
    for (const auto& c : d.cells()) s.insert(perdel::canonical_translate(c.vertices()));
    return s;
}

/// Plain Gauss-Jordan solve of a square system; empty result when singular.
inline std::vector<Rational> gauss_solve(perdel::Matrix a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return {};
        for (std::size_t k = 0; k < n; ++k) std::swap(a(c, k), a(p, k));
        std::swap(b[c], b[p]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t k = 0; k < n; ++k) a(r, k) -= f * a(c, k);
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
    return b;
}

inline Rational qdist(const perdel::Matrix& q, const perdel::LatticeVector& y, const std::vector<Rational>& c) {
    const std::size_t g = c.size();
    std::vector<Rational> d(g);
    for (std::size_t i = 0; i < g; ++i) d[i] = y[i] - c[i];
    Rational s = 0;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) s += q(i, j) * d[i] * d[j];
    return s;
}

/// Empty-sphere check by brute force: circumcenter from g vertex differences, then every integer
/// point of the box |y_i - c_i| <= sqrt(r^2 (Q^-1)_ii) + 1 is tested. Points on the sphere must be
/// exactly the vertices.
inline bool empty_sphere(const perdel::Cell& cell, const perdel::QuadraticForm& form) {
    const auto& q = form.matrix();
    const auto& v = cell.vertices();
    const std::size_t g = form.dim();
    // rows 2 (v_i - v_0)^T Q c = q(v_i) - q(v_0), using the first independent differences
    std::vector<std::size_t> pick;
    perdel::Matrix a(g, g);
    std::vector<Rational> rhs(g);
    for (std::size_t i = 1; i < v.size() && pick.size() < g; ++i) {
        pick.push_back(i);
        perdel::Matrix t(pick.size(), g);
        for (std::size_t r = 0; r < pick.size(); ++r)
            for (std::size_t k = 0; k < g; ++k) t(r, k) = v[pick[r]][k] - v[0][k];
        if (perdel::rank(t) < pick.size()) pick.pop_back();
    }
    if (pick.size() != g) return false;
    std::vector<Rational> zero(g, 0);
    for (std::size_t r = 0; r < g; ++r) {
        for (std::size_t k = 0; k < g; ++k) {
            a(r, k) = 0;
            for (std::size_t j = 0; j < g; ++j) a(r, k) += 2 * (v[pick[r]][j] - v[0][j]) * q(j, k);
        }
        rhs[r] = qdist(q, v[pick[r]], zero) - qdist(q, v[0], zero);
    }
    auto c = gauss_solve(a, rhs);
    if (c.empty()) return false;
    const Rational r2 = qdist(q, v[0], c);
    for (const auto& x : v)
        if (qdist(q, x, c) != r2) return false;

    std::vector<Rational> inv_diag(g);
    for (std::size_t i = 0; i < g; ++i) {
        std::vector<Rational> e(g, 0);
        e[i] = 1;
        inv_diag[i] = gauss_solve(q, e)[i];
    }
    perdel::LatticeVector lo(g), hi(g);
    for (std::size_t i = 0; i < g; ++i) {
        double half = std::sqrt(Rational(r2 * inv_diag[i]).get_d()) + 1;
        lo[i] = static_cast<std::int64_t>(std::floor(c[i].get_d() - half));
        hi[i] = static_cast<std::int64_t>(std::ceil(c[i].get_d() + half));
    }
    std::set<perdel::LatticeVector> verts(v.begin(), v.end());
    perdel::LatticeVector y = lo;
    while (true) {
        Rational d = qdist(q, y, c);
        if (d < r2) return false;
        if (d == r2 && !verts.count(y)) return false;
        std::size_t k = 0;
        while (k < g && y[k] == hi[k]) y[k] = lo[k], ++k;
        if (k == g) break;
        ++y[k];
    }
    return true;
}

inline std::size_t find_root(std::vector<std::size_t>& p, std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

/// Spanning trees by testing every (V-1)-subset of edges for acyclicity.
inline std::size_t count_spanning_trees(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    const std::size_t m = edges.size(), need = vertices - 1;
    std::size_t count = 0;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(need), true);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<std::size_t> p(vertices);
        std::iota(p.begin(), p.end(), 0);
        bool ok = true;
        for (std::size_t k = 0; k < m && ok; ++k) {
            if (!pick[k]) continue;
            auto a = find_root(p, edges[k].first), b = find_root(p, edges[k].second);
            if (a == b) ok = false;
            p[a] = b;
        }
        count += ok;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return count;
}

inline bool connected(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> p(vertices);
    std::iota(p.begin(), p.end(), 0);
    for (auto [a, b] : edges) p[find_root(p, a)] = find_root(p, b);
    for (std::size_t v = 0; v < vertices; ++v)
        if (find_root(p, v) != find_root(p, 0)) return false;
    return true;
}

}  // namespace oracle
