#include "perdel/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace perdel {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Error("ArithmeticOverflow", "Delaunay lift exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

// Fincke-Pohst enumeration of {x : x^T Q x <= bound} for an integer PD matrix Q.
// Doubles prune the search tree with slack; membership is decided exactly.
std::vector<LatticeVector> int_window(const std::vector<IntVec>& q, std::int64_t bound) {
    const std::size_t n = q.size();
    std::vector<std::vector<double>> u(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u[i][j] = static_cast<double>(q[i][j]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            u[j][i] = u[i][j];
            u[i][j] /= u[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) u[k][l] -= u[k][i] * u[i][l];
    }
    std::vector<LatticeVector> out;
    LatticeVector x(n, 0);
    const double slack = 1e-7 * (1.0 + static_cast<double>(bound));
    auto rec = [&](auto&& self, int i, double remaining) -> void {
        if (i < 0) {
            if (int_form_value(q, x) <= bound) out.push_back(x);
            return;
        }
        double center = 0;
        for (std::size_t j = i + 1; j < n; ++j) center -= u[i][j] * static_cast<double>(x[j]);
        double width = std::sqrt(std::max(0.0, remaining + slack) / u[i][i]);
        auto lo = static_cast<std::int64_t>(std::ceil(center - width - 1e-9));
        auto hi = static_cast<std::int64_t>(std::floor(center + width + 1e-9));
        for (std::int64_t v = lo; v <= hi; ++v) {
            x[i] = v;
            double d = static_cast<double>(v) - center;
            self(self, i - 1, remaining - u[i][i] * d * d);
        }
        x[i] = 0;
    };
    rec(rec, static_cast<int>(n) - 1, static_cast<double>(bound));
    std::sort(out.begin(), out.end());
    return out;
}

// Lift h(x) = A.x / D over a class representative: Qi(x) - h(x) vanishes on the vertices and is
// positive at every other lattice point.
struct Lift {
    IntVec a;
    std::int64_t d = 1;

    void reduce() {
        std::int64_t c = gcd_content(a);
        c = std::gcd(c, d);
        if (c > 1) {
            for (auto& x : a) x /= c;
            d /= c;
        }
    }
};

class Engine {
public:
    Engine(const QuadraticForm& q, const Rational& scale) : g_(q.dim()) {
        qi_ = q.integer_matrix(&mult_);
        Matrix qm(g_, g_);
        for (std::size_t i = 0; i < g_; ++i)
            for (std::size_t j = 0; j < g_; ++j) qm(i, j) = static_cast<long>(qi_[i][j]);
        Matrix inv(g_, g_);
        for (std::size_t j = 0; j < g_; ++j) {
            std::vector<Rational> e(g_, 0);
            e[j] = 1;
            auto col = solve(qm, e);
            for (std::size_t i = 0; i < g_; ++i) inv(i, j) = (*col)[i];
        }
        qinv_ = std::move(inv);
        std::int64_t diag = 1;
        std::int64_t trace = 0;
        for (std::size_t i = 0; i < g_; ++i) {
            diag = std::max(diag, qi_[i][i]);
            trace += qi_[i][i];
        }
        cap_ = 4 * trace;
        Rational start = Rational(diag) * scale;
        if (start < diag) start = diag;
        cap_ = std::max<std::int64_t>(cap_, to_int64(start.get_num() / start.get_den()));
        set_window(to_int64(start.get_num() / start.get_den()));
    }

    PeriodicDecomposition run() {
        std::vector<LatticeVector> first;
        Lift lift = initial_cell(&first);
        std::map<std::vector<LatticeVector>, std::size_t> index;
        std::vector<Cell> cells;
        std::vector<Lift> lifts;
        std::deque<std::size_t> todo;
        auto intern = [&](std::vector<LatticeVector> verts, const Lift& l) {
            auto [it, fresh] = index.emplace(verts, cells.size());
            if (fresh) {
                cells.push_back(convex_hull(std::move(verts)));
                lifts.push_back(l);
                todo.push_back(it->second);
            }
        };
        intern(first, lift);
        std::set<std::vector<LatticeVector>> pivoted;
        while (!todo.empty()) {
            std::size_t i = todo.front();
            todo.pop_front();
            const Cell cell = cells[i];
            const Lift base = lifts[i];
            for (const auto& f : cell.facets()) {
                std::vector<LatticeVector> face;
                for (auto k : f.vertices) face.push_back(cell.vertices()[k]);
                auto key = canonical_translate(face);
                if (!pivoted.insert(key).second) continue;
                std::vector<LatticeVector> verts;
                Lift next = pivot(base, face, f.normal, &verts);
                intern(std::move(verts), next);
            }
        }
        auto d = PeriodicDecomposition::from_cells(g_, std::move(cells));
        d.validate();
        return d;
    }

private:
    void set_window(std::int64_t r) {
        radius_ = r;
        pts_ = int_window(qi_, r);
        qv_.clear();
        for (const auto& p : pts_) qv_.push_back(int_form_value(qi_, p));
    }

    // Enlarges the window until the circumsphere of the lift a/d fits; true if it already did.
    bool certified(const std::vector<Rational>& a) {
        Rational need = 0;
        auto qa = qinv_ * a;
        for (std::size_t i = 0; i < g_; ++i) need += a[i] * qa[i];
        // 4 r^2 = a^T Qi^-1 a; the closed sphere lies in {Qi(x) <= 4 r^2}
        if (need <= radius_) return true;
        std::int64_t want = to_int64(need.get_num() / need.get_den() + 1);
        if (want > cap_) throw Error("WindowUnstable", "circumsphere exceeds the window cap 4*trace");
        set_window(std::min(cap_, std::max(2 * radius_, want)));
        return false;
    }

    static std::vector<Rational> as_rational(const Lift& l) {
        std::vector<Rational> a;
        for (auto x : l.a) a.emplace_back(Rational(x, l.d));
        for (auto& x : a) x.canonicalize();
        return a;
    }

    // Tilt the zero lift until its contact set with the lattice is full-dimensional.
    Lift initial_cell(std::vector<LatticeVector>* verts) {
        while (true) {
            std::vector<Rational> a(g_, 0);
            std::vector<LatticeVector> zero{LatticeVector(g_, 0)};
            while (affine_dimension(zero) < static_cast<int>(g_)) {
                Matrix rows(zero.size() - 1, g_);
                for (std::size_t r = 1; r < zero.size(); ++r)
                    for (std::size_t c = 0; c < g_; ++c) rows(r - 1, c) = static_cast<long>(zero[r][c]);
                LatticeVector ell(g_, 0);
                if (zero.size() == 1) {
                    ell[0] = 1;
                } else {
                    Matrix k = kernel_basis(rows);
                    for (std::size_t c = 0; c < g_; ++c) ell[c] = to_int64(k(c, 0).get_num());
                }
                bool have = false;
                Rational mu;
                for (std::size_t p = 0; p < pts_.size(); ++p) {
                    std::int64_t l = dot(ell, pts_[p]);
                    if (l <= 0) continue;
                    Rational f = qv_[p];
                    for (std::size_t c = 0; c < g_; ++c) f -= a[c] * pts_[p][c];
                    f /= l;
                    if (!have || f < mu) mu = f, have = true;
                }
                for (std::size_t c = 0; c < g_; ++c) a[c] += mu * ell[c];
                zero.clear();
                for (std::size_t p = 0; p < pts_.size(); ++p) {
                    Rational f = qv_[p];
                    for (std::size_t c = 0; c < g_; ++c) f -= a[c] * pts_[p][c];
                    if (f == 0) zero.push_back(pts_[p]);
                }
                std::stable_partition(zero.begin(), zero.end(),
                                      [&](const LatticeVector& v) { return v == LatticeVector(g_, 0); });
            }
            if (!certified(a)) continue;
            Lift l;
            Integer den = lcm_of_denominators(a);
            l.d = to_int64(den);
            for (auto& x : a) {
                Rational s = x * den;
                l.a.push_back(to_int64(s.get_num()));
            }
            l.reduce();
            LatticeVector m;
            *verts = canonical_translate(zero, &m);
            return translate(l, m);
        }
    }

    // Lift of the same cell seen from vertex m: A - 2 D Qi m.
    Lift translate(const Lift& l, const LatticeVector& m) const {
        Lift out{l.a, l.d};
        for (std::size_t i = 0; i < g_; ++i) {
            i128 s = 0;
            for (std::size_t j = 0; j < g_; ++j) s += static_cast<i128>(qi_[i][j]) * m[j];
            out.a[i] = narrow(out.a[i] - 2 * static_cast<i128>(l.d) * s);
        }
        out.reduce();
        return out;
    }

    // Neighbor across a facet (inner normal n) of a representative with lift `base`.
    Lift pivot(const Lift& base, const std::vector<LatticeVector>& face, const LatticeVector& n,
               std::vector<LatticeVector>* verts) {
        const LatticeVector v = face.front();
        const Lift lv = translate(base, v);
        while (true) {
            bool have = false;
            i128 nb = 0, mb = 1;
            std::vector<std::size_t> arg;
            for (std::size_t p = 0; p < pts_.size(); ++p) {
                std::int64_t m = -dot(n, pts_[p]);
                if (m <= 0) continue;
                i128 num = static_cast<i128>(lv.d) * qv_[p];
                for (std::size_t c = 0; c < g_; ++c) num -= static_cast<i128>(lv.a[c]) * pts_[p][c];
                if (num > (static_cast<i128>(1) << 62) || num < 0)
                    throw Error("ArithmeticOverflow", "pivot ratio out of range");
                i128 lhs = num * mb, rhs = nb * m;
                if (!have || lhs < rhs) {
                    have = true;
                    nb = num;
                    mb = m;
                    arg.assign(1, p);
                } else if (lhs == rhs) {
                    arg.push_back(p);
                }
            }
            if (!have) throw Error("WindowUnstable", "no lattice point beyond a facet inside the window");
            Lift next;
            next.d = narrow(static_cast<i128>(lv.d) * mb);
            next.a.resize(g_);
            for (std::size_t c = 0; c < g_; ++c) next.a[c] = narrow(mb * lv.a[c] - nb * n[c]);
            next.reduce();
            if (!certified(as_rational(next))) continue;
            std::vector<LatticeVector> z;
            for (const auto& f : face) z.push_back(f - v);
            for (auto p : arg) z.push_back(pts_[p]);
            LatticeVector m;
            *verts = canonical_translate(z, &m);
            return translate(next, m);
        }
    }

    std::size_t g_;
    std::vector<IntVec> qi_;
    Rational mult_;
    Matrix qinv_;
    std::int64_t cap_ = 0;
    std::int64_t radius_ = 0;
    std::vector<LatticeVector> pts_;
    std::vector<std::int64_t> qv_;
};

}  // namespace

Rational window_radius(const QuadraticForm& q) {
    Rational t = 0;
    for (std::size_t i = 0; i < q.dim(); ++i) t += q.matrix()(i, i);
    return 4 * t;
}

std::vector<LatticeVector> lattice_window(const QuadraticForm& q, const Rational& radius) {
    if (ldlt_signature(q.matrix()).kind != Definiteness::positive_definite)
        throw Error("NotPositiveDefinite", "window enumeration needs a positive definite form");
    Rational mult;
    auto qi = q.integer_matrix(&mult);
    Rational b = radius * mult;
    if (b < 0) return {};
    return int_window(qi, to_int64(b.get_num() / b.get_den()));
}

EmptySphereCertificate verify_empty_sphere(const Cell& c, const QuadraticForm& q,
                                           const std::vector<LatticeVector>& window) {
    const std::size_t g = q.dim();
    const auto& vs = c.vertices();
    auto basis = affine_basis(vs);
    const LatticeVector& v0 = vs[basis.front()];
    const std::size_t k = basis.size() - 1;
    auto qmul = [&](const LatticeVector& x) {
        std::vector<Rational> r(g, 0);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) r[i] += q.matrix()(i, j) * x[j];
        return r;
    };
    auto rdot = [](const std::vector<Rational>& a, const LatticeVector& b) {
        Rational s = 0;
        for (std::size_t i = 0; i < b.size(); ++i) s += a[i] * b[i];
        return s;
    };
    // center = v0 + E beta with 2 E^T Q E beta = (q(v_i) - q(v0)) - 2 E_i^T Q v0
    std::vector<LatticeVector> e;
    for (std::size_t i = 1; i <= k; ++i) e.push_back(vs[basis[i]] - v0);
    std::vector<Rational> center(v0.begin(), v0.end());
    if (k > 0) {
        Matrix m(k, k);
        std::vector<Rational> rhs(k);
        auto qv0 = qmul(v0);
        for (std::size_t i = 0; i < k; ++i) {
            auto qe = qmul(e[i]);
            for (std::size_t j = 0; j < k; ++j) m(i, j) = 2 * rdot(qe, e[j]);
            rhs[i] = q.at(vs[basis[i + 1]]) - q.at(v0) - 2 * rdot(qv0, e[i]);
        }
        auto beta = solve(m, rhs);
        if (!beta) throw Error("NoCircumsphere", "degenerate vertex set");
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < g; ++j) center[j] += (*beta)[i] * e[i][j];
    }
    auto dist = [&](const LatticeVector& x) {
        std::vector<Rational> d(g);
        for (std::size_t i = 0; i < g; ++i) d[i] = Rational(x[i]) - center[i];
        return q(d);
    };
    EmptySphereCertificate cert{center, dist(v0)};
    for (const auto& v : vs)
        if (dist(v) != cert.squared_radius) throw Error("NoCircumsphere", "vertices are not co-spherical under q");
    // report the deepest offending point
    const LatticeVector* worst = nullptr;
    Rational depth;
    for (const auto& y : window) {
        Rational dy = dist(y);
        if (dy < cert.squared_radius && (!worst || dy < depth)) worst = &y, depth = dy;
    }
    if (worst) {
        std::string s = "(";
        for (std::size_t i = 0; i < worst->size(); ++i) s += (i ? "," : "") + std::to_string((*worst)[i]);
        throw SphereNotEmpty(*worst, "lattice point " + s + ") strictly inside the circumsphere");
    }
    return cert;
}

PeriodicDecomposition delaunay_decomposition(const QuadraticForm& q, const DelaunayOptions& opts) {
    if (q.dim() == 0) throw Error("NotPositiveDefinite", "empty form");
    if (ldlt_signature(q.matrix()).kind != Definiteness::positive_definite)
        throw Error("NotPositiveDefinite", "Delaunay decomposition needs a positive definite form");
    if (opts.window_scale <= 0) throw Error("InvalidOption", "window scale must be positive");
    return Engine(q, opts.window_scale).run();
}

}  // namespace perdel
