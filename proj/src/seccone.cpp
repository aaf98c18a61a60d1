#include "perdel/seccone.hpp"

#include "perdel/delaunay.hpp"
#include "perdel/error.hpp"
#include "perdel/lp.hpp"

#include <map>
#include <set>

namespace perdel {

std::vector<std::pair<std::size_t, std::size_t>> form_coordinates(std::size_t g) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) out.emplace_back(i, j);
    return out;
}

namespace {

// q(x) as a linear function of the coordinates q_ij
std::vector<Rational> features(const LatticeVector& x) {
    std::vector<Rational> f;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i; j < x.size(); ++j) f.emplace_back((i == j ? 1 : 2) * x[i] * x[j]);
    return f;
}

// Affine lift of q over one cell, interpolating q on an affine basis of its vertices.
class CellLift {
public:
    explicit CellLift(const Cell& c) {
        const auto& vs = c.vertices();
        for (auto k : affine_basis(vs)) anchors_.push_back(vs[k]);
        const std::size_t g = c.ambient_dim();
        Matrix m(g, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) m(i, j) = static_cast<long>(anchors_[j + 1][i] - anchors_[0][i]);
        inv_ = Matrix(g, g);
        for (std::size_t j = 0; j < g; ++j) {
            std::vector<Rational> e(g, 0);
            e[j] = 1;
            auto col = solve(m, e);
            for (std::size_t i = 0; i < g; ++i) inv_(i, j) = (*col)[i];
        }
        for (const auto& a : anchors_) anchor_features_.push_back(features(a));
    }

    // coefficients r with r.q = q(x) - lift(x)
    IntVec excess_row(const LatticeVector& x) const {
        const std::size_t g = x.size();
        std::vector<Rational> d(g);
        for (std::size_t i = 0; i < g; ++i) d[i] = x[i] - anchors_[0][i];
        auto mu = inv_ * d;
        std::vector<Rational> beta(g + 1);
        beta[0] = 1;
        for (std::size_t j = 0; j < g; ++j) {
            beta[j + 1] = mu[j];
            beta[0] -= mu[j];
        }
        auto r = features(x);
        for (std::size_t s = 0; s <= g; ++s)
            for (std::size_t k = 0; k < r.size(); ++k) r[k] -= beta[s] * anchor_features_[s][k];
        return primitive_integer(r);
    }

private:
    std::vector<LatticeVector> anchors_;
    std::vector<std::vector<Rational>> anchor_features_;
    Matrix inv_;
};

Matrix to_matrix(const std::vector<IntVec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    return m;
}

QuadraticForm form_from_coordinates(const std::vector<Rational>& v, std::size_t g) {
    Matrix q(g, g);
    std::size_t k = 0;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j, ++k) q(i, j) = q(j, i) = v[k];
    return QuadraticForm(q);
}

}  // namespace

bool FarkasCertificate::valid() const {
    if (lambda.size() != inequalities.size() || mu.size() != equalities.size()) return false;
    Rational total = 0;
    for (const auto& l : lambda) {
        if (l < 0) return false;
        total += l;
    }
    if (total != 1) return false;
    const std::size_t n = inequalities.empty() ? 0 : inequalities.front().size();
    for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * inequalities[i][k];
        for (std::size_t i = 0; i < mu.size(); ++i) s -= mu[i] * equalities[i][k];
        if (s != 0) return false;
    }
    return true;
}

std::vector<Rational> form_vector(const QuadraticForm& q) {
    std::vector<Rational> v;
    for (const auto& [i, j] : form_coordinates(q.dim())) v.push_back(q.matrix()(i, j));
    return v;
}

ConeSystem cone_system(const PeriodicDecomposition& d) {
    if (d.fiber_rank() > 0) throw Error("NotPolytopal", "secondary cone needs a polytopal decomposition");
    const std::size_t g = d.dim();
    const auto& cells = d.cells();
    std::vector<CellLift> lifts;
    for (const auto& c : cells) lifts.emplace_back(c);

    ConeSystem sys;
    std::set<IntVec> eq_set, ineq_set;
    auto push = [](std::set<IntVec>& seen, std::vector<IntVec>& out, IntVec r) {
        if (gcd_content(r) == 0) return;
        if (seen.insert(r).second) out.push_back(std::move(r));
    };
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (const auto& x : cells[i].lattice_points()) push(eq_set, sys.equalities, lifts[i].excess_row(x));

    // strict folding across every codimension-1 wall, seen from both sides
    for (const auto& w : d.walls()) {
        if (!w.codim1(g)) continue;
        std::set<LatticeVector> face(w.face_vertices.begin(), w.face_vertices.end());
        for (const auto& v : cells[w.b].vertices()) {
            LatticeVector y = v + w.t;
            if (!face.count(y)) push(ineq_set, sys.inequalities, lifts[w.a].excess_row(y));
        }
        for (const auto& v : cells[w.a].vertices())
            if (!face.count(v)) push(ineq_set, sys.inequalities, lifts[w.b].excess_row(v - w.t));
    }
    if (sys.inequalities.empty()) throw Error("NotFaceFitting", "no codimension-1 walls");
    return sys;
}

ConeCertificate secondary_cone(const PeriodicDecomposition& d) {
    const std::size_t g = d.dim(), n = g * (g + 1) / 2;
    const auto& cells = d.cells();
    ConeSystem sys = cone_system(d);
    const auto& eqs = sys.equalities;
    const auto& ineqs = sys.inequalities;

    ConeCertificate cert;
    cert.form_dim = n;
    Matrix e = to_matrix(eqs, n);
    Matrix k = eqs.empty() ? Matrix::identity(n) : kernel_basis(e);
    const std::size_t kd = k.cols();
    cert.equality_solution_dim = kd;

    // maximize eps subject to R K w >= eps, eps <= 1, with w = w+ - w-
    Matrix r = to_matrix(ineqs, n);
    Matrix rk = r * k;
    const std::size_t m = ineqs.size();
    Matrix a(m + 1, 2 * kd + 1);
    std::vector<Rational> b(m + 1, 0), c(2 * kd + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < kd; ++j) {
            a(i, j) = -rk(i, j);
            a(i, kd + j) = rk(i, j);
        }
        a(i, 2 * kd) = 1;
    }
    a(m, 2 * kd) = 1;
    b[m] = 1;
    c[2 * kd] = 1;
    auto lp = lp_maximize(a, b, c);

    if (lp.value > 0) {
        std::vector<Rational> w(kd);
        for (std::size_t j = 0; j < kd; ++j) w[j] = lp.x[j] - lp.x[kd + j];
        auto qv = k * w;
        auto prim = primitive_integer(qv);
        std::vector<Rational> qi(prim.begin(), prim.end());
        QuadraticForm q = form_from_coordinates(qi, g);
        if (ldlt_signature(q.matrix()).kind != Definiteness::positive_definite)
            throw Error("WitnessNotDelaunay", "strictly feasible form is not positive definite");
        auto back = delaunay_decomposition(q);
        if (back.cells().size() != cells.size())
            throw Error("WitnessNotDelaunay", "round trip changed the number of cell classes");
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (!(back.cells()[i] == cells[i]))
                throw Error("WitnessNotDelaunay", "round trip changed cell class " + std::to_string(i));
        cert.witness = q;
        cert.cone_dim = kd;
        cert.stratum_dim = n - kd;
        return cert;
    }

    FarkasCertificate f;
    f.inequalities = ineqs;
    f.equalities = eqs;
    Rational total = 0;
    for (std::size_t i = 0; i < m; ++i) total += lp.dual[i];
    for (std::size_t i = 0; i < m; ++i) f.lambda.push_back(lp.dual[i] / total);
    // lambda^T R lies in the row space of E; recover mu from an independent subset of rows
    std::vector<Rational> target(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) target[j] += f.lambda[i] * ineqs[i][j];
    f.mu.assign(eqs.size(), 0);
    std::vector<std::size_t> basis_rows;
    {
        EchelonAccumulator acc(n);
        for (std::size_t i = 0; i < eqs.size(); ++i)
            if (acc.add_dense(std::vector<Rational>(eqs[i].begin(), eqs[i].end()))) basis_rows.push_back(i);
    }
    if (!basis_rows.empty()) {
        // least-squares-free: solve (B B^T) z = B target, where B holds the independent rows
        const std::size_t kb = basis_rows.size();
        Matrix bbt(kb, kb);
        std::vector<Rational> rhs(kb, 0);
        for (std::size_t x = 0; x < kb; ++x) {
            for (std::size_t y = 0; y < kb; ++y) {
                Rational s = 0;
                for (std::size_t j = 0; j < n; ++j) s += eqs[basis_rows[x]][j] * eqs[basis_rows[y]][j];
                bbt(x, y) = s;
            }
            for (std::size_t j = 0; j < n; ++j) rhs[x] += eqs[basis_rows[x]][j] * target[j];
        }
        auto z = solve(bbt, rhs);
        for (std::size_t x = 0; x < kb; ++x) f.mu[basis_rows[x]] = (*z)[x];
    }
    if (!f.valid()) throw Error("FarkasInvalid", "extracted infeasibility certificate does not verify");
    cert.farkas = std::move(f);
    return cert;
}

StratumReport et_detect(const PeriodicDecomposition& d, const ConeCertificate& cone) {
    if (!cone.delaunay()) throw Error("NotDelaunay", "decomposition has no witness form");
    StratumReport r = h0_general(d);
    r.voronoi_cone_dim = cone.cone_dim;
    r.stratum_dim = cone.stratum_dim;
    r.et_flag = r.h0 > *cone.stratum_dim;
    return r;
}

StratumReport et_detect(const PeriodicDecomposition& d) { return et_detect(d, secondary_cone(d)); }

}  // namespace perdel
