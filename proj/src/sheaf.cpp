#include "perdel/sheaf.hpp"

#include "perdel/error.hpp"

#include <algorithm>
#include <map>

namespace perdel {

std::string to_string(H0Method m) {
    switch (m) {
        case H0Method::general: return "general";
        case H0Method::simplicial: return "simplicial";
        case H0Method::pullback: return "pullback";
    }
    return "general";
}

std::size_t lhat_dim(const Cell& c) {
    return c.lattice_points().size() - static_cast<std::size_t>(c.affine_dim()) - 1;
}

namespace {

void require_polytopal(const PeriodicDecomposition& d) {
    if (d.fiber_rank() > 0) throw Error("NotPolytopal", "decomposition is a pullback; use h0_pullback");
}

StratumReport base_report(const PeriodicDecomposition& d, H0Method m) {
    StratumReport r;
    r.method = m;
    for (const auto& c : d.cells()) r.l_values.push_back(lhat_dim(c));
    r.volume = d.total_volume();
    return r;
}

// Barycentric coordinates of p with respect to affinely independent anchors.
std::vector<Rational> barycentric(const std::vector<LatticeVector>& anchors, const LatticeVector& p) {
    const std::size_t k = anchors.size() - 1, g = p.size();
    // least squares is unnecessary: p lies in the affine span, so pick k independent coordinates
    Matrix m(g, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < g; ++i) m(i, j) = static_cast<long>(anchors[j + 1][i] - anchors[0][i]);
    std::vector<std::size_t> rows;
    {
        EchelonAccumulator acc(k);
        for (std::size_t i = 0; i < g && rows.size() < k; ++i)
            if (acc.add_dense(m.row(i))) rows.push_back(i);
    }
    Matrix sq(k, k);
    std::vector<Rational> rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < k; ++j) sq(r, j) = m(rows[r], j);
        rhs[r] = static_cast<long>(p[rows[r]] - anchors[0][rows[r]]);
    }
    std::vector<Rational> mu = k ? *solve(sq, rhs) : std::vector<Rational>{};
    for (std::size_t i = 0; i < g; ++i) {
        Rational s = anchors[0][i];
        for (std::size_t j = 0; j < k; ++j) s += mu[j] * (anchors[j + 1][i] - anchors[0][i]);
        if (s != p[i]) throw Error("NotFaceFitting", "face lattice point outside the anchors' affine span");
    }
    std::vector<Rational> lambda(k + 1);
    lambda[0] = 1;
    for (std::size_t j = 0; j < k; ++j) {
        lambda[j + 1] = mu[j];
        lambda[0] -= mu[j];
    }
    return lambda;
}

}  // namespace

StratumReport h0_general(const PeriodicDecomposition& d, SectionSpaceStats* stats, GluingScope scope) {
    require_polytopal(d);
    const std::size_t g = d.dim();
    const auto& cells = d.cells();
    if (!cells.empty() && d.walls().empty()) throw Error("MissingWalls", "decomposition carries no walls");
    auto report = base_report(d, H0Method::general);

    std::vector<std::size_t> offset(cells.size() + 1, 0);
    std::vector<std::map<LatticeVector, std::size_t>> var(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& lp = cells[i].lattice_points();
        for (std::size_t k = 0; k < lp.size(); ++k) var[i][lp[k]] = offset[i] + k;
        offset[i + 1] = offset[i] + lp.size();
    }
    const std::size_t nvars = offset.back();
    EchelonAccumulator acc(nvars);
    std::size_t constraints = 0;

    // soundness: each per-cell affine function (1, x_1, ..., x_g on one cell) must satisfy every row
    auto check_affine = [&](const std::vector<std::pair<std::size_t, Rational>>& row) {
        std::map<std::size_t, std::vector<Rational>> per_cell;
        for (const auto& [v, coef] : row) {
            std::size_t c = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), v) - offset.begin()) - 1;
            const auto& x = cells[c].lattice_points()[v - offset[c]];
            auto& acc_c = per_cell[c];
            acc_c.resize(g + 1, 0);
            acc_c[0] += coef;
            for (std::size_t j = 0; j < g; ++j) acc_c[j + 1] += coef * x[j];
        }
        for (const auto& [c, sums] : per_cell)
            for (const auto& s : sums)
                if (s != 0) throw Error("GluingUnsound", "affine functions on a cell violate a gluing row");
    };

    for (const auto& w : d.walls()) {
        if (scope == GluingScope::codim1_only && !w.codim1(g)) continue;
        // F cap X = lattice points of a that are also lattice points of b + t
        std::vector<LatticeVector> pts;
        for (const auto& p : cells[w.a].lattice_points())
            if (var[w.b].count(p - w.t)) pts.push_back(p);
        if (pts.size() <= static_cast<std::size_t>(w.face_dim + 1)) continue;
        auto basis = affine_basis(pts);  // pts are sorted, so greedy = lexicographically smallest
        std::vector<LatticeVector> anchors;
        for (auto k : basis) anchors.push_back(pts[k]);
        for (const auto& p : pts) {
            if (std::find(anchors.begin(), anchors.end(), p) != anchors.end()) continue;
            auto lambda = barycentric(anchors, p);
            // (f_a - f_b(. - t))(p) = sum lambda_s (f_a - f_b(. - t))(s)
            std::map<std::size_t, Rational> row;
            row[var[w.a].at(p)] += 1;
            row[var[w.b].at(p - w.t)] -= 1;
            for (std::size_t s = 0; s < anchors.size(); ++s) {
                row[var[w.a].at(anchors[s])] -= lambda[s];
                row[var[w.b].at(anchors[s] - w.t)] += lambda[s];
            }
            std::vector<std::pair<std::size_t, Rational>> sparse;
            for (auto& [v, c] : row)
                if (c != 0) sparse.emplace_back(v, c);
            check_affine(sparse);
            acc.add(sparse);
            ++constraints;
        }
    }
    const std::size_t affine = cells.size() * (g + 1);
    const std::size_t kernel = nvars - acc.rank();
    if (kernel < affine) throw Error("GluingUnsound", "kernel smaller than the affine block");
    report.h0 = kernel - affine;
    if (stats) *stats = {nvars, constraints, acc.rank(), affine};
    return report;
}

StratumReport h0_simplicial(const PeriodicDecomposition& d) {
    require_polytopal(d);
    for (std::size_t i = 0; i < d.cells().size(); ++i)
        if (!is_simplicial_boundary(d.cells()[i]))
            throw Error("HypothesisViolated", "cell class " + std::to_string(i) + " has a non-simplex proper face");
    auto report = base_report(d, H0Method::simplicial);
    for (auto l : report.l_values) report.h0 += l;
    return report;
}

std::size_t h0_pullback(std::size_t base_h0, std::size_t a, std::size_t g) {
    if (a > g) throw Error("InvalidFiberRank", "fiber rank exceeds g");
    if (a == g) base_h0 = 0;
    return base_h0 + a * (a + 1) / 2 + a * (g - a);
}

StratumReport h0_auto(const PeriodicDecomposition& d, bool cross_check) {
    if (d.fiber_rank() > 0) {
        StratumReport r;
        r.method = H0Method::pullback;
        std::size_t base = 0;
        if (d.fiber_rank() < d.dim()) {
            auto b = h0_general(d.base());
            base = b.h0;
            r.l_values = b.l_values;
        }
        r.h0 = h0_pullback(base, d.fiber_rank(), d.dim());
        return r;
    }
    bool simplicial = true;
    for (const auto& c : d.cells()) simplicial = simplicial && is_simplicial_boundary(c);
    if (!simplicial) return h0_general(d);
    auto r = h0_simplicial(d);
    if (cross_check && h0_general(d).h0 != r.h0)
        throw Error("MethodMismatch", "simplicial and general h0 disagree");
    return r;
}

bool volume_upper_bound_check(const PeriodicDecomposition& d, const StratumReport& r) {
    return Integer(static_cast<unsigned long>(r.h0)) < d.total_volume();
}

bool volume_upper_bound_check(const PeriodicDecomposition& d) {
    return volume_upper_bound_check(d, h0_general(d));
}

}  // namespace perdel
