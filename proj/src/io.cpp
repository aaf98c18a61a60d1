#include "perdel/io.hpp"

#include "perdel/error.hpp"

namespace perdel {

namespace {

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

LatticeVector lattice_vector(const Json& j) {
    if (!j.is_array()) throw InputError("lattice vector must be an array of integers");
    LatticeVector v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError("lattice vector entries must be integers");
        v.push_back(x.get<std::int64_t>());
    }
    return v;
}

std::size_t count(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw InputError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    throw InputError("rational must be a \"p/q\" string or an integer");
}

Json vector_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
    return rows;
}

Json form_to_json(const QuadraticForm& q) { return Json{{"dim", q.dim()}, {"matrix", matrix_json(q.matrix())}}; }

QuadraticForm form_from_json(const Json& j) {
    return guarded([&] {
        const Json& rows = j.is_object() ? j.at("matrix") : j;
        if (!rows.is_array() || rows.empty()) throw InputError("form matrix must be a nonempty array of rows");
        const std::size_t n = rows.size();
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n) throw InputError("form matrix must be square");
            for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(rows[i][k]);
        }
        if (!m.is_symmetric()) throw InputError("form matrix must be symmetric");
        return QuadraticForm(m);
    });
}

Json cell_to_json(const Cell& c) {
    Json v = Json::array();
    for (const auto& x : c.vertices()) v.push_back(x);
    return Json{{"dim", c.ambient_dim()}, {"vertices", v}};
}

Cell cell_from_json(const Json& j) {
    return guarded([&] {
        std::size_t g = count(j.at("dim"), "cell dim");
        std::vector<LatticeVector> pts;
        for (const auto& v : j.at("vertices")) {
            pts.push_back(lattice_vector(v));
            if (pts.back().size() != g) throw InputError("vertex length differs from cell dim");
        }
        if (pts.empty()) throw InputError("cell needs at least one vertex");
        std::size_t listed = pts.size();
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        Cell c = convex_hull(pts);
        if (c.vertices().size() != listed) throw InputError("cell vertices must be exactly its extreme points");
        return c;
    });
}

Json decomposition_to_json(const PeriodicDecomposition& d) {
    Json cells = Json::array(), walls = Json::array();
    for (const auto& c : d.cells()) cells.push_back(cell_to_json(c));
    for (const auto& w : d.walls()) walls.push_back(Json{{"a", w.a}, {"b", w.b}, {"t", w.t}, {"face_dim", w.face_dim}});
    return Json{{"dim", d.dim()}, {"fiber_rank", d.fiber_rank()}, {"cells", cells}, {"walls", walls}};
}

PeriodicDecomposition decomposition_from_json(const Json& j) {
    return guarded([&] {
        std::size_t g = count(j.at("dim"), "dim");
        std::size_t a = j.contains("fiber_rank") ? count(j.at("fiber_rank"), "fiber_rank") : 0;
        if (a > g) throw InputError("fiber_rank exceeds dim");
        std::vector<Cell> cells;
        if (!j.at("cells").is_array()) throw InputError("cells must be an array");
        for (const auto& c : j.at("cells")) {
            cells.push_back(cell_from_json(c));
            if (cells.back().ambient_dim() != g - a) throw InputError("cell dim must be dim - fiber_rank");
        }
        if (a > 0) {
            auto d = PeriodicDecomposition::pullback(g, a, std::move(cells));
            if (a < g) d.base().validate();
            return d;
        }
        auto d = PeriodicDecomposition::from_cells(g, std::move(cells));
        d.validate();
        return d;
    });
}

Json report_to_json(const StratumReport& r) {
    Json j{{"h0", r.h0}, {"method", to_string(r.method)}, {"l_values", r.l_values}, {"volume", r.volume.get_si()}};
    if (r.voronoi_cone_dim) j["cone_dim"] = *r.voronoi_cone_dim;
    if (r.stratum_dim) j["stratum_dim"] = *r.stratum_dim;
    if (r.et_flag) j["et_flag"] = *r.et_flag;
    return j;
}

Json cone_to_json(const ConeCertificate& c) {
    Json j{{"delaunay", c.delaunay()}, {"equality_solution_dim", c.equality_solution_dim}, {"form_dim", c.form_dim}};
    j["cone_dim"] = c.cone_dim ? Json(*c.cone_dim) : Json(nullptr);
    j["stratum_dim"] = c.stratum_dim ? Json(*c.stratum_dim) : Json(nullptr);
    j["witness"] = c.witness ? matrix_json(c.witness->matrix()) : Json(nullptr);
    if (c.farkas) {
        j["farkas"] = Json{{"lambda", vector_json(c.farkas->lambda)},
                           {"mu", vector_json(c.farkas->mu)},
                           {"inequalities", c.farkas->inequalities},
                           {"equalities", c.farkas->equalities},
                           {"coordinates", "q_ij for i <= j, row by row"}};
    } else {
        j["farkas"] = nullptr;
    }
    return j;
}

Json graph_to_json(const DualGraph& g) {
    Json e = Json::array();
    for (const auto& [u, v] : g.edges) e.push_back({u, v});
    return Json{{"vertices", g.vertex_count}, {"edges", e}};
}

DualGraph graph_from_json(const Json& j) {
    return guarded([&] {
        DualGraph g;
        g.vertex_count = count(j.at("vertices"), "vertices");
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of vertex indices");
            std::size_t u = count(e[0], "edge endpoint"), v = count(e[1], "edge endpoint");
            if (u >= g.vertex_count || v >= g.vertex_count) throw InputError("edge endpoint out of range");
            g.edges.emplace_back(u, v);
        }
        return g;
    });
}

Json torelli_to_json(const TorelliReport& r) {
    Json inv = Json::object();
    for (const auto& [k, v] : r.vertex_counts) inv[std::to_string(k)] = v;
    Json j{{"name", r.name},
           {"genus", r.genus},
           {"planar", r.planar},
           {"class_count", r.class_count},
           {"vertex_counts", inv},
           {"h0", r.h0},
           {"conjecture_consistent", r.conjecture_consistent}};
    j["cone_dim"] = r.cone_dim ? Json(*r.cone_dim) : Json(nullptr);
    j["stratum_dim"] = r.stratum_dim ? Json(*r.stratum_dim) : Json(nullptr);
    j["et_flag"] = r.et_flag ? Json(*r.et_flag) : Json(nullptr);
    if (r.witness)
        j["kuratowski_witness"] =
            Json{{"kind", r.witness->kind}, {"edges", r.witness->edges}, {"branch_vertices", r.witness->branch_vertices}};
    else
        j["kuratowski_witness"] = nullptr;
    return j;
}

WeightedSupport support_from_json(const Json& j) {
    return guarded([&] {
        WeightedSupport s;
        for (const auto& p : j.at("points")) s.points.push_back(lattice_vector(p));
        for (const auto& w : j.at("weights")) s.weights.push_back(rational_from_json(w));
        if (s.points.size() != s.weights.size()) throw InputError("points and weights differ in length");
        return s;
    });
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace perdel
