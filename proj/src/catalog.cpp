#include "perdel/catalog.hpp"

#include "perdel/delaunay.hpp"
#include "perdel/error.hpp"
#include "perdel/graphs.hpp"

namespace perdel {

namespace {

QuadraticForm checked(Matrix m, const std::string& name) {
    QuadraticForm q(std::move(m));
    if (ldlt_signature(q.matrix()).kind != Definiteness::positive_definite)
        throw Error("NotPositiveDefinite", "catalog form " + name + " failed its definiteness check");
    return q;
}

}  // namespace

QuadraticForm gram(const std::string& name, std::size_t n) {
    if (name == "Zg") {
        if (n == 0) throw Error("UnknownName", "Zg needs n >= 1");
        return checked(Matrix::identity(n), name);
    }
    if (name == "Dn") {
        if (n < 3) throw Error("UnknownName", "Dn needs n >= 3");
        // basis e1+e2, e2-e1, e3-e2, ..., en-e(n-1), stored as columns
        Matrix b(n, n);
        b(0, 0) = 1;
        b(1, 0) = 1;
        for (std::size_t k = 1; k < n; ++k) {
            b(k, k) = 1;
            b(k - 1, k) = -1;
        }
        return checked(b.transpose() * b, name);
    }
    if (name == "E8") {
        if (n != 8 && n != 0) throw Error("UnknownName", "E8 is fixed at n = 8");
        // Cartan matrix; node 2 hangs off node 4 of the chain 1-3-4-5-6-7-8
        const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
        Matrix m(8, 8);
        for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
        for (const auto& e : edges) {
            m(e[0] - 1, e[1] - 1) = -1;
            m(e[1] - 1, e[0] - 1) = -1;
        }
        return checked(m, name);
    }
    if (name == "A2") {
        if (n != 2 && n != 0) throw Error("UnknownName", "A2 is fixed at n = 2");
        return checked(Matrix{{2, 1}, {1, 2}}, name);
    }
    throw Error("UnknownName", "no catalog form named '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> catalog_names() {
    return {{"A2", "hexagonal form [[2,1],[1,2]]"},
            {"Dn", "checkerboard lattice D_n, n >= 3"},
            {"E8", "even unimodular lattice E8 (Cartan matrix)"},
            {"Zg", "standard lattice Z^n (identity form)"}};
}

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) throw Error("CatalogPostcondition", what);
}

bool is_cyclic_c6(const Cell& c) {
    if (c.affine_dim() != 4 || c.vertices().size() != 6 || c.facets().size() != 9) return false;
    // 2-neighborly: every pair of vertices spans an edge
    std::size_t edges = 0;
    for (const auto& f : c.proper_faces())
        if (f.dim == 1 && f.vertices.size() == 2) ++edges;
    return edges == 15;
}

}  // namespace

std::vector<std::size_t> c6_classes(const PeriodicDecomposition& d) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.cells().size(); ++i)
        if (d.cells()[i].vertices().size() == 6) out.push_back(i);
    return out;
}

PeriodicDecomposition delta_rt() {
    DualGraph k33{6, {}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) k33.edges.emplace_back(i, j);
    auto d = delaunay_decomposition(graphic_form(k33));
    expect(d.dim() == 4, "dimension 4");
    expect(d.cells().size() == 20, "20 maximal classes, got " + std::to_string(d.cells().size()));
    auto big = c6_classes(d);
    expect(big.size() == 2, "two 6-vertex classes");
    for (std::size_t i = 0; i < d.cells().size(); ++i)
        if (d.cells()[i].vertices().size() != 6) expect(d.cells()[i].vertices().size() == 5, "18 simplices");
    for (auto i : big) expect(is_cyclic_c6(d.cells()[i]), "6-vertex class is a cyclic polytope C6");
    std::vector<LatticeVector> neg;
    for (const auto& v : d.cells()[big[0]].vertices()) neg.push_back(-v);
    std::size_t image = 0;
    expect(d.locate(neg, &image, nullptr) && image == big[1], "x -> -x swaps the two C6 classes");
    return d;
}

std::vector<RtRefinement> rt_refinements() {
    auto rt = delta_rt();
    auto big = c6_classes(rt);
    auto ta = lifted_triangulations(rt.cells()[big[0]]);
    auto tb = lifted_triangulations(rt.cells()[big[1]]);
    expect(ta.size() == 2 && tb.size() == 2, "each C6 has exactly two triangulations");
    std::vector<RtRefinement> out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            std::vector<Cell> cells;
            for (std::size_t k = 0; k < rt.cells().size(); ++k)
                if (k != big[0] && k != big[1]) cells.push_back(rt.cells()[k]);
            cells.insert(cells.end(), ta[i].begin(), ta[i].end());
            cells.insert(cells.end(), tb[j].begin(), tb[j].end());
            RtRefinement r;
            r.choice_a = i;
            r.choice_b = j;
            r.decomposition = PeriodicDecomposition::from_cells(4, std::move(cells));
            r.decomposition.validate();
            r.centrally_symmetric = is_centrally_symmetric(r.decomposition);
            out.push_back(std::move(r));
        }
    return out;
}

}  // namespace perdel
