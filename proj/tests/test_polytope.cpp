#include "oracles.hpp"

#include "perdel/error.hpp"
#include "perdel/polytope.hpp"

#include <doctest.h>

#include <set>

using namespace perdel;

namespace {

std::vector<LatticeVector> cube_vertices(std::size_t g) {
    std::vector<LatticeVector> out;
    for (std::size_t mask = 0; mask < (1u << g); ++mask) {
        LatticeVector v(g);
        for (std::size_t j = 0; j < g; ++j) v[j] = (mask >> j) & 1;
        out.push_back(v);
    }
    return out;
}

std::vector<LatticeVector> cross_polytope(std::size_t g) {
    std::vector<LatticeVector> out;
    for (std::size_t j = 0; j < g; ++j)
        for (int s : {-1, 1}) {
            LatticeVector v(g, 0);
            v[j] = s;
            out.push_back(v);
        }
    return out;
}

}  // namespace

TEST_CASE("convex hull examples") {
    Cell sq = convex_hull(cube_vertices(2));
    CHECK(sq.vertices().size() == 4);
    CHECK(sq.facets().size() == 4);
    CHECK(sq.affine_dim() == 2);

    Cell seg = convex_hull({{0, 0}, {1, 0}, {2, 0}});
    CHECK(seg.affine_dim() == 1);
    CHECK(seg.vertices() == std::vector<LatticeVector>{{0, 0}, {2, 0}});
    CHECK(seg.lattice_points().size() == 3);
    CHECK(seg.facets().size() == 2);

    Cell point = convex_hull({{3, -1}});
    CHECK(point.affine_dim() == 0);
    CHECK(point.lattice_points().size() == 1);
}

TEST_CASE("crosspolytope facets match brute-force sign patterns") {
    Cell b3 = convex_hull(cross_polytope(3));
    CHECK(b3.vertices().size() == 6);
    // oracle: s.x <= 1 is a facet for every sign vector s, and these are all of them
    std::set<LatticeVector> expected;
    for (int mask = 0; mask < 8; ++mask) {
        LatticeVector s(3);
        for (int j = 0; j < 3; ++j) s[j] = (mask >> j) & 1 ? 1 : -1;
        int tight = 0;
        for (const auto& v : b3.vertices()) {
            CHECK(dot(s, v) <= 1);
            tight += dot(s, v) == 1;
        }
        if (tight == 3) expected.insert(-s);  // inner normal
    }
    std::set<LatticeVector> got;
    for (const auto& f : b3.facets()) {
        got.insert(f.normal);
        CHECK(f.offset == -1);
    }
    CHECK(got == expected);
    CHECK(got.size() == 8);
}

TEST_CASE("lattice points") {
    CHECK(convex_hull(cube_vertices(2)).lattice_points().size() == 4);
    CHECK(convex_hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}}).lattice_points().size() == 9);
    CHECK(convex_hull(cross_polytope(4)).lattice_points().size() == 9);
    // triangle embedded in Z^3
    Cell tri = convex_hull({{0, 0, 0}, {2, 0, 2}, {0, 2, 2}});
    CHECK(tri.affine_dim() == 2);
    CHECK(tri.equations().size() == 1);
    CHECK(tri.lattice_points().size() == 6);
}

TEST_CASE("normalized volume") {
    CHECK(normalized_volume(convex_hull(cube_vertices(2))) == 2);
    CHECK(normalized_volume(convex_hull(cube_vertices(3))) == 6);
    Cell b3 = convex_hull(cross_polytope(3));
    CHECK(normalized_volume(b3) == 8);
    // cross-check: 8 orthant simplices conv(0, s1 e1, s2 e2, s3 e3), each of |det| 1
    Integer sum = 0;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<IntVec> rows = {{(mask & 1) ? 1 : -1, 0, 0}, {0, (mask & 2) ? 1 : -1, 0}, {0, 0, (mask & 4) ? 1 : -1}};
        sum += abs(int_determinant(rows));
    }
    CHECK(sum == 8);
    CHECK_THROWS_AS(normalized_volume(convex_hull({{0, 0}, {1, 1}})), Error);
}

TEST_CASE("simplicial boundary") {
    CHECK(is_simplicial_boundary(convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    CHECK(is_simplicial_boundary(convex_hull(cube_vertices(2))));
    CHECK_FALSE(is_simplicial_boundary(convex_hull(cube_vertices(3))));
    CHECK(is_simplicial_boundary(convex_hull(cross_polytope(4))));
}

TEST_CASE("faces of the 3-cube") {
    Cell c = convex_hull(cube_vertices(3));
    auto faces = c.proper_faces();
    int count[3] = {0, 0, 0};
    for (const auto& f : faces) count[f.dim]++;
    CHECK(count[0] == 8);
    CHECK(count[1] == 12);
    CHECK(count[2] == 6);
}

TEST_CASE("hull invariants on random point sets") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t g = 2 + trial % 3;
        std::size_t n = g + 2 + rng() % 8;
        std::vector<LatticeVector> pts;
        for (std::size_t i = 0; i < n; ++i) {
            LatticeVector p(g);
            for (auto& x : p) x = static_cast<std::int64_t>(rng() % 5) - 2;
            pts.push_back(p);
        }
        Cell c = convex_hull(pts);
        for (const auto& p : pts) CHECK(c.contains(p));
        // idempotence
        Cell again = convex_hull(c.vertices());
        CHECK(again.vertices() == c.vertices());
        CHECK(again.facets().size() == c.facets().size());
        // vertices are lattice points
        std::set<LatticeVector> lp(c.lattice_points().begin(), c.lattice_points().end());
        for (const auto& v : c.vertices()) CHECK(lp.count(v) == 1);
        for (const auto& p : pts) CHECK(lp.count(p) == 1);
        if (c.is_full_dimensional()) {
            CHECK(c.facets().size() >= g + 1);
            // irredundant: every facet spans a hyperplane
            for (const auto& f : c.facets()) {
                std::vector<LatticeVector> fv;
                for (auto i : f.vertices) fv.push_back(c.vertices()[i]);
                CHECK(affine_dimension(fv) == static_cast<int>(g) - 1);
            }
            // volume invariance under unimodular maps and translation
            auto u = oracle::random_unimodular(rng, g);
            LatticeVector t(g);
            for (auto& x : t) x = static_cast<std::int64_t>(rng() % 7) - 3;
            std::vector<LatticeVector> moved;
            for (const auto& v : c.vertices()) moved.push_back(oracle::apply(u, v) + t);
            CHECK(normalized_volume(convex_hull(moved)) == normalized_volume(c));
            CHECK(convex_hull(moved).lattice_points().size() == c.lattice_points().size());
        }
    }
}
