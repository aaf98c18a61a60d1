#include "doctest.h"
#include "oracles.hpp"

#include "perdel/delaunay.hpp"

#include <set>

using namespace perdel;

namespace {

QuadraticForm identity_form(std::size_t g) { return QuadraticForm(Matrix::identity(g)); }

QuadraticForm d4_form() {
    Matrix b{{1, -1, 0, 0}, {1, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}};  // columns e1+e2, e2-e1, e3-e2, e4-e3
    return QuadraticForm(b.transpose() * b);
}

std::vector<LatticeVector> box(int k, std::size_t g) {
    std::vector<LatticeVector> out;
    LatticeVector x(g, -k);
    while (true) {
        out.push_back(x);
        std::size_t c = 0;
        while (c < g && x[c] == k) x[c] = -k, ++c;
        if (c == g) break;
        ++x[c];
    }
    return out;
}

// Brute force for g = 2: every triangle at the origin with no box point strictly inside its
// q-circumcircle yields the cell of all box points on that circle.
std::set<std::vector<LatticeVector>> brute_force_2d(const QuadraticForm& q, int k, int check) {
    auto near = box(k, 2), far = box(check, 2);
    const Matrix& m = q.matrix();
    auto val = [&](const Rational& x, const Rational& y) -> Rational { return m(0, 0) * x * x + 2 * m(0, 1) * x * y + m(1, 1) * y * y; };
    std::set<std::vector<LatticeVector>> cells;
    for (std::size_t i = 0; i < near.size(); ++i)
        for (std::size_t j = i + 1; j < near.size(); ++j) {
            const auto &a = near[i], &b = near[j];
            if (a == LatticeVector{0, 0} || b == LatticeVector{0, 0}) continue;
            if (a[0] * b[1] - a[1] * b[0] == 0) continue;
            // 2 a^T Q c = q(a), 2 b^T Q c = q(b), Cramer's rule
            Rational a0 = 2 * (m(0, 0) * a[0] + m(0, 1) * a[1]), a1 = 2 * (m(0, 1) * a[0] + m(1, 1) * a[1]);
            Rational b0 = 2 * (m(0, 0) * b[0] + m(0, 1) * b[1]), b1 = 2 * (m(0, 1) * b[0] + m(1, 1) * b[1]);
            Rational qa = val(a[0], a[1]), qb = val(b[0], b[1]);
            Rational det = a0 * b1 - a1 * b0;
            Rational cx = (qa * b1 - a1 * qb) / det, cy = (a0 * qb - qa * b0) / det;
            Rational r2 = val(cx, cy);
            bool empty = true;
            std::vector<LatticeVector> on;
            for (const auto& y : far) {
                Rational d = val(y[0] - cx, y[1] - cy);
                if (d < r2) {
                    empty = false;
                    break;
                }
                if (d == r2) on.push_back(y);
            }
            if (empty) cells.insert(canonical_translate(on));
        }
    return cells;
}

}  // namespace

TEST_CASE("verify_empty_sphere examples") {
    auto q = identity_form(2);
    auto window = box(3, 2);
    auto square = convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto cert = verify_empty_sphere(square, q, window);
    CHECK(cert.center == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(cert.squared_radius == Rational(1, 2));

    // (1,1) sits on the triangle's circumcircle: allowed
    auto tri = convex_hull({{0, 0}, {1, 0}, {0, 1}});
    auto t = verify_empty_sphere(tri, q, window);
    CHECK(t.squared_radius == Rational(1, 2));

    auto big = convex_hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    try {
        verify_empty_sphere(big, q, window);
        FAIL("expected SphereNotEmpty");
    } catch (const SphereNotEmpty& e) {
        CHECK(e.witness() == LatticeVector{1, 1});
    }

    auto skew = convex_hull({{0, 0}, {1, 0}, {0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(verify_empty_sphere(skew, q, window), doctest::Contains("NoCircumsphere"), Error);
}

TEST_CASE("window radius") {
    CHECK(window_radius(identity_form(2)) == 8);
    CHECK(window_radius(d4_form()) == 32);
    auto w = lattice_window(identity_form(2), 1);
    CHECK(w.size() == 5);
    CHECK(lattice_window(identity_form(3), 2).size() == 19);
}

TEST_CASE("delaunay examples") {
    auto sq = delaunay_decomposition(identity_form(2));
    REQUIRE(sq.cells().size() == 1);
    CHECK(sq.cells()[0].vertices() == std::vector<LatticeVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(sq.fiber_rank() == 0);
    CHECK(sq.walls().size() == 2);

    auto hex = delaunay_decomposition(QuadraticForm(Matrix{{2, 1}, {1, 2}}));
    REQUIRE(hex.cells().size() == 2);
    for (const auto& c : hex.cells()) {
        CHECK(c.is_simplex());
        CHECK(normalized_volume(c) == 1);
    }

    auto d4 = delaunay_decomposition(d4_form());
    REQUIRE(d4.cells().size() == 3);
    for (const auto& c : d4.cells()) {
        CHECK(c.vertices().size() == 8);
        CHECK(c.lattice_points().size() == 8);
        CHECK(is_simplicial_boundary(c));
    }
    CHECK(d4.total_volume() == 24);

    auto line = delaunay_decomposition(QuadraticForm(Matrix{{3}}));
    REQUIRE(line.cells().size() == 1);
    CHECK(line.cells()[0].vertices() == std::vector<LatticeVector>{{0}, {1}});

    CHECK_THROWS_WITH_AS(delaunay_decomposition(QuadraticForm(Matrix{{1, 0}, {0, 0}})),
                         doctest::Contains("NotPositiveDefinite"), Error);
}

TEST_CASE("g=2 matches the brute-force empty-circle oracle") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> diag(1, 4), off(-4, 4);
    int tested = 0;
    while (tested < 25) {
        Rational a = diag(rng), c = diag(rng), b(off(rng), 4);
        b.canonicalize();
        if (2 * abs(b) > std::min(a, c)) continue;  // Lagrange reduced
        QuadraticForm q(Matrix{{a, b}, {b, c}});
        auto d = delaunay_decomposition(q);
        CHECK(oracle::class_set(d) == brute_force_2d(q, 2, 5));
        for (const auto& cell : d.cells()) CHECK((cell.vertices().size() == 3 || cell.vertices().size() == 4));
        ++tested;
    }
}

TEST_CASE("tiling, empty spheres and central symmetry on random forms") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t g = 2 + trial % 3;
        auto q = oracle::random_pd_form(rng, g, trial % 2 == 0);
        auto d = delaunay_decomposition(q);
        CHECK(d.total_volume() == factorial(g));
        for (const auto& c : d.cells()) {
            // every vertex lies within 4r^2 of the origin vertex; check twice that radius
            auto r2 = verify_empty_sphere(c, q, {}).squared_radius;
            CHECK_NOTHROW(verify_empty_sphere(c, q, lattice_window(q, 8 * r2)));
            CHECK(oracle::empty_sphere(c, q));
        }
        std::set<std::vector<LatticeVector>> negated;
        for (const auto& c : d.cells()) {
            std::vector<LatticeVector> m;
            for (const auto& v : c.vertices()) m.push_back(-v);
            negated.insert(canonical_translate(m));
        }
        CHECK(negated == oracle::class_set(d));
    }
}

TEST_CASE("unimodular invariance") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t g = 2 + trial % 3;
        auto q = oracle::random_pd_form(rng, g, trial % 2 == 1);
        auto u = oracle::random_unimodular(rng, g);
        auto d = delaunay_decomposition(q);
        auto d2 = delaunay_decomposition(change_basis(q, u));
        REQUIRE(d.cells().size() == d2.cells().size());
        for (const auto& c : d2.cells()) {
            std::vector<LatticeVector> img;
            for (const auto& v : c.vertices()) img.push_back(oracle::apply(u, v));
            CHECK(d.locate(img, nullptr, nullptr));
        }
    }
}

TEST_CASE("walls are symmetric and face-fitting") {
    auto d = delaunay_decomposition(d4_form());
    for (const auto& w : d.walls()) {
        const auto& a = d.cells()[w.a].vertices();
        const auto& b = d.cells()[w.b].vertices();
        std::set<LatticeVector> sa(a.begin(), a.end()), common;
        for (const auto& v : b)
            if (sa.count(v + w.t)) common.insert(v + w.t);
        CHECK(std::vector<LatticeVector>(common.begin(), common.end()) == w.face_vertices);
    }
    d.validate();
}
