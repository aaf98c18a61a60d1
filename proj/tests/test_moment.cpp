#include "doctest.h"
#include "oracles.hpp"

#include "perdel/moment.hpp"

using namespace perdel;

namespace {

bool in_hull(const std::vector<LatticeVector>& pts, const std::vector<Rational>& x) {
    Cell hull = convex_hull(pts);
    for (const auto& e : hull.equations()) {
        Rational s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s += e.normal[k] * x[k];
        if (s != e.offset) return false;
    }
    for (const auto& f : hull.facets()) {
        Rational s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s += f.normal[k] * x[k];
        if (s < f.offset) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("moment point examples") {
    CHECK(moment_point({{{3, -1}}, {Rational(5, 7)}}) == std::vector<Rational>{3, -1});
    CHECK(moment_point({{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {1, 1, 1, 1}}) ==
          std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(moment_point({{{0, 0}, {2, 0}}, {3, 1}}) == std::vector<Rational>{Rational(1, 2), 0});
    CHECK_THROWS_WITH(moment_point({}), doctest::Contains("EmptySupport"));
    CHECK_THROWS_WITH(moment_point({{{0}}, {0}}), doctest::Contains("NonPositiveWeight"));
}

TEST_CASE("moment point lies in the hull and is equivariant") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coord(-4, 4), count(1, 9), wnum(1, 20);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t g = 1 + trial % 3;
        WeightedSupport s;
        int n = count(rng);
        for (int i = 0; i < n; ++i) {
            LatticeVector x(g);
            for (auto& c : x) c = coord(rng);
            s.points.push_back(x);
            s.weights.push_back(Rational(wnum(rng), wnum(rng)));
        }
        auto m = moment_point(s);
        CHECK(in_hull(s.points, m));

        LatticeVector t(g);
        for (auto& c : t) c = coord(rng);
        WeightedSupport moved = s;
        for (auto& p : moved.points) p = p + t;
        for (auto& w : moved.weights) w *= Rational(13, 5);
        auto m2 = moment_point(moved);
        for (std::size_t k = 0; k < g; ++k) CHECK(m2[k] == m[k] + t[k]);
    }
}

TEST_CASE("mass concentrating on one point pulls the moment point to it") {
    const Rational eps(1, 1000);
    WeightedSupport s{{{0, 0}, {5, 0}, {0, 5}, {-3, 7}}, {1 - eps, eps / 3, eps / 3, eps / 3}};
    auto m = moment_point(s);
    // |m - x0| <= eps * max |x - x0|
    for (const auto& c : m) CHECK(abs(c) <= eps * 7);
    CHECK(m != std::vector<Rational>{0, 0});
}
