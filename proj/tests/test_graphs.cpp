#include "doctest.h"
#include "oracles.hpp"

#include "perdel/delaunay.hpp"
#include "perdel/graphs.hpp"
#include "perdel/linalg.hpp"

#include <functional>
#include <map>

using namespace perdel;

namespace {

DualGraph make(std::size_t v, std::vector<std::pair<std::size_t, std::size_t>> e) {
    return DualGraph{v, std::move(e)};
}

DualGraph complete(std::size_t n) {
    DualGraph g{n, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.edges.push_back({i, j});
    return g;
}

DualGraph petersen() {
    DualGraph g{10, {}};
    for (std::size_t i = 0; i < 5; ++i) {
        g.edges.push_back({i, (i + 1) % 5});
        g.edges.push_back({i, i + 5});
        g.edges.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return g;
}

std::size_t count_spanning_trees(const DualGraph& g) { return oracle::count_spanning_trees(g.vertex_count, g.edges); }

bool connected(const DualGraph& g) { return oracle::connected(g.vertex_count, g.edges); }

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

EdgeList canon(std::size_t v, const EdgeList& edges) {
    std::vector<std::size_t> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best;
    bool first = true;
    do {
        EdgeList e;
        for (auto [a, b] : edges) e.push_back(std::minmax(perm[a], perm[b]));
        std::sort(e.begin(), e.end());
        if (first || e < best) best = e, first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Isomorphism classes of connected multigraphs with first betti number g and every degree >= 3,
// found by listing all edge multisets on up to 2g-2 vertices.
std::size_t brute_force_stable(std::size_t g) {
    std::set<std::pair<std::size_t, EdgeList>> seen;
    for (std::size_t v = 1; v <= 2 * g - 2; ++v) {
        const std::size_t e = v + g - 1;
        EdgeList pairs;
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = i; j < v; ++j) pairs.push_back({i, j});
        EdgeList cur;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (cur.size() == e) {
                DualGraph dg{v, cur};
                if (!connected(dg)) return;
                for (auto d : dg.degrees())
                    if (d < 3) return;
                seen.insert({v, canon(v, cur)});
                return;
            }
            for (std::size_t k = start; k < pairs.size(); ++k) {
                cur.push_back(pairs[k]);
                rec(k);
                cur.pop_back();
            }
        };
        rec(0);
    }
    return seen.size();
}

}  // namespace

TEST_CASE("betti numbers") {
    CHECK(betti(complete(4)) == 3);
    CHECK(betti(complete(5)) == 6);
    CHECK(betti(make(2, {{0, 1}, {0, 1}, {0, 1}})) == 2);
    CHECK(betti(make(1, {{0, 0}, {0, 0}})) == 2);
    CHECK_THROWS_WITH(betti(make(3, {{0, 1}})), doctest::Contains("Disconnected"));
}

TEST_CASE("graphic forms") {
    auto theta = graphic_form(make(2, {{0, 1}, {0, 1}, {0, 1}}));
    CHECK(theta.dim() == 2);
    CHECK(oracle::leibniz_det(theta.matrix()) == 3);
    auto loop = graphic_form(make(1, {{0, 0}}));
    CHECK(loop.dim() == 1);
    CHECK(loop.matrix()(0, 0) == 1);
    CHECK(oracle::leibniz_det(graphic_form(complete(4)).matrix()) == 16);
}

TEST_CASE("matrix-tree theorem on random multigraphs") {
    std::mt19937 rng(5);
    int tested = 0;
    while (tested < 30) {
        std::size_t v = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
        std::size_t m = std::uniform_int_distribution<std::size_t>(v, std::min<std::size_t>(12, v + 5))(rng);
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        DualGraph g{v, {}};
        for (std::size_t k = 0; k < m; ++k) g.edges.push_back({pick(rng), pick(rng)});
        if (!connected(g) || betti(g) == 0) continue;
        ++tested;
        auto q = graphic_form(g);
        CHECK(q.dim() == betti(g));
        CHECK(oracle::leibniz_det(q.matrix()) == Rational(count_spanning_trees(g)));
        CHECK(ldlt_signature(q.matrix()).kind == Definiteness::positive_definite);
        // a different spanning tree changes the basis only
        std::vector<std::size_t> order(g.edges.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        auto q2 = graphic_form(g, &order);
        CHECK(oracle::leibniz_det(q2.matrix()) == oracle::leibniz_det(q.matrix()));
        if (q.dim() <= 3)
            CHECK(delaunay_decomposition(q2).cells().size() == delaunay_decomposition(q).cells().size());
    }
}

TEST_CASE("planarity with verified Kuratowski witnesses") {
    CHECK(planarity(complete(4)).planar);
    CHECK(planarity(make(2, {{0, 1}, {0, 1}, {0, 1}})).planar);

    auto k5 = planarity(complete(5));
    REQUIRE_FALSE(k5.planar);
    REQUIRE(k5.witness);
    CHECK(k5.witness->kind == "K5");
    CHECK(verify_kuratowski(complete(5), *k5.witness));

    auto k33g = named_graphs();
    DualGraph k33;
    for (auto& [n, g] : k33g)
        if (n == "K33") k33 = g;
    auto v = planarity(k33);
    REQUIRE(v.witness);
    CHECK(v.witness->kind == "K33");
    CHECK(verify_kuratowski(k33, *v.witness));

    auto tampered = *v.witness;
    tampered.edges.pop_back();
    CHECK_FALSE(verify_kuratowski(k33, tampered));
    tampered = *v.witness;
    tampered.kind = "K5";
    CHECK_FALSE(verify_kuratowski(k33, tampered));

    auto p = planarity(petersen());
    REQUIRE_FALSE(p.planar);
    CHECK(verify_kuratowski(petersen(), *p.witness));
}

TEST_CASE("planarity on random simple graphs") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 5 + trial % 5;
        DualGraph g{n, {}};
        std::bernoulli_distribution coin(0.3 + 0.1 * (trial % 6));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coin(rng)) g.edges.push_back({i, j});
        auto verdict = planarity(g);
        if (g.edges.size() > 3 * n - 6) CHECK_FALSE(verdict.planar);
        if (!verdict.planar) {
            REQUIRE(verdict.witness);
            CHECK(verify_kuratowski(g, *verdict.witness));
        }
    }
}

TEST_CASE("stable graph corpus matches brute force") {
    auto two = stable_graphs(2);
    auto three = stable_graphs(3);
    CHECK(two.size() == brute_force_stable(2));
    CHECK(two.size() == 3);
    CHECK(three.size() == 3 + brute_force_stable(3));
    CHECK(three.size() == 3 + 15);
    for (const auto& g : three) {
        CHECK(g.is_stable());
        CHECK(canonical_graph(g).edges == g.edges);
    }
}

TEST_CASE("genus four corpus size" * doctest::timeout(60)) {
    CHECK(stable_graphs(4).size() == 3 + 15 + 111);
}

TEST_CASE("Torelli reports for K4 and K33") {
    std::map<std::string, DualGraph> named;
    for (auto& [n, g] : named_graphs()) named[n] = g;
    auto k4 = torelli_report(named.at("K4"), "K4");
    CHECK(k4.genus == 3);
    CHECK(k4.planar);
    CHECK(k4.et_flag == false);
    CHECK(k4.conjecture_consistent);

    auto k33 = torelli_report(named.at("K33"), "K33");
    CHECK(k33.genus == 4);
    CHECK_FALSE(k33.planar);
    CHECK(k33.class_count == 20);
    CHECK(k33.h0 == 2);
    CHECK(k33.cone_dim == 9u);
    CHECK(k33.stratum_dim == 1u);
    CHECK(k33.et_flag == true);
    CHECK(k33.conjecture_consistent);
}
