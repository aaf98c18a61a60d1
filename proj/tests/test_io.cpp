#include "doctest.h"
#include "oracles.hpp"

#include "perdel/catalog.hpp"
#include "perdel/delaunay.hpp"
#include "perdel/error.hpp"
#include "perdel/io.hpp"
#include "perdel/seccone.hpp"

using namespace perdel;

TEST_CASE("rationals and forms round-trip") {
    CHECK(rational_json(Rational(-6, 4)) == "-3/2");
    CHECK(rational_from_json(Json("-3/2")) == Rational(-3, 2));
    CHECK(rational_from_json(Json(7)) == 7);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), InputError);

    auto q = gram("Dn", 4);
    CHECK(form_from_json(form_to_json(q)).matrix() == q.matrix());
    CHECK(form_from_json(parse_json("[[2, \"1/2\"], [\"1/2\", 1]]")).matrix()(0, 1) == Rational(1, 2));
    CHECK_THROWS(form_from_json(parse_json("[[1, 2], [3, 1]]")));
}

TEST_CASE("decompositions round-trip") {
    for (auto d : {delaunay_decomposition(gram("A2", 2)), delaunay_decomposition(gram("Dn", 4)), delta_rt()}) {
        auto back = decomposition_from_json(decomposition_to_json(d));
        CHECK(back.cells() == d.cells());
        CHECK(back.walls().size() == d.walls().size());
        CHECK(dump(decomposition_to_json(back)) == dump(decomposition_to_json(d)));
    }
    auto pb = PeriodicDecomposition::pullback(3, 1, delaunay_decomposition(gram("Zg", 2)).cells());
    auto pb2 = decomposition_from_json(decomposition_to_json(pb));
    CHECK(pb2.fiber_rank() == 1);
    CHECK(pb2.dim() == 3);
}

TEST_CASE("graphs round-trip") {
    DualGraph g{2, {{0, 1}, {0, 1}, {0, 0}}};
    auto back = graph_from_json(graph_to_json(g));
    CHECK(back.vertex_count == 2);
    CHECK(back.edges == g.edges);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"vertices": 2, "edges": [[0, 5]]})")), InputError);
}

TEST_CASE("malformed input is an InputError") {
    CHECK_THROWS_AS(parse_json("{not json"), InputError);
    CHECK_THROWS_AS(decomposition_from_json(parse_json(R"({"dim": 2})")), InputError);
    CHECK_THROWS_AS(decomposition_from_json(parse_json(R"({"dim": -1, "cells": []})")), InputError);
    CHECK_THROWS_AS(cell_from_json(parse_json(R"({"dim": 2, "vertices": [[0, 0.5]]})")), InputError);
    CHECK_THROWS_AS(support_from_json(parse_json(R"({"points": [[0]]})")), InputError);
    CHECK_THROWS_AS(form_from_json(parse_json(R"({"matrix": "x"})")), InputError);
}

TEST_CASE("output is deterministic") {
    auto a = dump(cone_to_json(secondary_cone(delta_rt())));
    auto b = dump(cone_to_json(secondary_cone(delta_rt())));
    CHECK(a == b);
    CHECK(a.back() == '\n');
}
