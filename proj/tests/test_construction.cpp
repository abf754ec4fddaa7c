#include <doctest.h>

#include <map>
#include <numeric>

#include "vfap/construction.hpp"
#include "vfap/cycle_census.hpp"

using namespace vfap;

TEST_CASE("peg realizes exact column degrees") {
    ConstructionSpec spec;
    spec.n = 8;
    spec.m = 4;
    spec.var_degrees.assign(8, 3);
    spec.seed = 1;
    auto h = peg_construct(spec);
    long row_sum = 0;
    for (int j = 0; j < h.n(); ++j) CHECK(h.col(j).size() == 3);
    for (int i = 0; i < h.m(); ++i) row_sum += static_cast<long>(h.row(i).size());
    CHECK(row_sum == 24);
}

TEST_CASE("peg is deterministic in the seed") {
    ConstructionSpec spec;
    spec.n = 20;
    spec.m = 10;
    spec.var_degrees.assign(20, 3);
    spec.seed = 42;
    auto a = peg_construct(spec);
    auto b = peg_construct(spec);
    CHECK(a == b);
    spec.seed = 43;
    auto c = peg_construct(spec);
    CHECK(!(a == c));
}

TEST_CASE("peg with mixed degrees satisfies the spec") {
    ConstructionSpec spec;
    spec.n = 12;
    spec.m = 5;
    spec.var_degrees = {2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4};
    spec.seed = 7;
    auto h = peg_construct(spec);
    for (int j = 0; j < h.n(); ++j)
        CHECK(static_cast<int>(h.col(j).size()) == spec.var_degrees[j]);
}

TEST_CASE("infeasible degree raises") {
    ConstructionSpec spec;
    spec.n = 4;
    spec.m = 2;
    spec.var_degrees = {3, 1, 1, 1};
    spec.seed = 0;
    CHECK_THROWS_AS(peg_construct(spec), InfeasibleSpec);
}

TEST_CASE("largest-remainder degree realization") {
    // the irregular profile: degrees 2,3,4,6 with edge fractions .29/.25/.25/.21
    std::vector<double> lambda = {0, 0.29, 0.25, 0.25, 0, 0.21};
    auto degrees = realize_degrees(lambda, 500);
    REQUIRE(degrees.size() == 500);
    std::map<int, int> hist;
    for (int d : degrees) hist[d]++;
    CHECK(hist[2] == 222);
    CHECK(hist[3] == 128);
    CHECK(hist[4] == 96);
    CHECK(hist[6] == 54);
    CHECK(std::accumulate(degrees.begin(), degrees.end(), 0) == 1536);
}

TEST_CASE("tree fixture shape") {
    auto h = fixture_tree_code();
    CHECK(h.m() == 3);
    CHECK(h.n() == 7);
    CHECK(h.syndrome(std::vector<uint8_t>(7, 0)) == std::vector<uint8_t>(3, 0));
}

TEST_CASE("complete bipartite fixtures") {
    auto k23 = fixture_complete_bipartite(2, 3);
    CHECK(k23.m() == 2);
    CHECK(k23.n() == 3);
    CHECK(k23.edge_count() == 6);
    CHECK_THROWS_AS(fixture_complete_bipartite(1, 3), std::invalid_argument);
}

TEST_CASE("mid-size regular peg clears girth 4") {
    ConstructionSpec spec;
    spec.n = 96;
    spec.m = 48;
    spec.var_degrees.assign(96, 3);
    spec.seed = 11;
    auto h = peg_construct(spec);
    auto cen = census(h, 8);
    REQUIRE(cen.girth.has_value());
    CHECK(*cen.girth >= 6);
}
