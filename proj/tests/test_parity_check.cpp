#include <doctest.h>

#include "vfap/parity_check.hpp"
#include "test_util.hpp"

using namespace vfap;

TEST_CASE("from_dense builds consistent adjacency views") {
    auto h = ParityCheckMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    CHECK(h.m() == 2);
    CHECK(h.n() == 3);
    CHECK(h.rows() == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(h.cols() == std::vector<std::vector<int>>{{0}, {0, 1}, {1}});

    auto id2 = ParityCheckMatrix::from_dense({{1, 0}, {0, 1}});
    CHECK(id2.rows() == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(id2.cols() == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("isolated nodes are rejected") {
    CHECK_THROWS_AS(ParityCheckMatrix::from_dense({{1, 0}, {1, 0}}), EmptyRowOrColumn);
    try {
        ParityCheckMatrix::from_dense({{1, 0}, {1, 0}});
    } catch (const EmptyRowOrColumn& e) {
        CHECK(!e.is_row);
        CHECK(e.index == 1);
    }
    CHECK_THROWS_AS(ParityCheckMatrix(2, 2, {{0, 1}, {}}), EmptyRowOrColumn);
}

TEST_CASE("syndrome equals hand XOR and the dense oracle") {
    auto h = ParityCheckMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    CHECK(h.syndrome({0, 0, 0}) == std::vector<uint8_t>{0, 0});
    CHECK(h.syndrome({1, 1, 0}) == std::vector<uint8_t>{0, 1});
    CHECK_THROWS_AS(h.syndrome({1, 1}), LengthMismatch);

    Philox rng(77, 0);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = vfap::testing::random_graph(rng, 4, 7, 40);
        std::vector<uint8_t> x(g.n());
        for (auto& b : x) b = static_cast<uint8_t>(rng.next_u32() & 1u);
        // dense matrix-vector product mod 2
        std::vector<uint8_t> expect(g.m(), 0);
        for (int i = 0; i < g.m(); ++i)
            for (int j : g.row(i)) expect[i] = static_cast<uint8_t>(expect[i] ^ (x[j] & 1u));
        CHECK(g.syndrome(x) == expect);
    }
}

TEST_CASE("edge count is conserved between views") {
    Philox rng(78, 0);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = vfap::testing::random_graph(rng, 5, 6, 35);
        long row_edges = 0, col_edges = 0;
        for (const auto& r : g.rows()) row_edges += static_cast<long>(r.size());
        for (const auto& c : g.cols()) col_edges += static_cast<long>(c.size());
        CHECK(row_edges == col_edges);
        CHECK(row_edges == g.edge_count());
    }
}

TEST_CASE("average connectivity from degree polynomials") {
    DegreeProfile regular;
    regular.lambda_coeffs = {0, 0, 0, 1};  // x^3
    regular.design_rate = 0.5;
    CHECK(average_connectivity(regular) == doctest::Approx(4.0).epsilon(1e-12));

    DegreeProfile irregular;
    irregular.lambda_coeffs = {0, 0.29, 0.25, 0.25, 0, 0.21};  // 0.21x^5+0.25x^3+0.25x^2+0.29x
    irregular.design_rate = 0.5;
    double expect = 1.0 / (0.21 / 6 + 0.25 / 4 + 0.25 / 3 + 0.29 / 2);
    CHECK(average_connectivity(irregular) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(average_connectivity(irregular) == doctest::Approx(3.07).epsilon(0.005));

    DegreeProfile constant;
    constant.lambda_coeffs = {1.0};
    CHECK(average_connectivity(constant) == doctest::Approx(1.0));

    DegreeProfile bad;
    bad.lambda_coeffs = {0.5, 0.6};
    CHECK_THROWS_AS(average_connectivity(bad), std::invalid_argument);
}

TEST_CASE("regular profile connectivity is the degree exactly") {
    for (int d = 2; d <= 8; ++d) {
        DegreeProfile p;
        p.lambda_coeffs.assign(d, 0.0);
        p.lambda_coeffs[d - 1] = 1.0;
        CHECK(average_connectivity(p) == doctest::Approx(d).epsilon(1e-12));
    }
}

TEST_CASE("empirical connectivity is edges over n") {
    auto h = ParityCheckMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    CHECK(empirical_connectivity(h) == doctest::Approx(4.0 / 3.0));
}
