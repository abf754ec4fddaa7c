#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "vfap/alist.hpp"
#include "vfap/construction.hpp"
#include "vfap/cycle_census.hpp"
#include "test_util.hpp"

using namespace vfap;

namespace {

// Exhaustive simple-path counter: number of paths of a given length from
// every check node, bucketed by endpoint. Slow and independent of the
// matrix recursions.
struct PathOracle {
    int m, n;
    std::vector<std::vector<int>> adj;  // combined ids: checks 0..m-1, vars m..m+n-1

    explicit PathOracle(const ParityCheckMatrix& h) : m(h.m()), n(h.n()), adj(h.m() + h.n()) {
        for (int i = 0; i < m; ++i)
            for (int j : h.row(i)) {
                adj[i].push_back(m + j);
                adj[m + j].push_back(i);
            }
    }

    // counts[len][endpoint] accumulated over all simple paths from start
    void walk(int v, uint32_t visited, int len, int max_len,
              std::vector<std::map<int, int64_t>>& counts) const {
        if (len == max_len) return;
        for (int w : adj[v]) {
            if (visited & (1u << w)) continue;
            counts[len + 1][w] += 1;
            walk(w, visited | (1u << w), len + 1, max_len, counts);
        }
    }

    std::vector<std::map<int, int64_t>> from(int start, int max_len) const {
        std::vector<std::map<int, int64_t>> counts(max_len + 1);
        walk(start, 1u << start, 0, max_len, counts);
        return counts;
    }
};

void compare_paths(const ParityCheckMatrix& h, int max_len) {
    WalkTables wt(h);
    wt.total(8);  // grows tables through length 7
    PathOracle oracle(h);
    for (int start = 0; start < h.m(); ++start) {
        auto counts = oracle.from(start, max_len);
        for (int len = 2; len <= max_len; ++len) {
            const IntMatrix& p = wt.path_matrix_checks(len);
            bool end_on_checks = len % 2 == 0;
            int end_count = end_on_checks ? h.m() : h.n();
            for (int t = 0; t < end_count; ++t) {
                int id = end_on_checks ? t : h.m() + t;
                auto it = counts[len].find(id);
                int64_t expect = it == counts[len].end() ? 0 : it->second;
                CAPTURE(start);
                CAPTURE(len);
                CAPTURE(t);
                REQUIRE(p.at(start, t) == expect);
            }
        }
    }
}

}  // namespace

TEST_CASE("complete bipartite fixtures have known cycle counts") {
    auto k22 = fixture_complete_bipartite(2, 2);
    auto c = count_cycles_of_length(k22, 4);
    CHECK(c.total == 1);
    CHECK(c.per_check == std::vector<int64_t>{1, 1});
    CHECK(count_cycles_of_length(k22, 6).total == 0);
    CHECK(count_cycles_of_length(k22, 8).total == 0);

    auto k23 = fixture_complete_bipartite(2, 3);
    c = count_cycles_of_length(k23, 4);
    CHECK(c.total == 3);
    CHECK(c.per_check == std::vector<int64_t>{3, 3});
    CHECK(count_cycles_of_length(k23, 6).total == 0);

    auto k33 = fixture_complete_bipartite(3, 3);
    CHECK(count_cycles_of_length(k33, 4).total == 9);
    CHECK(count_cycles_of_length(k33, 6).total == 6);
    CHECK(count_cycles_of_length(k33, 8).total == 0);
    CHECK(count_cycles_of_length(k33, 4).per_check == std::vector<int64_t>{6, 6, 6});
    CHECK(count_cycles_of_length(k33, 6).per_check == std::vector<int64_t>{6, 6, 6});
}

TEST_CASE("tree fixture is acyclic up to the cap") {
    auto h = fixture_tree_code();
    auto cen = census(h, 16);
    CHECK(!cen.girth.has_value());
    CHECK(cen.total == 0);
    CHECK(cen.per_check.empty());
    auto oracle = brute_force_cycle_oracle(h, 6);
    CHECK(oracle.total == 0);
}

TEST_CASE("path matrices match exhaustive enumeration") {
    Philox rng(0xC0FFEE, 1);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 2 + static_cast<int>(rng.next_below(5));
        int n = 2 + static_cast<int>(rng.next_below(6));
        int density = 20 + static_cast<int>(rng.next_below(50));
        auto h = vfap::testing::random_graph(rng, m, n, density);
        CAPTURE(trial);
        compare_paths(h, 7);
    }
}

TEST_CASE("recursion counts match the DFS oracle on random graphs") {
    Philox rng(0xFEED, 2);
    for (int trial = 0; trial < 120; ++trial) {
        int m = 2 + static_cast<int>(rng.next_below(7));
        int n = 2 + static_cast<int>(rng.next_below(9));
        int density = 15 + static_cast<int>(rng.next_below(45));
        auto h = vfap::testing::random_graph(rng, m, n, density);
        CAPTURE(trial);
        WalkTables wt(h);
        for (int two_k : {4, 6, 8}) {
            auto oracle = brute_force_cycle_oracle(h, two_k);
            CAPTURE(two_k);
            REQUIRE(wt.total(two_k) == oracle.total);
            REQUIRE(wt.per_check(two_k) == oracle.per_check);
            REQUIRE(wt.total_from_vars(two_k) == oracle.total);
        }
    }
}

TEST_CASE("counts are invariant under row and column permutation") {
    Philox rng(0xABCD, 3);
    for (int trial = 0; trial < 20; ++trial) {
        auto h = vfap::testing::random_graph(rng, 4, 5, 40);
        std::vector<int> rp(h.m()), cp(h.n());
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        for (int i = h.m() - 1; i > 0; --i)
            std::swap(rp[i], rp[rng.next_below(i + 1)]);
        for (int j = h.n() - 1; j > 0; --j)
            std::swap(cp[j], cp[rng.next_below(j + 1)]);

        std::vector<std::vector<uint8_t>> bits(h.m(), std::vector<uint8_t>(h.n(), 0));
        for (int i = 0; i < h.m(); ++i)
            for (int j : h.row(i)) bits[rp[i]][cp[j]] = 1;
        auto hp = ParityCheckMatrix::from_dense(bits);

        for (int two_k : {4, 6}) {
            auto a = count_cycles_of_length(h, two_k);
            auto b = count_cycles_of_length(hp, two_k);
            CHECK(a.total == b.total);
            for (int i = 0; i < h.m(); ++i) CHECK(a.per_check[i] == b.per_check[rp[i]]);
        }
    }
}

TEST_CASE("census finds girth and satisfies the participation identity") {
    Philox rng(0xBEEF, 4);
    int with_cycles = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto h = vfap::testing::random_graph(rng, 3 + static_cast<int>(rng.next_below(4)),
                                             4 + static_cast<int>(rng.next_below(5)),
                                             20 + static_cast<int>(rng.next_below(30)));
        auto cen = census(h, 8);
        if (!cen.girth) continue;
        ++with_cycles;
        // smaller lengths are cycle-free
        for (int two_k = 4; two_k < *cen.girth; two_k += 2)
            CHECK(brute_force_cycle_oracle(h, two_k).total == 0);
        auto oracle = brute_force_cycle_oracle(h, *cen.girth);
        CHECK(cen.total == oracle.total);
        CHECK(cen.per_check == oracle.per_check);
        // every length-g cycle passes through exactly g/2 check nodes
        CHECK(cen.per_check_sum == (*cen.girth / 2) * cen.total);
        CHECK(cen.mu_g == doctest::Approx(static_cast<double>(cen.per_check_sum) / h.m()));
    }
    CHECK(with_cycles > 20);
}

TEST_CASE("high-girth graphs are countable at the girth and girth+2") {
    // (3,6)-regular PEG graphs clear girth 4; census must agree with the
    // oracle at girth even when the girth exceeds the always-exact window
    ConstructionSpec spec;
    spec.n = 12;
    spec.m = 6;
    spec.var_degrees.assign(12, 3);
    spec.seed = 9;
    auto h = peg_construct(spec);
    auto cen = census(h, 16);
    REQUIRE(cen.girth.has_value());
    auto oracle = brute_force_cycle_oracle(h, *cen.girth);
    CHECK(cen.total == oracle.total);
    CHECK(cen.per_check == oracle.per_check);
}

TEST_CASE("length preconditions and cap are enforced") {
    auto h = fixture_complete_bipartite(2, 2);
    CHECK_THROWS_AS(count_cycles_of_length(h, 3), std::invalid_argument);
    CHECK_THROWS_AS(count_cycles_of_length(h, 18, 16), LengthCapExceeded);
    // girth 4 here, so 10 > max(8, girth + 2) is out of the exact domain
    CHECK_THROWS_AS(count_cycles_of_length(h, 10), LengthCapExceeded);
    CHECK_THROWS_AS(brute_force_cycle_oracle(peg_construct([] {
                        ConstructionSpec s;
                        s.n = 40;
                        s.m = 16;
                        s.var_degrees.assign(40, 2);
                        s.seed = 1;
                        return s;
                    }()),
                                             4),
                    TooLarge);
}

TEST_CASE("trace symmetry holds on fixtures") {
    for (auto [a, b] : {std::pair{3, 3}, {2, 3}, {3, 4}}) {
        auto h = fixture_complete_bipartite(a, b);
        WalkTables wt(h);
        for (int two_k : {4, 6, 8}) CHECK(wt.total(two_k) == wt.total_from_vars(two_k));
    }
}
