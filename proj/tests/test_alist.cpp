#include <doctest.h>

#include "vfap/alist.hpp"
#include "vfap/construction.hpp"
#include "test_util.hpp"

using namespace vfap;

TEST_CASE("alist round trip on the 2x3 example") {
    auto h = ParityCheckMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    std::string text = write_alist(h);
    CHECK(text ==
          "3 2\n"
          "2 2\n"
          "1 2 1\n"
          "2 2\n"
          "1\n"
          "1 2\n"
          "2\n"
          "1 2\n"
          "2 3\n");
    CHECK(read_alist(text) == h);
}

TEST_CASE("identity round trip") {
    auto h = ParityCheckMatrix::from_dense({{1, 0}, {0, 1}});
    CHECK(read_alist(write_alist(h)) == h);
}

TEST_CASE("declared degree mismatch is a parse error") {
    std::string text =
        "3 2\n"
        "2 2\n"
        "1 2 1\n"
        "2 2\n"
        "1\n"
        "1\n"  // declares degree 2 but lists one entry
        "2\n"
        "1 2\n"
        "2 3\n";
    CHECK_THROWS_AS(read_alist(text), AlistParseError);
}

TEST_CASE("zero padding accepted on read") {
    std::string text =
        "3 2\n"
        "2 2\n"
        "1 2 1\n"
        "2 2\n"
        "1 0\n"
        "1 2\n"
        "2 0\n"
        "1 2\n"
        "2 3\n";
    auto h = read_alist(text);
    CHECK(h == ParityCheckMatrix::from_dense({{1, 1, 0}, {0, 1, 1}}));
    // but never emitted
    CHECK(write_alist(h).find(" 0") == std::string::npos);
}

TEST_CASE("out-of-range and inconsistent entries are parse errors") {
    CHECK_THROWS_AS(read_alist("2 2\n1 1\n1 1\n1 1\n3\n1\n1\n2\n"), AlistParseError);
    // variable 0 claims check 1, but check 1 lists variable 2 only
    CHECK_THROWS_AS(read_alist("2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n"), AlistParseError);
    CHECK_THROWS_AS(read_alist(""), AlistParseError);
    CHECK_THROWS_AS(read_alist("2 2\n1 1\n1 x\n1 1\n1\n2\n1\n2\n"), AlistParseError);
}

TEST_CASE("hand-built (3,6)-regular toy code parses with expected degrees") {
    // M=4, N=8: column j skips row j/2, so rows have weight 6, columns 3
    auto h = ParityCheckMatrix::from_dense({
        {0, 0, 1, 1, 1, 1, 1, 1},
        {1, 1, 0, 0, 1, 1, 1, 1},
        {1, 1, 1, 1, 0, 0, 1, 1},
        {1, 1, 1, 1, 1, 1, 0, 0},
    });
    auto parsed = read_alist(write_alist(h));
    CHECK(parsed == h);
    for (int i = 0; i < 4; ++i) CHECK(parsed.row(i).size() == 6);
    for (int j = 0; j < 8; ++j) CHECK(parsed.col(j).size() == 3);
}

TEST_CASE("round trip is exact over random and constructed codes") {
    Philox rng(123, 9);
    for (int trial = 0; trial < 30; ++trial) {
        auto h = vfap::testing::random_graph(rng, 4, 6, 40);
        auto text = write_alist(h);
        CHECK(read_alist(text) == h);
        CHECK(write_alist(read_alist(text)) == text);
        CHECK(empirical_connectivity(read_alist(text)) == empirical_connectivity(h));
    }
    ConstructionSpec spec;
    spec.n = 16;
    spec.m = 8;
    spec.var_degrees.assign(16, 3);
    spec.seed = 5;
    auto peg = peg_construct(spec);
    CHECK(read_alist(write_alist(peg)) == peg);
}
