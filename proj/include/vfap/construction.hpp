#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vfap/parity_check.hpp"

namespace vfap {

struct InfeasibleSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructionSpec {
    int n = 0;
    int m = 0;
    std::vector<int> var_degrees;  // length n
    uint64_t seed = 0;

    void validate() const;
};

// Progressive edge growth: each new edge attaches to a check outside (or as
// deep as possible in) the BFS tree of the variable's current subgraph,
// preferring low check degree; ordering ties are settled by the seeded
// generator over index-sorted candidates, so equal specs give equal graphs.
ParityCheckMatrix peg_construct(const ConstructionSpec& spec);

// Node-count realization of an edge-perspective lambda(x) by largest
// remainder, returned as a per-variable degree sequence (descending).
std::vector<int> realize_degrees(const std::vector<double>& lambda_coeffs, int n);

// Fixed 3-check, 7-variable cycle-free Tanner graph.
ParityCheckMatrix fixture_tree_code();

// All-ones biadjacency: a check nodes, b variable nodes.
ParityCheckMatrix fixture_complete_bipartite(int a, int b);

}  // namespace vfap
