#pragma once

#include <vector>

#include "vfap/parity_check.hpp"
#include "vfap/rng.hpp"

namespace vfap::testing {

// Random bipartite graph with no empty rows or columns; density p in 1/256
// steps. Deterministic in the stream.
inline ParityCheckMatrix random_graph(Philox& rng, int m, int n, int density_pct) {
    std::vector<std::vector<uint8_t>> bits(m, std::vector<uint8_t>(n, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            bits[i][j] = rng.next_u32() % 100 < static_cast<uint32_t>(density_pct) ? 1 : 0;
    for (int i = 0; i < m; ++i) {
        bool any = false;
        for (int j = 0; j < n; ++j) any |= bits[i][j] != 0;
        if (!any) bits[i][rng.next_below(n)] = 1;
    }
    for (int j = 0; j < n; ++j) {
        bool any = false;
        for (int i = 0; i < m; ++i) any |= bits[i][j] != 0;
        if (!any) bits[rng.next_below(m)][j] = 1;
    }
    return ParityCheckMatrix::from_dense(bits);
}

}  // namespace vfap::testing
