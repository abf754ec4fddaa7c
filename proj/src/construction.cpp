#include "vfap/construction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "vfap/rng.hpp"

namespace vfap {

void ConstructionSpec::validate() const {
    if (m < 1 || n <= m)
        throw std::invalid_argument("construction requires n > m >= 1");
    if (static_cast<int>(var_degrees.size()) != n)
        throw std::invalid_argument("var_degrees length must equal n");
    long total = 0;
    for (int d : var_degrees) {
        if (d < 1) throw std::invalid_argument("variable degrees must be >= 1");
        total += d;
    }
    if (total < m)
        throw std::invalid_argument("degree sum too small to reach every check");
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// First-reach depth of every check node in the subgraph grown so far,
// BFS-ing from variable j. Direct neighbors sit at depth 0.
void check_depths(int j, const std::vector<std::vector<int>>& var_adj,
                  const std::vector<std::vector<int>>& check_adj, int m,
                  std::vector<int>& depth, std::vector<uint8_t>& var_seen) {
    depth.assign(m, kUnreached);
    std::fill(var_seen.begin(), var_seen.end(), 0);
    var_seen[j] = 1;

    std::vector<int> frontier = var_adj[j];
    for (int c : frontier) depth[c] = 0;
    int level = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int c : frontier) {
            for (int v : check_adj[c]) {
                if (var_seen[v]) continue;
                var_seen[v] = 1;
                for (int c2 : var_adj[v]) {
                    if (depth[c2] == kUnreached) {
                        depth[c2] = level + 1;
                        next.push_back(c2);
                    }
                }
            }
        }
        frontier = std::move(next);
        ++level;
    }
}

}  // namespace

ParityCheckMatrix peg_construct(const ConstructionSpec& spec) {
    spec.validate();
    for (int d : spec.var_degrees)
        if (d > spec.m)
            throw InfeasibleSpec("variable degree " + std::to_string(d) +
                                 " exceeds check count " + std::to_string(spec.m));

    uint64_t rng_state = spec.seed;
    std::vector<std::vector<int>> var_adj(spec.n), check_adj(spec.m);
    std::vector<int> check_deg(spec.m, 0);
    std::vector<int> depth;
    std::vector<uint8_t> var_seen(spec.n, 0);
    std::vector<int> candidates;

    for (int j = 0; j < spec.n; ++j) {
        for (int t = 0; t < spec.var_degrees[j]; ++t) {
            candidates.clear();
            if (t == 0) {
                candidates.resize(spec.m);
                std::iota(candidates.begin(), candidates.end(), 0);
            } else {
                check_depths(j, var_adj, check_adj, spec.m, depth, var_seen);
                int deepest = *std::max_element(depth.begin(), depth.end());
                // deepest == 0 would mean every check is already a neighbor
                if (deepest == 0)
                    throw InfeasibleSpec("variable " + std::to_string(j) +
                                         " cannot take another distinct check");
                for (int c = 0; c < spec.m; ++c)
                    if (depth[c] == deepest) candidates.push_back(c);
            }

            int best_deg = check_deg[candidates[0]];
            for (int c : candidates) best_deg = std::min(best_deg, check_deg[c]);
            // candidates are index-sorted; the seeded pick among the
            // minimum-degree subset is what the seed reproduces
            int win_count = 0;
            for (int c : candidates)
                if (check_deg[c] == best_deg) candidates[win_count++] = c;
            candidates.resize(win_count);
            int pick = candidates[splitmix64(rng_state) % candidates.size()];

            var_adj[j].push_back(pick);
            std::sort(var_adj[j].begin(), var_adj[j].end());
            check_adj[pick].push_back(j);
            ++check_deg[pick];
        }
    }

    std::vector<std::vector<int>> rows(spec.m);
    for (int i = 0; i < spec.m; ++i) {
        rows[i] = check_adj[i];
        std::sort(rows[i].begin(), rows[i].end());
    }
    return ParityCheckMatrix(spec.m, spec.n, std::move(rows));
}

std::vector<int> realize_degrees(const std::vector<double>& lambda_coeffs, int n) {
    if (n < 1) throw std::invalid_argument("need at least one variable node");
    // edge fraction at degree d sits at coefficient index d-1; node fraction
    // is proportional to coeff/d
    double norm = 0.0;
    for (size_t k = 0; k < lambda_coeffs.size(); ++k)
        norm += lambda_coeffs[k] / static_cast<double>(k + 1);
    if (norm <= 0.0) throw DegenerateProfile("lambda integrates to zero");

    struct Share {
        int degree;
        int count;
        double remainder;
    };
    std::vector<Share> shares;
    long assigned = 0;
    for (size_t k = 0; k < lambda_coeffs.size(); ++k) {
        if (lambda_coeffs[k] <= 0.0) continue;
        double exact = lambda_coeffs[k] / static_cast<double>(k + 1) / norm * n;
        int base = static_cast<int>(std::floor(exact));
        shares.push_back({static_cast<int>(k + 1), base, exact - base});
        assigned += base;
    }
    std::stable_sort(shares.begin(), shares.end(),
                     [](const Share& a, const Share& b) { return a.remainder > b.remainder; });
    for (size_t k = 0; assigned < n; ++k, ++assigned) shares[k % shares.size()].count += 1;

    std::vector<int> degrees;
    degrees.reserve(n);
    std::sort(shares.begin(), shares.end(),
              [](const Share& a, const Share& b) { return a.degree < b.degree; });
    for (const auto& s : shares)
        degrees.insert(degrees.end(), s.count, s.degree);
    return degrees;
}

ParityCheckMatrix fixture_tree_code() {
    // path c0 - v2 - c1 - v4 - c2 with leaf variables; no cycles
    return ParityCheckMatrix(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
}

ParityCheckMatrix fixture_complete_bipartite(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("complete bipartite fixture needs a,b >= 2");
    std::vector<std::vector<int>> rows(a);
    for (int i = 0; i < a; ++i) {
        rows[i].resize(b);
        std::iota(rows[i].begin(), rows[i].end(), 0);
    }
    return ParityCheckMatrix(a, b, std::move(rows));
}

}  // namespace vfap
