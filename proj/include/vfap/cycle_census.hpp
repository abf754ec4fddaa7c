#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vfap/parity_check.hpp"

namespace vfap {

struct LengthCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegerOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense matrix of 64-bit counts with overflow-checked arithmetic. Counting
/// never wraps silently; any value leaving int64 raises IntegerOverflow.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols, int64_t fill = 0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int64_t& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    int64_t at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix times(const IntMatrix& rhs) const;
    IntMatrix transposed() const;
    IntMatrix hadamard(const IntMatrix& rhs) const;
    IntMatrix plus(const IntMatrix& rhs) const;
    IntMatrix minus(const IntMatrix& rhs) const;
    IntMatrix scaled(int64_t factor) const;
    IntMatrix scale_cols(const std::vector<int64_t>& w) const;  // A(i,j) * w[j]
    IntMatrix scale_rows(const std::vector<int64_t>& w) const;  // A(i,j) * w[i]
    IntMatrix off_diagonal() const;
    IntMatrix shifted(int64_t c) const;  // A(i,j) + c everywhere
    template <typename F>
    IntMatrix map(F f) const {
        IntMatrix out(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
        return out;
    }
    std::vector<int64_t> diagonal() const;
    std::vector<int64_t> row_sums() const;
    std::vector<int64_t> col_sums() const;
    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<int64_t> data_;
};

/// Path and lollipop-walk tables over the bipartite Tanner graph, one tower
/// per start side, grown one length at a time. Path matrices are exact: the
/// walk-extension products are corrected by backtrack terms and by lollipop
/// tables for 4- and 6-cycle configurations, which covers any even length up
/// to 8 on arbitrary graphs, lengths up to the girth, and girth+2.
class WalkTables {
public:
    explicit WalkTables(const ParityCheckMatrix& h, int cap = 16);
    ~WalkTables();
    WalkTables(WalkTables&&) noexcept;
    WalkTables& operator=(WalkTables&&) noexcept;

    int cap() const { return cap_; }

    // number of simple cycles of length two_k (check-side trace / 2k)
    int64_t total(int two_k);
    // same quantity from the variable-side trace
    int64_t total_from_vars(int two_k);
    // per-check participation: cycles of length two_k through each C_i
    std::vector<int64_t> per_check(int two_k);

    // smallest cycle length found so far while growing; populated once a
    // length with cycles has been built
    std::optional<int> girth_found() const;

    // path-count matrix of the given length from the check or variable side
    // (exposed for table-level verification)
    const IntMatrix& path_matrix_checks(int len) const;
    const IntMatrix& path_matrix_vars(int len) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int cap_ = 16;
};

struct CycleCensus {
    int cap = 16;
    std::optional<int> girth;           // empty: acyclic up to cap
    int64_t total = 0;                  // N_g
    std::vector<int64_t> per_check;     // s_i, empty when acyclic
    int64_t per_check_sum = 0;          // exact numerator of mu_g
    double mu_g = 0.0;
    int m = 0;

    // strict s_i < mu_g without rounding: s_i * M < sum(s)
    bool below_mean(int i) const {
        return static_cast<__int128>(per_check[i]) * m < per_check_sum;
    }
};

struct CycleCount {
    int64_t total = 0;
    std::vector<int64_t> per_check;
};

CycleCount count_cycles_of_length(const ParityCheckMatrix& h, int two_k, int cap = 16);

CycleCensus census(const ParityCheckMatrix& h, int cap = 16);

// Exhaustive DFS enumeration of simple cycles with canonical dedup;
// independent of the matrix recursions. Only for n+m <= 24.
CycleCount brute_force_cycle_oracle(const ParityCheckMatrix& h, int two_k);

}  // namespace vfap
