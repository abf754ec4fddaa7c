#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vfap {

struct EmptyRowOrColumn : std::runtime_error {
    bool is_row;
    int index;
    EmptyRowOrColumn(bool row, int idx)
        : std::runtime_error(std::string(row ? "check node " : "variable node ") +
                             std::to_string(idx) + " has no incident edges"),
          is_row(row), index(idx) {}
};

struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateProfile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse binary parity-check matrix held as mutually consistent row and
/// column adjacency lists. Immutable after construction; index lists are
/// strictly increasing, so all neighborhood iteration orders are fixed and
/// decoder runs are reproducible.
class ParityCheckMatrix {
public:
    // rows[i] lists the variable nodes of check i; columns are derived.
    ParityCheckMatrix(int m, int n, std::vector<std::vector<int>> rows);

    static ParityCheckMatrix from_dense(const std::vector<std::vector<uint8_t>>& bits);

    int m() const { return m_; }
    int n() const { return n_; }
    long edge_count() const { return edges_; }

    const std::vector<int>& row(int i) const { return rows_[i]; }
    const std::vector<int>& col(int j) const { return cols_[j]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<std::vector<int>>& cols() const { return cols_; }

    // Hx^T over GF(2); component i is the XOR of x over row i.
    std::vector<uint8_t> syndrome(const std::vector<uint8_t>& x) const;
    bool syndrome_is_zero(const std::vector<uint8_t>& x) const;

    bool operator==(const ParityCheckMatrix& other) const {
        return m_ == other.m_ && n_ == other.n_ && rows_ == other.rows_;
    }

private:
    int m_ = 0;
    int n_ = 0;
    long edges_ = 0;
    std::vector<std::vector<int>> rows_;
    std::vector<std::vector<int>> cols_;
};

/// Edge-perspective degree distributions. lambda_coeffs[k] is the
/// coefficient of x^k in lambda(x); a degree-d node class contributes at
/// exponent d-1. Same layout for the check-side nu(x).
struct DegreeProfile {
    std::vector<double> lambda_coeffs;
    std::vector<double> nu_coeffs;
    double design_rate = 0.0;

    void validate() const;
};

// 1 / integral_0^1 lambda(x) dx, in closed form from the coefficients.
double average_connectivity(const DegreeProfile& p);

// Realized mean variable-node degree: edge count / n.
double empirical_connectivity(const ParityCheckMatrix& h);

}  // namespace vfap
