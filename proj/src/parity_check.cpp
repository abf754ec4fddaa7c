#include "vfap/parity_check.hpp"

#include <algorithm>
#include <cmath>

namespace vfap {

ParityCheckMatrix::ParityCheckMatrix(int m, int n, std::vector<std::vector<int>> rows)
    : m_(m), n_(n), rows_(std::move(rows)) {
    if (m <= 0 || n <= 0)
        throw std::invalid_argument("parity-check matrix must have positive dimensions");
    if (static_cast<int>(rows_.size()) != m)
        throw std::invalid_argument("row list count does not match m");

    cols_.assign(n_, {});
    for (int i = 0; i < m_; ++i) {
        const auto& r = rows_[i];
        if (r.empty()) throw EmptyRowOrColumn(true, i);
        for (size_t k = 0; k < r.size(); ++k) {
            int j = r[k];
            if (j < 0 || j >= n_)
                throw std::invalid_argument("variable index out of range in row " +
                                            std::to_string(i));
            if (k > 0 && r[k - 1] >= j)
                throw std::invalid_argument("row " + std::to_string(i) +
                                            " is not strictly increasing");
            cols_[j].push_back(i);
            ++edges_;
        }
    }
    for (int j = 0; j < n_; ++j)
        if (cols_[j].empty()) throw EmptyRowOrColumn(false, j);
    // cols_ entries arrive in increasing i because rows are scanned in order
}

ParityCheckMatrix ParityCheckMatrix::from_dense(const std::vector<std::vector<uint8_t>>& bits) {
    if (bits.empty() || bits[0].empty())
        throw std::invalid_argument("empty dense matrix");
    int m = static_cast<int>(bits.size());
    int n = static_cast<int>(bits[0].size());
    std::vector<std::vector<int>> rows(m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(bits[i].size()) != n)
            throw std::invalid_argument("ragged dense matrix");
        for (int j = 0; j < n; ++j)
            if (bits[i][j]) rows[i].push_back(j);
    }
    return ParityCheckMatrix(m, n, std::move(rows));
}

std::vector<uint8_t> ParityCheckMatrix::syndrome(const std::vector<uint8_t>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw LengthMismatch("syndrome: word length " + std::to_string(x.size()) +
                             " does not match n=" + std::to_string(n_));
    std::vector<uint8_t> s(m_, 0);
    for (int i = 0; i < m_; ++i) {
        uint8_t acc = 0;
        for (int j : rows_[i]) acc ^= (x[j] & 1u);
        s[i] = acc;
    }
    return s;
}

bool ParityCheckMatrix::syndrome_is_zero(const std::vector<uint8_t>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw LengthMismatch("syndrome: word length mismatch");
    for (int i = 0; i < m_; ++i) {
        uint8_t acc = 0;
        for (int j : rows_[i]) acc ^= (x[j] & 1u);
        if (acc) return false;
    }
    return true;
}

void DegreeProfile::validate() const {
    auto check_poly = [](const std::vector<double>& c, const char* name) {
        double sum = 0.0;
        for (double v : c) {
            if (v < 0.0)
                throw std::invalid_argument(std::string(name) + " has a negative coefficient");
            sum += v;
        }
        if (std::fabs(sum - 1.0) > 1e-9)
            throw std::invalid_argument(std::string(name) + " coefficients must sum to 1");
    };
    check_poly(lambda_coeffs, "lambda");
    if (!nu_coeffs.empty()) check_poly(nu_coeffs, "nu");
    if (design_rate < 0.0 || design_rate >= 1.0)
        throw std::invalid_argument("design rate must lie in [0,1)");
}

double average_connectivity(const DegreeProfile& p) {
    p.validate();
    double integral = 0.0;
    for (size_t k = 0; k < p.lambda_coeffs.size(); ++k)
        integral += p.lambda_coeffs[k] / static_cast<double>(k + 1);
    if (integral <= 0.0)
        throw DegenerateProfile("lambda integrates to zero");
    return 1.0 / integral;
}

double empirical_connectivity(const ParityCheckMatrix& h) {
    return static_cast<double>(h.edge_count()) / static_cast<double>(h.n());
}

}  // namespace vfap
