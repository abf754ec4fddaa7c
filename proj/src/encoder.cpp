#include "vfap/encoder.hpp"

#include <algorithm>

namespace vfap {

SystematicEncoder::SystematicEncoder(const ParityCheckMatrix& h) : n_(h.n()) {
    const int m = h.m(), n = h.n();
    std::vector<std::vector<uint8_t>> a(m, std::vector<uint8_t>(n, 0));
    for (int i = 0; i < m; ++i)
        for (int j : h.row(i)) a[i][j] = 1;

    // reduced row echelon form over GF(2), pivoting column by column
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pivot = -1;
        for (int r = row; r < m; ++r)
            if (a[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[row], a[pivot]);
        for (int r = 0; r < m; ++r) {
            if (r != row && a[r][col])
                for (int c = col; c < n; ++c) a[r][c] ^= a[row][c];
        }
        pivot_cols_.push_back(col);
        ++row;
    }
    rank_ = row;

    std::vector<uint8_t> is_pivot(n, 0);
    for (int c : pivot_cols_) is_pivot[c] = 1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) message_cols_.push_back(c);

    std::vector<int> msg_pos(n, -1);
    for (size_t k = 0; k < message_cols_.size(); ++k) msg_pos[message_cols_[k]] = static_cast<int>(k);

    solve_.resize(rank_);
    for (int r = 0; r < rank_; ++r)
        for (int c = 0; c < n; ++c)
            if (a[r][c] && c != pivot_cols_[r]) solve_[r].push_back(msg_pos[c]);
}

std::vector<uint8_t> SystematicEncoder::encode(const std::vector<uint8_t>& msg) const {
    if (static_cast<int>(msg.size()) != k())
        throw LengthMismatch("message length does not match k = n - rank");
    std::vector<uint8_t> x(n_, 0);
    for (size_t i = 0; i < message_cols_.size(); ++i) x[message_cols_[i]] = msg[i] & 1u;
    // pivot bit r equals the XOR of its row's message bits
    for (int r = 0; r < rank_; ++r) {
        uint8_t acc = 0;
        for (int p : solve_[r]) acc ^= msg[p] & 1u;
        x[pivot_cols_[r]] = acc;
    }
    return x;
}

std::vector<uint8_t> SystematicEncoder::extract_message(const std::vector<uint8_t>& codeword) const {
    if (static_cast<int>(codeword.size()) != n_)
        throw LengthMismatch("codeword length does not match n");
    std::vector<uint8_t> msg(message_cols_.size());
    for (size_t i = 0; i < message_cols_.size(); ++i) msg[i] = codeword[message_cols_[i]] & 1u;
    return msg;
}

}  // namespace vfap
