#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vfap/parity_check.hpp"

namespace vfap {

struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Systematic encoder built by GF(2) Gaussian elimination with column
/// pivoting. Message bits sit on the non-pivot columns; pivot columns are
/// solved so the syndrome vanishes. k() = n - rank(H).
class SystematicEncoder {
public:
    explicit SystematicEncoder(const ParityCheckMatrix& h);

    int n() const { return n_; }
    int k() const { return static_cast<int>(message_cols_.size()); }
    int rank() const { return rank_; }

    std::vector<uint8_t> encode(const std::vector<uint8_t>& msg) const;
    std::vector<uint8_t> extract_message(const std::vector<uint8_t>& codeword) const;

private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<int> pivot_cols_;            // one per reduced row
    std::vector<int> message_cols_;          // ascending
    std::vector<std::vector<int>> solve_;    // per pivot row: message-col positions to XOR
};

}  // namespace vfap
