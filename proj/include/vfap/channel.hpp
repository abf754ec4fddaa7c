#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vfap/rng.hpp"

namespace vfap {

/// BPSK over AWGN at a given Eb/N0. sigma2 = 1 / (2 R 10^(snr/10)) for
/// unit-energy symbols.
struct ChannelModel {
    double snr_db = 0.0;
    double rate = 0.5;
    double sigma2 = 0.0;

    static ChannelModel from_snr(double snr_db, double rate);
};

// bit 1 -> +1, bit 0 -> -1
std::vector<double> modulate(const std::vector<uint8_t>& x);

// adds independent N(0, sigma2) noise drawn from the given stream
std::vector<double> transmit(const std::vector<double>& s, double sigma2, Philox& rng);

}  // namespace vfap
