#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace vfap {

// splitmix64 step; also used to fold labels into substream identifiers.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) {
    uint64_t s = a ^ (0x9E3779B97F4A7C15ULL + (b << 6) + (b >> 2));
    return splitmix64(s);
}

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A stream is
/// (key, counter-high); draws advance only the low counter words, so any
/// (seed, stream id) pair names a reproducible substream.
class Philox {
public:
    Philox(uint64_t key, uint64_t stream) : key_{low32(key), high32(key)} {
        counter_[2] = low32(stream);
        counter_[3] = high32(stream);
    }

    // next 32 random bits
    uint32_t next_u32() {
        if (idx_ == 4) {
            block_ = round10(counter_, key_);
            bump();
            idx_ = 0;
        }
        return block_[idx_++];
    }

    uint64_t next_u64() {
        uint64_t lo = next_u32();
        uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    // uniform on (0,1]: 53-bit mantissa, never zero
    double next_unit_open() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    }

    // uniform on [0,1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

    // standard normal via Box-Muller on the unit-interval outputs
    double next_gaussian() {
        double u1 = next_unit_open();
        double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // uniform integer in [0, bound) by rejection-free 64-bit reduction
    uint64_t next_below(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    static std::array<uint32_t, 4> round10(std::array<uint32_t, 4> ctr,
                                           std::array<uint32_t, 2> key) {
        for (int r = 0; r < 10; ++r) {
            ctr = single_round(ctr, key);
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

private:
    static uint32_t low32(uint64_t v) { return static_cast<uint32_t>(v); }
    static uint32_t high32(uint64_t v) { return static_cast<uint32_t>(v >> 32); }

    static std::array<uint32_t, 4> single_round(const std::array<uint32_t, 4>& c,
                                                const std::array<uint32_t, 2>& k) {
        uint64_t p0 = static_cast<uint64_t>(0xD2511F53u) * c[0];
        uint64_t p1 = static_cast<uint64_t>(0xCD9E8D57u) * c[2];
        uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
        uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }

    void bump() {
        if (++counter_[0] == 0) ++counter_[1];
    }

    std::array<uint32_t, 2> key_{};
    std::array<uint32_t, 4> counter_{};
    std::array<uint32_t, 4> block_{};
    int idx_ = 4;
};

// Substream id for a labelled point in the experiment grid. Labels are
// folded as raw bytes, numeric coordinates as 64-bit values.
inline uint64_t stream_id(std::string_view label, uint64_t a = 0, uint64_t b = 0) {
    uint64_t h = 0x2545F4914F6CDD1DULL;
    for (char c : label) h = mix64(h, static_cast<uint8_t>(c));
    h = mix64(h, a);
    h = mix64(h, b);
    return h;
}

}  // namespace vfap
