#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vfap/channel.hpp"
#include "vfap/cycle_census.hpp"
#include "vfap/decoder.hpp"
#include "vfap/parity_check.hpp"

namespace vfap {

struct SimRecord {
    std::string decoder;
    double snr_db = 0.0;
    int64_t trials = 0;
    int64_t bit_errors = 0;
    int64_t frame_errors = 0;
    int64_t undetected_frames = 0;  // zero syndrome but wrong codeword
    double ber = 0.0;
    double fer = 0.0;
    double avg_iterations = 0.0;  // non-converged frames count max_iter
    double converged_fraction = 0.0;
    int max_iter = 0;
    uint64_t seed = 0;
    std::string code_id;
};

struct SweepConfig {
    std::vector<DecoderVariant> variants;
    std::vector<double> snrs_db;
    int max_iterations = 10;
    double llr_clamp = 50.0;
    std::optional<double> rho_uniform;
    std::optional<double> rho_v_override;
    int64_t max_trials = 1000;
    int64_t min_frame_errors = 100;  // 0 disables the error-count stop
    uint64_t seed = 0;
    bool random_messages = false;  // default: all-zero codeword
    std::string code_id = "code";

    void validate() const;
};

using FrameObserver = std::function<void(DecoderVariant, double snr_db, int64_t frame,
                                         const DecodeResult&, const std::vector<uint8_t>& tx)>;

// Monte Carlo sweep over (variant, snr) points. Noise substreams depend on
// (seed, snr, frame) only, so every variant decodes identical received
// vectors frame by frame; two runs with equal config are bit-identical.
std::vector<SimRecord> run_sweep(const ParityCheckMatrix& h, const CycleCensus& census,
                                 const SweepConfig& cfg, const FrameObserver& observer = {});

// Fixed column schema, one row per record, variants in bp/urw/vfap order
// then snr ascending; reals printed with 10 significant digits.
void write_csv(const std::vector<SimRecord>& records, std::ostream& out);
std::string write_csv(const std::vector<SimRecord>& records);

}  // namespace vfap
