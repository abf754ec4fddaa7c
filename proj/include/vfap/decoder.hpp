#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vfap/cycle_census.hpp"
#include "vfap/parity_check.hpp"

namespace vfap {

struct NonPositiveVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CensusMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DecoderVariant { standard_bp, urw_bp, vfap_bp };

const char* variant_name(DecoderVariant v);
std::optional<DecoderVariant> variant_from_name(const std::string& name);

/// Per-check reweighting factors rho_i, each in (0, 1].
struct ReweightVector {
    std::vector<double> rho;

    static ReweightVector uniform(int m, double value);
    void validate() const;
};

struct DecoderConfig {
    DecoderVariant variant = DecoderVariant::standard_bp;
    int max_iterations = 60;
    double llr_clamp = 50.0;
    std::optional<double> rho_uniform;     // urw_bp; default 2 / mean variable degree
    std::optional<double> rho_v_override;  // vfap_bp; default 2 / mean variable degree
    bool early_stop = true;                // syndrome test each iteration

    void validate() const;
};

/// Per-edge messages and per-variable beliefs of a decode in flight.
/// Messages are indexed by edge in check-major order.
struct DecoderState {
    std::vector<double> channel_llr;  // L(x_j)
    std::vector<double> msg_v2c;      // Psi_ji
    std::vector<double> msg_c2v;      // Lambda_ij
    std::vector<double> beliefs;      // b(x_j)
    int iteration = 0;
};

struct DecodeResult {
    std::vector<uint8_t> codeword;
    bool converged = false;
    int iterations_used = 0;
    std::vector<double> final_beliefs;
};

// Channel LLRs for BPSK over AWGN with the bit-1 -> +1 mapping:
// L(x_j) = 2 y_j / sigma^2, clamped.
std::vector<double> init_llr(const std::vector<double>& y, double sigma2,
                             double llr_clamp = 50.0);

// Check-to-variable rule: 2 atanh(prod tanh(psi/2)) with the product
// magnitude clamped below 1 and the result clamped to +-llr_clamp.
double check_update(const std::vector<double>& incoming, double llr_clamp = 50.0);

// Plain sum rule: psi = L + sum(incoming).
double variable_update_bp(double l_j, const std::vector<double>& incoming,
                          double llr_clamp = 50.0);

// Reweighted rule: psi = L + sum(rho_k * incoming_k) - (1 - rho_i) * excluded.
double variable_update_reweighted(double l_j,
                                  const std::vector<std::pair<double, double>>& incoming,
                                  double excluded_msg, double excluded_rho,
                                  double llr_clamp = 50.0);

// b_j = L_j + sum over N(j) of rho_i * Lambda_ij (rho ignored for plain BP).
std::vector<double> compute_beliefs(const ParityCheckMatrix& h,
                                    const std::vector<double>& l,
                                    const std::vector<double>& msg_c2v,
                                    const ReweightVector& rho, bool reweighted,
                                    double llr_clamp = 50.0);

// x_j = 1 iff b_j > 0; exact zero decides 0.
std::vector<uint8_t> hard_decision(const std::vector<double>& beliefs);

// rho_i = 1 where s_i < mu_g (strict, in exact arithmetic), else rho_v;
// an acyclic census yields all ones.
ReweightVector assign_faps(const ParityCheckMatrix& h, const CycleCensus& c, double rho_v);

// Reweighting vector a variant uses on graph h: all ones for standard BP,
// uniform rho_u for URW, census-driven for VFAP.
ReweightVector reweight_for(const ParityCheckMatrix& h, const CycleCensus& c,
                            const DecoderConfig& cfg);

using IterationObserver = std::function<void(const DecoderState&)>;

// Flooding-schedule decode: variable updates, check updates, beliefs, hard
// decision and syndrome test per iteration, stopping at a zero syndrome or
// max_iterations. All message traversal orders are fixed by the matrix's
// sorted adjacency; results are deterministic.
DecodeResult decode(const ParityCheckMatrix& h, const std::vector<double>& y, double sigma2,
                    const DecoderConfig& cfg, const ReweightVector& rho,
                    const IterationObserver& observer = {});

}  // namespace vfap
