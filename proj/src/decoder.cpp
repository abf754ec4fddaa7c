#include "vfap/decoder.hpp"

#include <algorithm>
#include <cmath>

namespace vfap {

namespace {

double clamp_llr(double x, double c) { return std::clamp(x, -c, c); }

// odd-symmetric by construction, so negating every input negates every
// message bit-exactly
double tanh_half_mag(double psi) { return std::tanh(std::fabs(psi) * 0.5); }

constexpr double kAtanhGuard = 1.0 - 1e-12;

// product of magnitudes in ascending order, one rounding tree per multiset;
// the evaluation is invariant under any permutation of the incoming edges
double ascending_product(const std::vector<double>& sorted_mags, int skip) {
    double prod = 1.0;
    for (size_t k = 0; k < sorted_mags.size(); ++k) {
        if (static_cast<int>(k) == skip) continue;
        prod *= sorted_mags[k];
        if (prod == 0.0) return 0.0;
    }
    return prod;
}

double finish_check_msg(double mag, int neg_parity, double llr_clamp) {
    if (mag == 0.0) return 0.0;
    double lam = 2.0 * std::atanh(std::min(mag, kAtanhGuard));
    lam = std::min(lam, llr_clamp);
    return (neg_parity & 1) ? -lam : lam;
}

}  // namespace

const char* variant_name(DecoderVariant v) {
    switch (v) {
        case DecoderVariant::standard_bp: return "bp";
        case DecoderVariant::urw_bp: return "urw";
        case DecoderVariant::vfap_bp: return "vfap";
    }
    return "?";
}

std::optional<DecoderVariant> variant_from_name(const std::string& name) {
    if (name == "bp") return DecoderVariant::standard_bp;
    if (name == "urw") return DecoderVariant::urw_bp;
    if (name == "vfap") return DecoderVariant::vfap_bp;
    return std::nullopt;
}

ReweightVector ReweightVector::uniform(int m, double value) {
    ReweightVector r;
    r.rho.assign(m, value);
    r.validate();
    return r;
}

void ReweightVector::validate() const {
    for (double v : rho)
        if (!(v > 0.0 && v <= 1.0))
            throw std::invalid_argument("reweighting factors must lie in (0, 1]");
}

void DecoderConfig::validate() const {
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (!(llr_clamp > 0.0)) throw std::invalid_argument("llr_clamp must be positive");
    for (const auto& opt : {rho_uniform, rho_v_override})
        if (opt && !(*opt > 0.0 && *opt <= 1.0))
            throw std::invalid_argument("rho values must lie in (0, 1]");
}

std::vector<double> init_llr(const std::vector<double>& y, double sigma2, double llr_clamp) {
    if (!(sigma2 > 0.0)) throw NonPositiveVariance("noise variance must be positive");
    std::vector<double> l(y.size());
    for (size_t j = 0; j < y.size(); ++j) l[j] = clamp_llr(2.0 * y[j] / sigma2, llr_clamp);
    return l;
}

double check_update(const std::vector<double>& incoming, double llr_clamp) {
    std::vector<double> mags(incoming.size());
    int neg = 0;
    for (size_t k = 0; k < incoming.size(); ++k) {
        mags[k] = tanh_half_mag(incoming[k]);
        if (incoming[k] < 0.0) ++neg;
    }
    std::sort(mags.begin(), mags.end());
    return finish_check_msg(ascending_product(mags, -1), neg, llr_clamp);
}

double variable_update_bp(double l_j, const std::vector<double>& incoming, double llr_clamp) {
    double acc = l_j;
    for (double lam : incoming) acc += lam;
    return clamp_llr(acc, llr_clamp);
}

double variable_update_reweighted(double l_j,
                                  const std::vector<std::pair<double, double>>& incoming,
                                  double excluded_msg, double excluded_rho, double llr_clamp) {
    double acc = l_j;
    for (const auto& [lam, rho] : incoming) acc += rho * lam;
    double omr = 1.0 - excluded_rho;
    if (omr != 0.0) acc -= omr * excluded_msg;
    return clamp_llr(acc, llr_clamp);
}

std::vector<double> compute_beliefs(const ParityCheckMatrix& h, const std::vector<double>& l,
                                    const std::vector<double>& msg_c2v,
                                    const ReweightVector& rho, bool reweighted,
                                    double llr_clamp) {
    // msg_c2v is indexed by edge in check-major order
    std::vector<long> row_start(h.m() + 1, 0);
    for (int i = 0; i < h.m(); ++i)
        row_start[i + 1] = row_start[i] + static_cast<long>(h.row(i).size());

    std::vector<double> b(h.n());
    for (int j = 0; j < h.n(); ++j) {
        double acc = l[j];
        for (int i : h.col(j)) {
            const auto& r = h.row(i);
            long e = row_start[i] +
                     (std::lower_bound(r.begin(), r.end(), j) - r.begin());
            acc += reweighted ? rho.rho[i] * msg_c2v[e] : msg_c2v[e];
        }
        b[j] = clamp_llr(acc, llr_clamp);
    }
    return b;
}

std::vector<uint8_t> hard_decision(const std::vector<double>& beliefs) {
    std::vector<uint8_t> x(beliefs.size());
    for (size_t j = 0; j < beliefs.size(); ++j) x[j] = beliefs[j] > 0.0 ? 1 : 0;
    return x;
}

ReweightVector assign_faps(const ParityCheckMatrix& h, const CycleCensus& c, double rho_v) {
    if (!(rho_v > 0.0 && rho_v <= 1.0))
        throw std::invalid_argument("rho_v must lie in (0, 1]");
    if (c.m != h.m())
        throw CensusMismatch("census covers " + std::to_string(c.m) +
                             " checks but matrix has " + std::to_string(h.m()));
    if (!c.girth) return ReweightVector::uniform(h.m(), 1.0);
    if (static_cast<int>(c.per_check.size()) != h.m())
        throw CensusMismatch("census per-check counts incomplete");

    ReweightVector r;
    r.rho.resize(h.m());
    for (int i = 0; i < h.m(); ++i) r.rho[i] = c.below_mean(i) ? 1.0 : rho_v;
    return r;
}

ReweightVector reweight_for(const ParityCheckMatrix& h, const CycleCensus& c,
                            const DecoderConfig& cfg) {
    // 2 / mean variable degree, capped at 1 for very sparse graphs
    auto default_rho = [&] { return std::min(1.0, 2.0 / empirical_connectivity(h)); };
    switch (cfg.variant) {
        case DecoderVariant::standard_bp:
            return ReweightVector::uniform(h.m(), 1.0);
        case DecoderVariant::urw_bp:
            return ReweightVector::uniform(h.m(),
                                           cfg.rho_uniform ? *cfg.rho_uniform : default_rho());
        case DecoderVariant::vfap_bp:
            return assign_faps(h, c,
                               cfg.rho_v_override ? *cfg.rho_v_override : default_rho());
    }
    throw std::logic_error("unknown decoder variant");
}

DecodeResult decode(const ParityCheckMatrix& h, const std::vector<double>& y, double sigma2,
                    const DecoderConfig& cfg, const ReweightVector& rho,
                    const IterationObserver& observer) {
    cfg.validate();
    rho.validate();
    if (static_cast<int>(y.size()) != h.n())
        throw LengthMismatch("received vector length does not match n");
    if (static_cast<int>(rho.rho.size()) != h.m())
        throw LengthMismatch("reweighting vector length does not match m");

    const int m = h.m(), n = h.n();
    const bool reweighted = cfg.variant != DecoderVariant::standard_bp;

    // check-major edge layout; the variable view stores edge ids in
    // ascending check order, which fixes every traversal order
    std::vector<long> row_start(m + 1, 0);
    for (int i = 0; i < m; ++i)
        row_start[i + 1] = row_start[i] + static_cast<long>(h.row(i).size());
    const long n_edges = row_start[m];
    std::vector<std::vector<long>> var_edges(n);
    for (int i = 0; i < m; ++i) {
        const auto& r = h.row(i);
        for (size_t k = 0; k < r.size(); ++k) var_edges[r[k]].push_back(row_start[i] + k);
    }

    DecoderState st;
    st.channel_llr = init_llr(y, sigma2, cfg.llr_clamp);
    st.msg_v2c.assign(n_edges, 0.0);
    st.msg_c2v.assign(n_edges, 0.0);

    std::vector<double> mags;
    std::vector<int> order;

    DecodeResult res;
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        // variable-to-check messages; all-zero msg_c2v makes the first pass
        // the plain LLR initialization
        for (int j = 0; j < n; ++j) {
            const auto& ve = var_edges[j];
            const double lj = st.channel_llr[j];
            for (size_t a = 0; a < ve.size(); ++a) {
                double acc = lj;
                if (reweighted) {
                    for (size_t b = 0; b < ve.size(); ++b) {
                        if (b == a) continue;
                        acc += rho.rho[h.col(j)[b]] * st.msg_c2v[ve[b]];
                    }
                    double omr = 1.0 - rho.rho[h.col(j)[a]];
                    if (omr != 0.0) acc -= omr * st.msg_c2v[ve[a]];
                } else {
                    for (size_t b = 0; b < ve.size(); ++b) {
                        if (b == a) continue;
                        acc += st.msg_c2v[ve[b]];
                    }
                }
                st.msg_v2c[ve[a]] = clamp_llr(acc, cfg.llr_clamp);
            }
        }

        // check-to-variable messages: per-check magnitudes sorted ascending,
        // per-edge product excludes that edge's own contribution
        for (int i = 0; i < m; ++i) {
            const long base = row_start[i];
            const int deg = static_cast<int>(h.row(i).size());
            mags.resize(deg);
            order.resize(deg);
            int neg = 0;
            for (int k = 0; k < deg; ++k) {
                double psi = st.msg_v2c[base + k];
                mags[k] = tanh_half_mag(psi);
                order[k] = k;
                if (psi < 0.0) ++neg;
            }
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return mags[a] < mags[b]; });
            std::vector<double> sorted(deg);
            for (int k = 0; k < deg; ++k) sorted[k] = mags[order[k]];
            for (int k = 0; k < deg; ++k) {
                int pos = static_cast<int>(std::find(order.begin(), order.end(), k) -
                                           order.begin());
                double prod = ascending_product(sorted, pos);
                int parity = neg - (st.msg_v2c[base + k] < 0.0 ? 1 : 0);
                st.msg_c2v[base + k] = finish_check_msg(prod, parity, cfg.llr_clamp);
            }
        }

        st.beliefs = compute_beliefs(h, st.channel_llr, st.msg_c2v, rho, reweighted,
                                     cfg.llr_clamp);
        st.iteration = iter;
        res.codeword = hard_decision(st.beliefs);
        res.iterations_used = iter;
        if (observer) observer(st);

        const bool synd_zero = h.syndrome_is_zero(res.codeword);
        if (cfg.early_stop && synd_zero) {
            res.converged = true;
            break;
        }
        if (iter == cfg.max_iterations) res.converged = synd_zero;
    }
    res.final_beliefs = st.beliefs;
    return res;
}

}  // namespace vfap
