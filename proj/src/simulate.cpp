#include "vfap/simulate.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "vfap/encoder.hpp"

namespace vfap {

void SweepConfig::validate() const {
    if (variants.empty()) throw std::invalid_argument("no decoder variants given");
    if (snrs_db.empty()) throw std::invalid_argument("no SNR points given");
    if (max_trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (min_frame_errors < 0) throw std::invalid_argument("frame-error stop must be >= 0");
    if (max_iterations < 1) throw std::invalid_argument("max iterations must be >= 1");
}

namespace {

int variant_rank(const std::string& name) {
    if (name == "bp") return 0;
    if (name == "urw") return 1;
    if (name == "vfap") return 2;
    return 3;
}

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

std::vector<SimRecord> run_sweep(const ParityCheckMatrix& h, const CycleCensus& census,
                                 const SweepConfig& cfg, const FrameObserver& observer) {
    cfg.validate();
    if (h.n() <= h.m())
        throw std::invalid_argument("sweep expects a code with n > m");
    const double rate = static_cast<double>(h.n() - h.m()) / h.n();

    std::vector<DecoderVariant> variants = cfg.variants;
    std::sort(variants.begin(), variants.end());
    variants.erase(std::unique(variants.begin(), variants.end()), variants.end());
    std::vector<double> snrs = cfg.snrs_db;
    std::sort(snrs.begin(), snrs.end());

    std::optional<SystematicEncoder> encoder;
    if (cfg.random_messages) encoder.emplace(h);

    std::vector<SimRecord> records;
    for (DecoderVariant variant : variants) {
        DecoderConfig dcfg;
        dcfg.variant = variant;
        dcfg.max_iterations = cfg.max_iterations;
        dcfg.llr_clamp = cfg.llr_clamp;
        dcfg.rho_uniform = cfg.rho_uniform;
        dcfg.rho_v_override = cfg.rho_v_override;
        const ReweightVector rho = reweight_for(h, census, dcfg);

        for (double snr : snrs) {
            const ChannelModel ch = ChannelModel::from_snr(snr, rate);
            const uint64_t snr_key = static_cast<uint64_t>(llround(snr * 1000.0));

            SimRecord rec;
            rec.decoder = variant_name(variant);
            rec.snr_db = snr;
            rec.max_iter = cfg.max_iterations;
            rec.seed = cfg.seed;
            rec.code_id = cfg.code_id;

            int64_t iter_sum = 0, converged = 0;
            for (int64_t frame = 0; frame < cfg.max_trials; ++frame) {
                if (cfg.min_frame_errors > 0 && rec.frame_errors >= cfg.min_frame_errors)
                    break;

                std::vector<uint8_t> tx(h.n(), 0);
                if (encoder) {
                    Philox msg_rng(cfg.seed, stream_id("message", frame));
                    std::vector<uint8_t> msg(encoder->k());
                    for (auto& b : msg) b = static_cast<uint8_t>(msg_rng.next_u32() & 1u);
                    tx = encoder->encode(msg);
                }

                // noise keyed without the variant: paired comparisons see
                // identical channel realizations
                Philox noise_rng(cfg.seed, stream_id("noise", snr_key, frame));
                const std::vector<double> y = transmit(modulate(tx), ch.sigma2, noise_rng);

                const DecodeResult res = decode(h, y, ch.sigma2, dcfg, rho);
                ++rec.trials;
                iter_sum += res.iterations_used;
                if (res.converged) ++converged;
                int64_t wrong = 0;
                for (int j = 0; j < h.n(); ++j)
                    if (res.codeword[j] != tx[j]) ++wrong;
                rec.bit_errors += wrong;
                if (wrong > 0) {
                    ++rec.frame_errors;
                    if (res.converged) ++rec.undetected_frames;
                }
                if (observer) observer(variant, snr, frame, res, tx);
            }

            rec.ber = static_cast<double>(rec.bit_errors) /
                      (static_cast<double>(rec.trials) * h.n());
            rec.fer = static_cast<double>(rec.frame_errors) / static_cast<double>(rec.trials);
            rec.avg_iterations = static_cast<double>(iter_sum) / static_cast<double>(rec.trials);
            rec.converged_fraction =
                static_cast<double>(converged) / static_cast<double>(rec.trials);
            records.push_back(std::move(rec));
        }
    }
    return records;
}

void write_csv(const std::vector<SimRecord>& records, std::ostream& out) {
    std::vector<const SimRecord*> ordered;
    ordered.reserve(records.size());
    for (const auto& r : records) ordered.push_back(&r);
    std::stable_sort(ordered.begin(), ordered.end(), [](const SimRecord* a, const SimRecord* b) {
        int ra = variant_rank(a->decoder), rb = variant_rank(b->decoder);
        if (ra != rb) return ra < rb;
        if (a->decoder != b->decoder) return a->decoder < b->decoder;
        return a->snr_db < b->snr_db;
    });

    out << "decoder,snr_db,trials,bit_errors,frame_errors,undetected_frames,ber,fer,"
           "avg_iterations,converged_fraction,max_iter,seed,code_id\n";
    for (const SimRecord* r : ordered) {
        out << r->decoder << ',' << fmt_real(r->snr_db) << ',' << r->trials << ','
            << r->bit_errors << ',' << r->frame_errors << ',' << r->undetected_frames << ','
            << fmt_real(r->ber) << ',' << fmt_real(r->fer) << ',' << fmt_real(r->avg_iterations)
            << ',' << fmt_real(r->converged_fraction) << ',' << r->max_iter << ',' << r->seed
            << ',' << r->code_id << '\n';
    }
}

std::string write_csv(const std::vector<SimRecord>& records) {
    std::ostringstream out;
    write_csv(records, out);
    return out.str();
}

}  // namespace vfap
