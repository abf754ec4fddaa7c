#include "vfap/channel.hpp"

#include <cmath>

namespace vfap {

ChannelModel ChannelModel::from_snr(double snr_db, double rate) {
    if (!(rate > 0.0 && rate < 1.0)) throw std::invalid_argument("rate must lie in (0,1)");
    ChannelModel ch;
    ch.snr_db = snr_db;
    ch.rate = rate;
    ch.sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, snr_db / 10.0));
    return ch;
}

std::vector<double> modulate(const std::vector<uint8_t>& x) {
    std::vector<double> s(x.size());
    for (size_t j = 0; j < x.size(); ++j) s[j] = x[j] ? 1.0 : -1.0;
    return s;
}

std::vector<double> transmit(const std::vector<double>& s, double sigma2, Philox& rng) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("noise variance must be positive");
    const double sigma = std::sqrt(sigma2);
    std::vector<double> y(s.size());
    for (size_t j = 0; j < s.size(); ++j) y[j] = s[j] + sigma * rng.next_gaussian();
    return y;
}

}  // namespace vfap
