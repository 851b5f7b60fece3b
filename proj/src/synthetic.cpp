#include "ridde/synthetic.hpp"

#include <cmath>

#include "ridde/errors.hpp"
#include "ridde/rng.hpp"

namespace ridde {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr std::uint64_t kMechTag = 0x6D656368; // "mech"
constexpr std::uint64_t kChanTag = 0x6368616E; // "chan"

struct Mechanism {
    double slope;
    double phase;
};
} // namespace

std::vector<SeriesChannel> generate_synthetic(const SyntheticSpec& spec, std::size_t n_channels, std::size_t length) {
    if (spec.n_mechanisms < 1)
        throw ConfigError("n_mechanisms must be at least 1");
    if (spec.trend_amp < 0 || spec.seasonal_amp < 0 || spec.noise_std < 0)
        throw ConfigError("synthetic amplitudes must be nonnegative");
    if (spec.season_period < 2)
        throw ConfigError("season_period must be at least 2");

    std::vector<Mechanism> mechanisms(static_cast<std::size_t>(spec.n_mechanisms));
    for (std::size_t k = 0; k < mechanisms.size(); ++k) {
        Rng rng(stream_seed(spec.seed, kMechTag, k));
        mechanisms[k].slope = rng.uniform(-1.0, 1.0);
        mechanisms[k].phase = rng.uniform(0.0, kTwoPi);
    }

    const double t_scale = length > 1 ? static_cast<double>(length - 1) : 1.0;
    std::vector<SeriesChannel> channels;
    channels.reserve(n_channels);
    for (std::size_t c = 0; c < n_channels; ++c) {
        const std::size_t k = c % mechanisms.size();
        const Mechanism& mech = mechanisms[k];
        Rng rng(stream_seed(spec.seed, kChanTag, c));
        const double amp_factor = 1.0 + spec.dynamic_jitter * rng.uniform(-1.0, 1.0);
        const double phase_shift = spec.dynamic_jitter * rng.uniform(-1.0, 1.0) * 3.14159265358979323846;

        SeriesChannel ch;
        ch.name = "mech" + std::to_string(k) + "_chan" + std::to_string(c);
        ch.frequency_tag = "synthetic/p" + std::to_string(spec.season_period);
        ch.mechanism_id = static_cast<int>(k);
        ch.values.resize(length);
        for (std::size_t t = 0; t < length; ++t) {
            const double u = static_cast<double>(t) / t_scale;
            const double trend = spec.trend_amp * mech.slope * (2.0 * u - 1.0);
            const double seasonal = spec.seasonal_amp * amp_factor * std::sin(kTwoPi * static_cast<double>(t) / spec.season_period + mech.phase + phase_shift);
            const double noise = spec.noise_std > 0.0 ? spec.noise_std * rng.normal() : 0.0;
            ch.values[t] = trend + seasonal + noise;
        }
        channels.push_back(std::move(ch));
    }
    return channels;
}

} // namespace ridde
