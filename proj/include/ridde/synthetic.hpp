#pragma once

#include <cstdint>
#include <vector>

#include "ridde/series.hpp"

namespace ridde {

/// Generator settings for the synthetic corpus. Each mechanism is a fixed
/// trend + single sinusoid shared by every channel assigned to it; channels
/// add per-instance phase/amplitude jitter and Gaussian noise on top, so the
/// mechanism id is a usable ground truth for what should be invariant.
struct SyntheticSpec {
    int n_mechanisms = 3;
    double trend_amp = 1.0;
    double seasonal_amp = 1.0;
    double noise_std = 0.1;
    int season_period = 8;
    double dynamic_jitter = 0.3;
    std::uint64_t seed = 0;
};

/// Deterministic in (spec, n_channels, length). Channel c uses mechanism
/// c % n_mechanisms.
std::vector<SeriesChannel> generate_synthetic(const SyntheticSpec& spec, std::size_t n_channels, std::size_t length);

} // namespace ridde
