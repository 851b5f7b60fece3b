#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ridde/tensor.hpp"

namespace ridde {

/// One univariate series. mechanism_id is -1 for real data; synthetic
/// channels record which shared generator produced them (ground truth for
/// invariance probes).
struct SeriesChannel {
    std::string name;
    std::vector<double> values;
    std::string frequency_tag;
    int mechanism_id = -1;
};

struct SourceId {
    std::string channel;
    std::size_t start = 0;

    bool operator==(const SourceId&) const = default;
    std::string str() const { return channel + ":" + std::to_string(start); }
};

struct NormStats {
    double mean = 0.0;
    double std = 1.0;
};

/// A (context, horizon) pair; the unit of training, retrieval and
/// forecasting. norm_stats holds the context statistics once normalized.
struct Window {
    Tensor context;
    Tensor horizon;
    NormStats norm_stats;
    SourceId source_id;
    bool normalized = false;
    int mechanism_id = -1;
};

struct PatchConfig {
    std::size_t patch_len = 32;
    std::size_t stride = 32;
};

/// Number of patches a context of length T yields; remainder shorter than
/// patch_len is dropped.
std::size_t patch_count(std::size_t T, const PatchConfig& cfg);

/// Rows are x[p*stride : p*stride + patch_len].
Tensor patch(const Tensor& x, const PatchConfig& cfg);

inline constexpr double kStdFloor = 1e-8;

/// Instance normalization: context mean/std applied to both context and
/// horizon. Constant contexts fall back to the std floor.
Window normalize_window(const Window& w);
Window denormalize_window(const Window& w);
double denormalize_value(double v, const NormStats& stats);

/// Windows at starts 0, stride, 2*stride, ... while start+T+L fits.
std::vector<Window> slice_windows(const SeriesChannel& ch, std::size_t T, std::size_t L, std::size_t stride);

} // namespace ridde
