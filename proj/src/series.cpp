#include "ridde/series.hpp"

#include <cmath>

#include "ridde/errors.hpp"

namespace ridde {

std::size_t patch_count(std::size_t T, const PatchConfig& cfg) {
    if (cfg.patch_len == 0 || cfg.stride == 0)
        throw ConfigError("patch_len and stride must be positive");
    if (cfg.patch_len > T)
        throw ConfigError("patch_len " + std::to_string(cfg.patch_len) + " exceeds context length " + std::to_string(T));
    return (T - cfg.patch_len) / cfg.stride + 1;
}

Tensor patch(const Tensor& x, const PatchConfig& cfg) {
    const std::size_t T = x.size();
    const std::size_t P = patch_count(T, cfg);
    Tensor out({P, cfg.patch_len});
    for (std::size_t p = 0; p < P; ++p)
        for (std::size_t i = 0; i < cfg.patch_len; ++i)
            out.at(p, i) = x[p * cfg.stride + i];
    return out;
}

Window normalize_window(const Window& w) {
    const std::size_t T = w.context.size();
    double mean = 0.0;
    for (std::size_t i = 0; i < T; ++i)
        mean += w.context[i];
    mean /= static_cast<double>(T);
    double var = 0.0;
    for (std::size_t i = 0; i < T; ++i) {
        const double d = w.context[i] - mean;
        var += d * d;
    }
    var /= static_cast<double>(T);
    const double std_ = std::max(std::sqrt(var), kStdFloor);

    Window out = w;
    out.norm_stats = {mean, std_};
    out.normalized = true;
    for (std::size_t i = 0; i < T; ++i)
        out.context[i] = (w.context[i] - mean) / std_;
    for (std::size_t i = 0; i < w.horizon.size(); ++i)
        out.horizon[i] = (w.horizon[i] - mean) / std_;
    return out;
}

double denormalize_value(double v, const NormStats& stats) { return v * stats.std + stats.mean; }

Window denormalize_window(const Window& w) {
    Window out = w;
    out.normalized = false;
    for (std::size_t i = 0; i < w.context.size(); ++i)
        out.context[i] = denormalize_value(w.context[i], w.norm_stats);
    for (std::size_t i = 0; i < w.horizon.size(); ++i)
        out.horizon[i] = denormalize_value(w.horizon[i], w.norm_stats);
    return out;
}

std::vector<Window> slice_windows(const SeriesChannel& ch, std::size_t T, std::size_t L, std::size_t stride) {
    if (T == 0 || L == 0 || stride == 0)
        throw ConfigError("T, L and stride must be positive");
    std::vector<Window> out;
    const std::size_t n = ch.values.size();
    if (n < T + L)
        return out;
    for (std::size_t start = 0; start + T + L <= n; start += stride) {
        Window w;
        w.context = Tensor({T});
        w.horizon = Tensor({L});
        for (std::size_t i = 0; i < T; ++i)
            w.context[i] = ch.values[start + i];
        for (std::size_t i = 0; i < L; ++i)
            w.horizon[i] = ch.values[start + T + i];
        w.source_id = {ch.name, start};
        w.mechanism_id = ch.mechanism_id;
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace ridde
