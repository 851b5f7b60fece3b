#pragma once

#include <cstdint>
#include <random>

namespace ridde {

/// Deterministic random source. mt19937_64 supplies the bit stream (its
/// output is pinned by the standard); all value transforms are written out
/// here instead of using std distributions, whose algorithms are
/// implementation-defined and would break byte-identical reruns across
/// toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, n), rejection sampled.
    std::uint64_t uniform_index(std::uint64_t n);

    /// Standard normal via Box-Muller (no cached partner, so the stream
    /// advances by exactly two words per draw).
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

  private:
    std::mt19937_64 eng_;
};

/// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Seed for a sub-stream, keyed by a purpose tag and an index. Streams for
/// (seed, tag, i) and (seed, tag, j) are decorrelated for i != j, which is
/// what lets training resume mid-run and reproduce a straight-through run.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index);

} // namespace ridde
