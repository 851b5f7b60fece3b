#include "ridde/rng.hpp"

#include <cmath>

namespace ridde {

std::uint64_t Rng::uniform_index(std::uint64_t n) {
    if (n == 0)
        return 0;
    const std::uint64_t bound = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t u = next_u64();
    while (u >= bound)
        u = next_u64();
    return u % n;
}

double Rng::normal() {
    // u1 in (0,1] so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index) {
    return mix_seed(mix_seed(master ^ mix_seed(tag)) ^ index);
}

} // namespace ridde
