#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ridgerec {

// splitmix64, used to derive independent per-task seeds from (seed, index...).
// Keeping the derivation explicit makes results independent of scheduling.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return mix_seed(mix_seed(seed ^ 0x243f6a8885a308d3ULL) + a * 0x9e3779b97f4a7c15ULL + b);
}

// Deterministic random stream. std::mt19937_64 output is fully specified by
// the standard; the double conversions below avoid std::*_distribution, whose
// algorithms are implementation-defined, so streams are bit-stable across
// platforms and library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Modulo bias is negligible for the n used here
    // and keeps the draw count per call fixed, which matters for stream layout.
    std::uint64_t uniform_index(std::uint64_t n) { return engine_() % n; }

    // Standard normal via Box-Muller; caches the second variate.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        // Guard against log(0).
        while (u1 <= 0.0) u1 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ridgerec
