#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "sleepnet/common.hpp"

namespace sleepnet {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Derives the seed for a named sub-stream. All randomness in a run flows
/// from one root seed through these derivations, so any stage can be
/// reproduced in isolation.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view stream, std::uint64_t index = 0) {
    std::uint64_t h = fnv1a64(stream.data(), stream.size());
    return splitmix64(splitmix64(base ^ h) ^ index);
}

/// Deterministic random source. Distributions are implemented by hand on top
/// of the fully specified mt19937_64 stream, so sequences are identical on
/// every platform (std:: distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive, by rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        require(hi >= lo, "uniform_int: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(eng_()); // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Standard normal via Box-Muller (pair cached).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double gaussian(double mean, double sd) { return mean + sd * gaussian(); }

    /// Gaussian truncated to [lo, hi] by resampling.
    double truncated_gaussian(double mean, double sd, double lo, double hi) {
        require(lo <= hi, "truncated_gaussian: empty interval");
        for (int i = 0; i < 1000; ++i) {
            const double v = gaussian(mean, sd);
            if (v >= lo && v <= hi) return v;
        }
        return 0.5 * (lo + hi); // pathological parameters; keep deterministic
    }

    /// Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace sleepnet
