#include "fprf/rng.hpp"

#include <cmath>
#include <limits>

namespace fprf {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::uint64_t x = seed ^ (0xD2B74407B1CE6E93ULL * (stream_id + 1));
    for (auto& w : s_) w = splitmix64(x);
    // xoshiro dislikes the all-zero state; splitmix cannot emit four zeros
    // from distinct counters, but guard anyway.
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

RngStream RngStream::substream(std::uint64_t i) const {
    std::uint64_t x = stream_id_ ^ (0x9E3779B97F4A7C15ULL * (i + 1));
    return RngStream(seed_, splitmix64(x));
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::u01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::u01_open() {
    double u;
    do {
        u = u01();
    } while (u == 0.0);
    return u;
}

double RngStream::uniform(double a, double b) { return a + (b - a) * u01(); }

double RngStream::exponential(double rate) {
    return -std::log(u01_open()) / rate;
}

double RngStream::normal(double mean, double stddev) {
    // Box-Muller; two fresh uniforms per draw keeps the stream stateless.
    double u1 = u01_open();
    double u2 = u01();
    return mean + stddev * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

long RngStream::poisson(double mean) {
    if (mean <= 0.0) return 0;
    return mean < 30.0 ? poisson_inversion(mean) : poisson_ptrs(mean);
}

long RngStream::poisson_inversion(double mean) {
    double p = std::exp(-mean);
    double cdf = p;
    double u = u01();
    long k = 0;
    while (u > cdf && k < 1000000) {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

// Hormann's PTRS transformed rejection; exact for mean >= 10.
long RngStream::poisson_ptrs(double mean) {
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    while (true) {
        double u = u01() - 0.5;
        double v = u01();
        double us = 0.5 - std::fabs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= vr) return static_cast<long>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
            kf * loglam - mean - std::lgamma(kf + 1.0))
            return static_cast<long>(kf);
    }
}

}  // namespace fprf
