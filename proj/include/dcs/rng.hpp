#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace dcs {

// Seeded random stream. Every consumer takes an explicit stream so runs are
// reproducible; substreams are derived by hashing a label into the seed,
// which keeps experiment cells independent of execution order.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::mt19937_64& engine() { return engine_; }

    double normal(double mean = 0.0, double stddev = 1.0) {
        return std::normal_distribution<double>(mean, stddev)(engine_);
    }

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    // Gamma draw in shape/rate form (mean = shape/rate).
    double gamma(double shape, double rate) {
        return std::gamma_distribution<double>(shape, 1.0 / rate)(engine_);
    }

    double beta(double e, double f) {
        const double x = gamma(e, 1.0);
        const double y = gamma(f, 1.0);
        return x / (x + y);
    }

    bool bernoulli(double prob) {
        return std::bernoulli_distribution(prob)(engine_);
    }

    std::uint64_t integer() { return engine_(); }

    // Deterministic substream derived from (this seed, label).
    RngStream substream(const std::string& label) const {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (unsigned char c : label) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= seed_mix_;
        h *= 1099511628211ull;
        return RngStream(h);
    }

    static RngStream with_mix(std::uint64_t seed, std::uint64_t mix) {
        RngStream s(seed ^ (mix * 0x9e3779b97f4a7c15ull));
        s.seed_mix_ = seed ^ mix;
        return s;
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_mix_ = 0;
};

// Substream for an experiment cell, stable across run orders.
inline RngStream cell_stream(std::uint64_t seed, const std::string& cell_key) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : cell_key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return RngStream::with_mix(seed, h);
}

}  // namespace dcs
