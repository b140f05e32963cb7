#pragma once

// Random inputs for property tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "xirp/types.hpp"

namespace xirp::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    std::size_t length(std::size_t lo = 2, std::size_t hi = 48) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    /// Log-uniform positive values in [lo, hi].
    TimeSeries positive(double lo = 1e-2, double hi = 1e2) {
        std::vector<double> v(length());
        for (auto& x : v) x = std::exp(uniform(std::log(lo), std::log(hi)));
        return TimeSeries(std::move(v));
    }

    TimeSeries unit() {
        std::vector<double> v(length());
        for (auto& x : v) x = uniform(0.0, 1.0);
        return TimeSeries(std::move(v));
    }

    TimeSeries finite(double scale = 100.0) {
        std::vector<double> v(length());
        for (auto& x : v) x = uniform(-scale, scale);
        return TimeSeries(std::move(v));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace xirp::testing
