#pragma once

// Seeded synthetic benchmark processes: sine, noisy sine, AR(1), Brownian
// motion, Merton jump diffusion and a Pareto-increment power-law walk.
//
// All processes use a unit time step. Random draws come from std::mt19937_64;
// diffusion noise and jump noise use separate engines so a Merton run with
// lambda = 0 reproduces the matching Brownian run bit-for-bit.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xirp/types.hpp"

namespace xirp {

enum class Family { Sine, NoisySine, AR1, Brownian, MertonJump, PowerLaw };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct SineParams {
    double amplitude = 1.0;
    double frequency = 1.0 / 50.0;  ///< cycles per step
    double shift = 0.0;             ///< radians
    double noise_std = 0.0;
};

struct AR1Params {
    double coefficient = 0.9;
    double innovation_std = 1.0;
};

struct BrownianParams {
    double mu = 0.0;     ///< drift per step
    double sigma = 0.9;  ///< diffusion per step
};

struct MertonParams {
    double mu = 0.0;
    double sigma = 0.9;
    double lambda = 0.05;  ///< expected jumps per step
    double jump_mean = 0.0;
    double jump_std = 5.0;
};

struct PowerLawParams {
    double alpha = 0.5;  ///< tail exponent
};

using ProcessParams = std::variant<SineParams, AR1Params, BrownianParams, MertonParams, PowerLawParams>;

struct GeneratorConfig {
    Family family = Family::Brownian;
    std::size_t length = 1000;
    std::uint64_t seed = 0;
    ProcessParams params = BrownianParams{};

    /// Throws Error{InvalidParams} when parameters violate their domains or do
    /// not match the family.
    void check() const;
};

TimeSeries generate(const GeneratorConfig& cfg);

/// Sweep ranges and fixed parameters used by build_dataset().
struct DatasetOptions {
    double sine_amplitude = 1.0;
    double sine_frequency = 1.0 / 50.0;
    double noise_min = 0.05;
    double noise_max = 0.5;
    double brownian_sigma_min = 0.90;
    double brownian_sigma_max = 0.99;
    double merton_lambda_min = 0.01;
    double merton_lambda_max = 0.10;
    double merton_sigma_min = 0.90;
    double merton_sigma_max = 0.99;
    double merton_jump_mean = 0.0;
    double merton_jump_std = 5.0;
    double power_alpha_min = 0.1;
    double power_alpha_max = 0.9;
    double ar1_coefficient = 0.9;
    double ar1_innovation_std = 1.0;
    std::size_t max_length = 1000;
};

/// Default number of series per family (Sine 9, NoisySine 10, Brownian 10,
/// MertonJump 10, PowerLaw 9, AR1 1).
std::size_t default_series_count(Family f);

/// `n` points linearly spaced over [lo, hi]; a single point yields lo.
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// The per-series configurations of a parameter sweep. Series k uses seed
/// `seed + k`.
std::vector<GeneratorConfig> dataset_configs(Family family, std::size_t n_series, std::size_t length,
                                             std::uint64_t seed, const DatasetOptions& options = {});

std::vector<TimeSeries> build_dataset(Family family, std::size_t n_series, std::size_t length, std::uint64_t seed,
                                      const DatasetOptions& options = {});

}  // namespace xirp
