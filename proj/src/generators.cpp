#include "xirp/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>

namespace xirp {

namespace {

// Jump draws get their own stream so the diffusion stream is unchanged by
// the presence of jumps.
constexpr std::uint64_t kJumpStreamSalt = 0x9E3779B97F4A7C15ULL;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidParams, what); }

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) invalid(std::string(name) + " must be finite");
}

template <class P>
const P& params_as(const GeneratorConfig& cfg) {
    const P* p = std::get_if<P>(&cfg.params);
    if (!p) invalid("parameters do not match family " + std::string(to_string(cfg.family)));
    return *p;
}

std::vector<double> sine_path(const SineParams& p, std::size_t n, std::uint64_t seed) {
    std::vector<double> x(n);
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (std::size_t t = 0; t < n; ++t) {
        x[t] = p.amplitude * std::sin(2.0 * std::numbers::pi * p.frequency * static_cast<double>(t) + p.shift);
        if (p.noise_std > 0.0) x[t] += p.noise_std * noise(engine);
    }
    return x;
}

std::vector<double> ar1_path(const AR1Params& p, std::size_t n, std::uint64_t seed) {
    std::vector<double> x(n, 0.0);
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> z(0.0, 1.0);
    for (std::size_t t = 1; t < n; ++t) x[t] = p.coefficient * x[t - 1] + p.innovation_std * z(engine);
    return x;
}

// x_t = x_{t-1} + drift + sigma * z_t (+ jump_t), x_0 = 0.
std::vector<double> diffusion_path(double drift, double sigma, std::size_t n, std::uint64_t seed,
                                   const MertonParams* jumps) {
    std::vector<double> x(n, 0.0);
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> z(0.0, 1.0);

    std::mt19937_64 jump_engine(seed ^ kJumpStreamSalt);
    std::poisson_distribution<int> count(jumps && jumps->lambda > 0.0 ? jumps->lambda : 1.0);
    std::normal_distribution<double> size(0.0, 1.0);

    for (std::size_t t = 1; t < n; ++t) {
        double next = x[t - 1] + drift + sigma * z(engine);
        if (jumps && jumps->lambda > 0.0) {
            const int k = count(jump_engine);
            double jump = 0.0;
            for (int m = 0; m < k; ++m) jump += jumps->jump_mean + jumps->jump_std * size(jump_engine);
            next += jump;
        }
        x[t] = next;
    }
    return x;
}

std::vector<double> power_law_path(const PowerLawParams& p, std::size_t n, std::uint64_t seed) {
    std::vector<double> x(n, 0.0);
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double exponent = -1.0 / p.alpha;
    for (std::size_t t = 1; t < n; ++t) {
        const double u = 1.0 - unif(engine);  // (0, 1]
        x[t] = x[t - 1] + (std::pow(u, exponent) - 1.0);
    }
    return x;
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Sine: return "sine";
        case Family::NoisySine: return "noisy-sine";
        case Family::AR1: return "ar1";
        case Family::Brownian: return "brownian";
        case Family::MertonJump: return "merton";
        case Family::PowerLaw: return "power-law";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    std::string n(name);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::replace(n.begin(), n.end(), '_', '-');
    if (n == "sine") return Family::Sine;
    if (n == "noisy-sine" || n == "noisysine") return Family::NoisySine;
    if (n == "ar1" || n == "ar(1)") return Family::AR1;
    if (n == "brownian" || n == "bm") return Family::Brownian;
    if (n == "merton" || n == "merton-jump" || n == "mertonjump") return Family::MertonJump;
    if (n == "power-law" || n == "powerlaw") return Family::PowerLaw;
    throw Error(ErrorCode::Parse, "unknown process family '" + std::string(name) + "'");
}

void GeneratorConfig::check() const {
    if (length < 2) invalid("length must be at least 2");
    switch (family) {
        case Family::Sine:
        case Family::NoisySine: {
            const auto& p = params_as<SineParams>(*this);
            require_finite(p.amplitude, "amplitude");
            require_finite(p.frequency, "frequency");
            require_finite(p.shift, "shift");
            require_finite(p.noise_std, "noise_std");
            if (p.noise_std < 0.0) invalid("noise_std must be nonnegative");
            if (family == Family::Sine && p.noise_std != 0.0) invalid("the sine family is noise-free; use noisy-sine");
            break;
        }
        case Family::AR1: {
            const auto& p = params_as<AR1Params>(*this);
            require_finite(p.coefficient, "coefficient");
            require_finite(p.innovation_std, "innovation_std");
            if (p.innovation_std < 0.0) invalid("innovation_std must be nonnegative");
            break;
        }
        case Family::Brownian: {
            const auto& p = params_as<BrownianParams>(*this);
            require_finite(p.mu, "mu");
            require_finite(p.sigma, "sigma");
            if (p.sigma < 0.0) invalid("sigma must be nonnegative");
            break;
        }
        case Family::MertonJump: {
            const auto& p = params_as<MertonParams>(*this);
            require_finite(p.mu, "mu");
            require_finite(p.sigma, "sigma");
            require_finite(p.lambda, "lambda");
            require_finite(p.jump_mean, "jump_mean");
            require_finite(p.jump_std, "jump_std");
            if (p.sigma < 0.0) invalid("sigma must be nonnegative");
            if (p.lambda < 0.0) invalid("lambda must be nonnegative");
            if (p.jump_std < 0.0) invalid("jump_std must be nonnegative");
            break;
        }
        case Family::PowerLaw: {
            const auto& p = params_as<PowerLawParams>(*this);
            if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) invalid("alpha must be positive");
            break;
        }
    }
}

TimeSeries generate(const GeneratorConfig& cfg) {
    cfg.check();
    const std::size_t n = cfg.length;
    std::vector<double> x;
    switch (cfg.family) {
        case Family::Sine:
        case Family::NoisySine:
            x = sine_path(std::get<SineParams>(cfg.params), n, cfg.seed);
            break;
        case Family::AR1:
            x = ar1_path(std::get<AR1Params>(cfg.params), n, cfg.seed);
            break;
        case Family::Brownian: {
            const auto& p = std::get<BrownianParams>(cfg.params);
            x = diffusion_path(p.mu, p.sigma, n, cfg.seed, nullptr);
            break;
        }
        case Family::MertonJump: {
            const auto& p = std::get<MertonParams>(cfg.params);
            x = diffusion_path(p.mu - p.sigma * p.sigma / 2.0, p.sigma, n, cfg.seed, &p);
            break;
        }
        case Family::PowerLaw:
            x = power_law_path(std::get<PowerLawParams>(cfg.params), n, cfg.seed);
            break;
    }
    return TimeSeries(std::move(x));
}

std::size_t default_series_count(Family f) {
    switch (f) {
        case Family::Sine: return 9;
        case Family::NoisySine: return 10;
        case Family::Brownian: return 10;
        case Family::MertonJump: return 10;
        case Family::PowerLaw: return 9;
        case Family::AR1: return 1;
    }
    return 1;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    if (n > 1) out.back() = hi;
    return out;
}

std::vector<GeneratorConfig> dataset_configs(Family family, std::size_t n_series, std::size_t length,
                                             std::uint64_t seed, const DatasetOptions& o) {
    if (n_series < 1) invalid("n_series must be at least 1");
    const std::size_t len = std::min(length, o.max_length);
    std::vector<GeneratorConfig> out;
    out.reserve(n_series);

    // Phase shifts spread over one period without repeating the start.
    std::vector<double> shifts(n_series);
    for (std::size_t k = 0; k < n_series; ++k) {
        shifts[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_series);
    }

    for (std::size_t k = 0; k < n_series; ++k) {
        GeneratorConfig cfg;
        cfg.family = family;
        cfg.length = len;
        cfg.seed = seed + k;
        switch (family) {
            case Family::Sine:
                cfg.params = SineParams{o.sine_amplitude, o.sine_frequency, shifts[k], 0.0};
                break;
            case Family::NoisySine:
                cfg.params = SineParams{o.sine_amplitude, o.sine_frequency, shifts[k],
                                        linspace(o.noise_min, o.noise_max, n_series)[k]};
                break;
            case Family::AR1:
                cfg.params = AR1Params{o.ar1_coefficient, o.ar1_innovation_std};
                break;
            case Family::Brownian:
                cfg.params = BrownianParams{0.0, linspace(o.brownian_sigma_min, o.brownian_sigma_max, n_series)[k]};
                break;
            case Family::MertonJump:
                cfg.params = MertonParams{0.0, linspace(o.merton_sigma_min, o.merton_sigma_max, n_series)[k],
                                          linspace(o.merton_lambda_min, o.merton_lambda_max, n_series)[k],
                                          o.merton_jump_mean, o.merton_jump_std};
                break;
            case Family::PowerLaw:
                cfg.params = PowerLawParams{linspace(o.power_alpha_min, o.power_alpha_max, n_series)[k]};
                break;
        }
        cfg.check();
        out.push_back(cfg);
    }
    return out;
}

std::vector<TimeSeries> build_dataset(Family family, std::size_t n_series, std::size_t length, std::uint64_t seed,
                                      const DatasetOptions& options) {
    std::vector<TimeSeries> out;
    std::size_t k = 0;
    for (const auto& cfg : dataset_configs(family, n_series, length, seed, options)) {
        TimeSeries s = generate(cfg);
        s.name = std::string(to_string(family)) + "_" + std::to_string(k++);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace xirp
