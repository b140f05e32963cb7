#include "xirp/preprocessing.hpp"

#include <algorithm>

namespace xirp {

TimeSeries truncate(const TimeSeries& x, std::size_t limit) {
    if (limit < 2) throw Error(ErrorCode::InvalidParams, "truncation limit must be at least 2");
    if (x.size() <= limit) return x;
    return TimeSeries(std::vector<double>(x.values.begin(), x.values.begin() + static_cast<std::ptrdiff_t>(limit)),
                      x.name);
}

std::size_t window_count(std::size_t length, std::size_t d, std::size_t stride) {
    if (stride == 0) throw Error(ErrorCode::InvalidParams, "stride must be at least 1");
    if (d == 0) throw Error(ErrorCode::InvalidParams, "window length must be at least 1");
    if (d > length) {
        throw Error(ErrorCode::WindowTooLong,
                    "window length " + std::to_string(d) + " exceeds series length " + std::to_string(length));
    }
    return (length - d) / stride + 1;
}

std::vector<TimeSeries> window(const TimeSeries& x, std::size_t d, std::size_t stride) {
    const std::size_t count = window_count(x.size(), d, stride);
    std::vector<TimeSeries> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const auto first = x.values.begin() + static_cast<std::ptrdiff_t>(k * stride);
        out.emplace_back(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(d)),
                         x.name.empty() ? std::string{} : x.name + "#" + std::to_string(k));
    }
    return out;
}

ScalingParams fit_scaler(const TimeSeries& x, const RepresentationKind& kind, const ScalerOptions& options) {
    validate_series(x);
    double lo = 0.0;
    double hi = 1.0;
    if (std::holds_alternative<GASF>(kind)) {
        lo = 0.0;
        hi = 1.0;
    } else if (std::holds_alternative<IRP>(kind) || std::holds_alternative<XIRP>(kind)) {
        lo = options.log_target_lo;
        hi = options.log_target_hi;
        if (!(lo > 0.0) || !(hi > lo)) {
            throw Error(ErrorCode::InvalidParams, "log-return target range must satisfy 0 < lo < hi");
        }
    } else {
        return ScalingParams::identity();
    }

    std::size_t n = x.size();
    if (options.train_length) {
        if (*options.train_length == 0) throw Error(ErrorCode::InvalidParams, "training split is empty");
        n = std::min(n, *options.train_length);
    }
    const auto [mn, mx] = std::minmax_element(x.values.begin(), x.values.begin() + static_cast<std::ptrdiff_t>(n));
    ScalingParams p{*mn, *mx, lo, hi, false};
    if (*mx == *mn) p.degenerate = true;
    return p;
}

TimeSeries apply_scaler(const TimeSeries& x, const ScalingParams& p) {
    p.check();
    std::vector<double> y(x.size());
    std::transform(x.values.begin(), x.values.end(), y.begin(), [&](double v) { return p.forward(v); });
    return TimeSeries(std::move(y), x.name);
}

TimeSeries invert_scaler(const TimeSeries& y, const ScalingParams& p) {
    p.check();
    std::vector<double> x(y.size());
    std::transform(y.values.begin(), y.values.end(), x.begin(), [&](double v) { return p.inverse(v); });
    return TimeSeries(std::move(x), y.name);
}

}  // namespace xirp
