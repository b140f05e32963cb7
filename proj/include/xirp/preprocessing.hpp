#pragma once

// Truncation, sliding windows and per-representation affine scaling.

#include <cstddef>
#include <optional>
#include <vector>

#include "xirp/types.hpp"

namespace xirp {

/// Observation cap applied to every input series.
inline constexpr std::size_t kDefaultSeriesLimit = 1000;

/// Strictly positive target range for IRP/XIRP input. The lower bound keeps
/// |log(x_i/x_j)| <= log(10).
inline constexpr double kLogTargetLo = 0.1;
inline constexpr double kLogTargetHi = 1.0;

TimeSeries truncate(const TimeSeries& x, std::size_t limit = kDefaultSeriesLimit);

/// Windows x[k*stride, k*stride + d) for every k whose window fits.
std::vector<TimeSeries> window(const TimeSeries& x, std::size_t d, std::size_t stride = 1);

/// Number of windows window() would return.
std::size_t window_count(std::size_t length, std::size_t d, std::size_t stride);

struct ScalerOptions {
    double log_target_lo = kLogTargetLo;
    double log_target_hi = kLogTargetHi;
    /// Fit on the first `train_length` points only (the series' training
    /// split). Unset means the whole series.
    std::optional<std::size_t> train_length;
};

/// GASF -> [0, 1]; IRP/XIRP -> [log_target_lo, log_target_hi];
/// BinaryRP/URP/Naive -> identity.
ScalingParams fit_scaler(const TimeSeries& x, const RepresentationKind& kind, const ScalerOptions& options = {});

TimeSeries apply_scaler(const TimeSeries& x, const ScalingParams& p);
TimeSeries invert_scaler(const TimeSeries& y, const ScalingParams& p);

}  // namespace xirp
