#pragma once

// Pairwise image encodings R[i][j] = f(x_i, x_j) of a univariate series.
//
// Row index is i (first argument of f), column index is j. Encoders never
// rescale their input: callers scale first (see preprocessing.hpp) and a
// domain violation throws.

#include "xirp/types.hpp"

namespace xirp {

/// 1 where |x_i - x_j| <= epsilon, else 0.
RepresentationMatrix encode_binary_rp(const TimeSeries& x, double epsilon);

/// |x_i - x_j|.
RepresentationMatrix encode_urp(const TimeSeries& x);

/// log(x_i / x_j). Requires strictly positive input.
RepresentationMatrix encode_irp(const TimeSeries& x);

/// IRP off-diagonal with the series itself on the diagonal.
RepresentationMatrix encode_xirp(const TimeSeries& x);

/// cos(phi_i + phi_j) with phi = arccos(x). Requires input in [0, 1].
RepresentationMatrix encode_gasf(const TimeSeries& x);

/// R[i][j] = x_i; every row is constant.
RepresentationMatrix encode_naive(const TimeSeries& x);

RepresentationMatrix encode(const RepresentationKind& kind, const TimeSeries& x);

}  // namespace xirp
