#pragma once

// Recovering a series from an XIRP, GASF or naive image.
//
// The diagonal gives a baseline series. Every column j then yields one
// variant of the series by combining the baseline value at j with the
// off-diagonal entries of that column. IM averages the variants, IRC picks
// one at random. Generated images are generally not self-consistent, so the
// variants differ; for an exact encoding they all coincide.

#include <cstdint>
#include <string_view>

#include "xirp/types.hpp"

namespace xirp {

/// Name of the PRNG behind IRC column draws, for output metadata.
inline constexpr std::string_view kIrcPrngName = "mt19937_64";

struct InversionOptions {
    /// Replace the XIRP off-diagonal by (R - R^T) / 2 before reconstruction.
    bool repair_consistency = false;
    /// IM averages XIRP variants geometrically (in log space). XIRP only.
    bool geometric_mean = false;
};

/// S x S matrix whose column j is the series reconstructed from column j.
struct ColumnVariants {
    Matrix variants;

    std::size_t size() const noexcept { return variants.size(); }
    TimeSeries column(std::size_t j) const;
};

TimeSeries extract_diagonal(const RepresentationMatrix& r);

TimeSeries reconstruct_column(const RepresentationMatrix& r, std::size_t j);

ColumnVariants column_variants(const RepresentationMatrix& r);

/// Uniform column index in [0, n) drawn from mt19937_64 seeded with `seed`.
/// Uses rejection sampling on the raw engine output so the draw is portable
/// across standard libraries.
std::size_t irc_column(std::uint64_t seed, std::size_t n);

TimeSeries invert(const RepresentationMatrix& r, const InversionMethod& method,
                  const InversionOptions& options = {});

/// (R - R^T) / 2 off the diagonal, diagonal untouched. XIRP only.
RepresentationMatrix repair_consistency(const RepresentationMatrix& r);

/// max_t |x_t - invert(encode(kind, x), method)_t|
double roundtrip_error(const TimeSeries& x, const RepresentationKind& kind, const InversionMethod& method);

}  // namespace xirp
