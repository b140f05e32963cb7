#include "xirp/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "xirp/representations.hpp"

namespace xirp {

namespace {

void require_invertible(const RepresentationMatrix& r) {
    if (!is_invertible(r.kind)) {
        throw Error(ErrorCode::NotInvertible,
                    kind_name(r.kind) + " images carry no series on the diagonal and cannot be inverted");
    }
    if (r.size() == 0) throw Error(ErrorCode::TooShort, "empty representation matrix");
}

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

double gasf_diagonal_value(double d) { return std::sqrt((clamp_unit(d) + 1.0) / 2.0); }

}  // namespace

TimeSeries ColumnVariants::column(std::size_t j) const {
    if (j >= variants.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(j) + " out of range");
    }
    std::vector<double> v(variants.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = variants(i, j);
    return TimeSeries(std::move(v));
}

TimeSeries extract_diagonal(const RepresentationMatrix& r) {
    require_invertible(r);
    const std::size_t n = r.size();
    std::vector<double> x(n);
    const bool gasf = std::holds_alternative<GASF>(r.kind);
    for (std::size_t i = 0; i < n; ++i) x[i] = gasf ? gasf_diagonal_value(r(i, i)) : r(i, i);
    return TimeSeries(std::move(x));
}

TimeSeries reconstruct_column(const RepresentationMatrix& r, std::size_t j) {
    require_invertible(r);
    const std::size_t n = r.size();
    if (j >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "column " + std::to_string(j) + " out of range for a " + std::to_string(n) + "x" +
                        std::to_string(n) + " image");
    }
    std::vector<double> v(n);
    if (std::holds_alternative<XIRP>(r.kind)) {
        const double base = r(j, j);
        for (std::size_t i = 0; i < n; ++i) v[i] = i == j ? base : base * std::exp(r(i, j));
    } else if (std::holds_alternative<GASF>(r.kind)) {
        const double base = gasf_diagonal_value(r(j, j));
        const double phi_j = std::acos(base);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = i == j ? base : std::cos(std::acos(clamp_unit(r(i, j))) - phi_j);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) v[i] = r(i, j);
    }
    return TimeSeries(std::move(v));
}

ColumnVariants column_variants(const RepresentationMatrix& r) {
    require_invertible(r);
    const std::size_t n = r.size();
    ColumnVariants out{Matrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        const TimeSeries col = reconstruct_column(r, j);
        for (std::size_t i = 0; i < n; ++i) out.variants(i, j) = col[i];
    }
    return out;
}

std::size_t irc_column(std::uint64_t seed, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "cannot draw a column from an empty image");
    std::mt19937_64 engine(seed);
    const std::uint64_t range = n;
    // Largest multiple of n representable; values at or above it are redrawn.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = engine();
    while (draw >= limit) draw = engine();
    return static_cast<std::size_t>(draw % range);
}

RepresentationMatrix repair_consistency(const RepresentationMatrix& r) {
    if (!std::holds_alternative<XIRP>(r.kind)) {
        throw Error(ErrorCode::InvalidParams, "consistency repair is defined for XIRP images only");
    }
    RepresentationMatrix out = r;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = 0.5 * (r(i, j) - r(j, i));
            out.data(i, j) = a;
            out.data(j, i) = -a;
        }
    }
    return out;
}

TimeSeries invert(const RepresentationMatrix& input, const InversionMethod& method,
                  const InversionOptions& options) {
    require_invertible(input);
    if (options.geometric_mean && !std::holds_alternative<XIRP>(input.kind)) {
        throw Error(ErrorCode::InvalidParams, "geometric averaging applies to XIRP images only");
    }
    const RepresentationMatrix& r = options.repair_consistency && std::holds_alternative<XIRP>(input.kind)
                                        ? repair_consistency(input)
                                        : input;

    switch (method.kind) {
        case InversionKind::DiagonalOnly:
            return extract_diagonal(r);
        case InversionKind::IRC:
            return reconstruct_column(r, irc_column(method.seed, r.size()));
        case InversionKind::IM:
            break;
    }

    const ColumnVariants cv = column_variants(r);
    const std::size_t n = r.size();
    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        if (options.geometric_mean) {
            for (std::size_t j = 0; j < n; ++j) acc += std::log(cv.variants(i, j));
            x[i] = std::exp(acc / static_cast<double>(n));
        } else {
            for (std::size_t j = 0; j < n; ++j) acc += cv.variants(i, j);
            x[i] = acc / static_cast<double>(n);
        }
    }
    return TimeSeries(std::move(x));
}

double roundtrip_error(const TimeSeries& x, const RepresentationKind& kind, const InversionMethod& method) {
    const TimeSeries back = invert(encode(kind, x), method);
    double worst = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) worst = std::max(worst, std::abs(x[t] - back[t]));
    return worst;
}

}  // namespace xirp
