#include "xirp/representations.hpp"

#include <cmath>

namespace xirp {

namespace {

void require_positive(const TimeSeries& x) {
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (!(x[t] > 0.0)) {
            throw Error(ErrorCode::NonPositiveValue,
                        "value " + std::to_string(x[t]) + " at index " + std::to_string(t) +
                            " is not strictly positive; rescale the series first");
        }
    }
}

void require_unit_range(const TimeSeries& x) {
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (x[t] < 0.0 || x[t] > 1.0) {
            throw Error(ErrorCode::OutOfUnitRange,
                        "value " + std::to_string(x[t]) + " at index " + std::to_string(t) +
                            " is outside [0, 1]; rescale the series first");
        }
    }
}

// Log returns are computed once for the upper triangle and negated for the
// lower one so antisymmetry holds bit-for-bit.
Matrix log_return_matrix(const TimeSeries& x) {
    const std::size_t n = x.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r = std::log(x[i] / x[j]);
            m(i, j) = r;
            m(j, i) = -r;
        }
    }
    return m;
}

}  // namespace

RepresentationMatrix encode_binary_rp(const TimeSeries& x, double epsilon) {
    validate_series(x);
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorCode::InvalidEpsilon, "epsilon must be a positive finite number");
    }
    const std::size_t n = x.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = std::abs(x[i] - x[j]) <= epsilon ? 1.0 : 0.0;
    return {std::move(m), BinaryRP{epsilon}, std::nullopt};
}

RepresentationMatrix encode_urp(const TimeSeries& x) {
    validate_series(x);
    const std::size_t n = x.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = std::abs(x[i] - x[j]);
    return {std::move(m), URP{}, std::nullopt};
}

RepresentationMatrix encode_irp(const TimeSeries& x) {
    validate_series(x);
    require_positive(x);
    return {log_return_matrix(x), IRP{}, std::nullopt};
}

RepresentationMatrix encode_xirp(const TimeSeries& x) {
    validate_series(x);
    require_positive(x);
    Matrix m = log_return_matrix(x);
    for (std::size_t i = 0; i < x.size(); ++i) m(i, i) = x[i];
    return {std::move(m), XIRP{}, std::nullopt};
}

RepresentationMatrix encode_gasf(const TimeSeries& x) {
    validate_series(x);
    require_unit_range(x);
    const std::size_t n = x.size();
    std::vector<double> phi(n);
    for (std::size_t t = 0; t < n; ++t) phi[t] = std::acos(x[t]);
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = std::cos(phi[i] + phi[j]);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return {std::move(m), GASF{}, std::nullopt};
}

RepresentationMatrix encode_naive(const TimeSeries& x) {
    validate_series(x);
    const std::size_t n = x.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = x[i];
    return {std::move(m), Naive{}, std::nullopt};
}

RepresentationMatrix encode(const RepresentationKind& kind, const TimeSeries& x) {
    struct Dispatch {
        const TimeSeries& x;
        RepresentationMatrix operator()(const BinaryRP& k) const { return encode_binary_rp(x, k.epsilon); }
        RepresentationMatrix operator()(const URP&) const { return encode_urp(x); }
        RepresentationMatrix operator()(const IRP&) const { return encode_irp(x); }
        RepresentationMatrix operator()(const XIRP&) const { return encode_xirp(x); }
        RepresentationMatrix operator()(const GASF&) const { return encode_gasf(x); }
        RepresentationMatrix operator()(const Naive&) const { return encode_naive(x); }
    };
    return std::visit(Dispatch{x}, kind);
}

}  // namespace xirp
