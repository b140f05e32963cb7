#pragma once

/**
 * @file types.hpp
 * @brief Domain types shared by every module: series, matrices, scaling
 * records, representation and inversion tags, and the library error type.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace xirp {

// -----------------------------------------------------------------------------
// Errors
// -----------------------------------------------------------------------------

enum class ErrorCode {
    NonFinite,
    TooShort,
    InvalidEpsilon,
    NonPositiveValue,
    OutOfUnitRange,
    NotInvertible,
    IndexOutOfRange,
    WindowTooLong,
    DegenerateParams,
    InvalidParams,
    EmptyGroup,
    MissingContender,
    DuplicateContender,
    DivisionByZero,
    Parse,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` lets callers (the CLI in
/// particular) tell data errors apart without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// -----------------------------------------------------------------------------
// TimeSeries
// -----------------------------------------------------------------------------

/// Ordered real-valued observations. Construction does not validate; use
/// validate_series() at module boundaries.
struct TimeSeries {
    std::vector<double> values;
    std::string name;

    TimeSeries() = default;
    TimeSeries(std::vector<double> v, std::string n = {})
        : values(std::move(v)), name(std::move(n)) {}

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    std::span<const double> view() const noexcept { return values; }

    bool operator==(const TimeSeries&) const = default;
};

/// Returns `x` unchanged when it has at least two points and all of them are
/// finite. Throws Error{TooShort} or Error{NonFinite} otherwise.
const TimeSeries& validate_series(const TimeSeries& x);

// -----------------------------------------------------------------------------
// Representation kinds
// -----------------------------------------------------------------------------

struct BinaryRP {
    double epsilon;
    bool operator==(const BinaryRP&) const = default;
};
struct URP {
    bool operator==(const URP&) const = default;
};
struct IRP {
    bool operator==(const IRP&) const = default;
};
struct XIRP {
    bool operator==(const XIRP&) const = default;
};
struct GASF {
    bool operator==(const GASF&) const = default;
};
struct Naive {
    bool operator==(const Naive&) const = default;
};

using RepresentationKind = std::variant<BinaryRP, URP, IRP, XIRP, GASF, Naive>;

/// Lower-case identifier used on the command line and in sidecar files
/// ("binary-rp", "urp", "irp", "xirp", "gasf", "naive").
std::string kind_name(const RepresentationKind& kind);

/// Inverse of kind_name(). BinaryRP needs its threshold supplied separately.
RepresentationKind parse_kind(std::string_view name, std::optional<double> epsilon = std::nullopt);

/// Kinds whose diagonal carries the series itself.
bool is_invertible(const RepresentationKind& kind);

// -----------------------------------------------------------------------------
// ScalingParams
// -----------------------------------------------------------------------------

/// Affine map [source_min, source_max] -> [target_lo, target_hi].
///
/// A constant source (source_max == source_min) is allowed only with
/// `degenerate` set: every point maps to the midpoint of the target range and
/// the inverse returns source_min.
struct ScalingParams {
    double source_min = 0.0;
    double source_max = 1.0;
    double target_lo = 0.0;
    double target_hi = 1.0;
    bool degenerate = false;

    static ScalingParams identity() { return {}; }

    /// Slope of the forward map; 0 for degenerate params.
    double factor() const;
    bool is_identity() const;

    /// Throws Error{DegenerateParams} if the record is malformed.
    void check() const;

    double forward(double x) const;
    double inverse(double y) const;

    bool operator==(const ScalingParams&) const = default;
};

// -----------------------------------------------------------------------------
// Matrix
// -----------------------------------------------------------------------------

/// Dense row-major square matrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    Matrix transposed() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// S x S image tagged with the encoding that produced it.
struct RepresentationMatrix {
    Matrix data;
    RepresentationKind kind;
    std::optional<ScalingParams> scaling;

    std::size_t size() const noexcept { return data.size(); }
    double operator()(std::size_t i, std::size_t j) const { return data(i, j); }
};

// -----------------------------------------------------------------------------
// Inversion method
// -----------------------------------------------------------------------------

enum class InversionKind { DiagonalOnly, IM, IRC };

/// IRC always carries its seed; the other methods ignore it.
struct InversionMethod {
    InversionKind kind = InversionKind::DiagonalOnly;
    std::uint64_t seed = 0;

    static InversionMethod diagonal_only() { return {InversionKind::DiagonalOnly, 0}; }
    static InversionMethod mean() { return {InversionKind::IM, 0}; }
    static InversionMethod random_column(std::uint64_t seed) { return {InversionKind::IRC, seed}; }
};

std::string_view to_string(InversionKind kind);
/// Accepts "diagonal", "im", "irc" (case-insensitive).
InversionKind parse_inversion_kind(std::string_view name);

}  // namespace xirp
