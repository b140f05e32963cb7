#include "xirp/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace xirp {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
        case ErrorCode::NonPositiveValue: return "NonPositiveValue";
        case ErrorCode::OutOfUnitRange: return "OutOfUnitRange";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::WindowTooLong: return "WindowTooLong";
        case ErrorCode::DegenerateParams: return "DegenerateParams";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::EmptyGroup: return "EmptyGroup";
        case ErrorCode::MissingContender: return "MissingContender";
        case ErrorCode::DuplicateContender: return "DuplicateContender";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

const TimeSeries& validate_series(const TimeSeries& x) {
    if (x.size() < 2) {
        throw Error(ErrorCode::TooShort,
                    "series needs at least 2 points, got " + std::to_string(x.size()));
    }
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (!std::isfinite(x[t])) {
            throw Error(ErrorCode::NonFinite, "value at index " + std::to_string(t) + " is not finite");
        }
    }
    return x;
}

std::string kind_name(const RepresentationKind& kind) {
    struct Namer {
        std::string operator()(const BinaryRP&) const { return "binary-rp"; }
        std::string operator()(const URP&) const { return "urp"; }
        std::string operator()(const IRP&) const { return "irp"; }
        std::string operator()(const XIRP&) const { return "xirp"; }
        std::string operator()(const GASF&) const { return "gasf"; }
        std::string operator()(const Naive&) const { return "naive"; }
    };
    return std::visit(Namer{}, kind);
}

RepresentationKind parse_kind(std::string_view name, std::optional<double> epsilon) {
    const std::string n = lower(name);
    if (n == "binary-rp" || n == "binaryrp" || n == "rp") {
        if (!epsilon) throw Error(ErrorCode::InvalidEpsilon, "binary recurrence plot requires an epsilon");
        return BinaryRP{*epsilon};
    }
    if (n == "urp") return URP{};
    if (n == "irp") return IRP{};
    if (n == "xirp") return XIRP{};
    if (n == "gasf") return GASF{};
    if (n == "naive") return Naive{};
    throw Error(ErrorCode::Parse, "unknown representation kind '" + std::string(name) + "'");
}

bool is_invertible(const RepresentationKind& kind) {
    return std::holds_alternative<XIRP>(kind) || std::holds_alternative<GASF>(kind) ||
           std::holds_alternative<Naive>(kind);
}

double ScalingParams::factor() const {
    if (degenerate) return 0.0;
    return (target_hi - target_lo) / (source_max - source_min);
}

bool ScalingParams::is_identity() const {
    return !degenerate && source_min == target_lo && source_max == target_hi;
}

void ScalingParams::check() const {
    if (!std::isfinite(source_min) || !std::isfinite(source_max) || !std::isfinite(target_lo) ||
        !std::isfinite(target_hi)) {
        throw Error(ErrorCode::DegenerateParams, "scaling parameters must be finite");
    }
    if (!(target_hi > target_lo)) {
        throw Error(ErrorCode::DegenerateParams, "target_hi must exceed target_lo");
    }
    if (degenerate) {
        if (source_max != source_min) {
            throw Error(ErrorCode::DegenerateParams, "degenerate flag set on a non-constant source range");
        }
    } else if (!(source_max > source_min)) {
        throw Error(ErrorCode::DegenerateParams, "source_max must exceed source_min");
    }
}

double ScalingParams::forward(double x) const {
    if (degenerate) return target_lo + 0.5 * (target_hi - target_lo);
    if (is_identity()) return x;
    // Normalise first so x == source_max maps to exactly target_hi.
    return target_lo + (x - source_min) / (source_max - source_min) * (target_hi - target_lo);
}

double ScalingParams::inverse(double y) const {
    if (degenerate) return source_min;
    if (is_identity()) return y;
    return source_min + (y - target_lo) / (target_hi - target_lo) * (source_max - source_min);
}

Matrix Matrix::transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::string_view to_string(InversionKind kind) {
    switch (kind) {
        case InversionKind::DiagonalOnly: return "diagonal";
        case InversionKind::IM: return "im";
        case InversionKind::IRC: return "irc";
    }
    return "unknown";
}

InversionKind parse_inversion_kind(std::string_view name) {
    const std::string n = lower(name);
    if (n == "diagonal" || n == "diagonal-only" || n == "diag") return InversionKind::DiagonalOnly;
    if (n == "im" || n == "mean") return InversionKind::IM;
    if (n == "irc" || n == "random-column") return InversionKind::IRC;
    throw Error(ErrorCode::Parse, "unknown inversion method '" + std::string(name) + "'");
}

}  // namespace xirp
