#pragma once

// File formats shared with other tools.
//
// Tensor file (little-endian throughout):
//
//   offset  size        field
//   0       4           magic "XIRP"
//   4       2  u16      format version (kTensorVersion)
//   6       1  u8       element type (0 = IEEE-754 binary64)
//   7       1  u8       rank r
//   8       8*r u64     dimensions
//   8+8r    8*prod(d)   payload, row-major
//
// A JSON sidecar `<file>.meta.json` describes what the tensor holds.
//
// Series CSV: one column named `value`; the header line is optional.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xirp/types.hpp"

namespace xirp::io {

inline constexpr char kTensorMagic[4] = {'X', 'I', 'R', 'P'};
inline constexpr std::uint16_t kTensorVersion = 1;
inline constexpr std::uint8_t kElementFloat64 = 0;

struct Tensor {
    std::vector<std::uint64_t> shape;
    std::vector<double> data;

    std::uint64_t element_count() const;
    bool operator==(const Tensor&) const = default;
};

/// Stacks S x S images into an (N, S, S) tensor. All images must share S.
Tensor stack_images(std::span<const RepresentationMatrix> images);

/// Image `k` of an (N, S, S) tensor, tagged with `kind`.
RepresentationMatrix image_at(const Tensor& t, std::size_t k, const RepresentationKind& kind);

std::vector<std::uint8_t> encode_tensor(const Tensor& t);
Tensor decode_tensor(std::span<const std::uint8_t> bytes);

void write_tensor(const std::filesystem::path& path, const Tensor& t);
Tensor read_tensor(const std::filesystem::path& path);

/// Sidecar describing an encoded window batch.
struct TensorMeta {
    RepresentationKind kind = XIRP{};
    ScalingParams scaler;
    std::size_t window = 0;
    std::size_t stride = 1;
    std::size_t limit = 0;
    std::string series_name;
    std::size_t source_length = 0;
};

std::filesystem::path sidecar_path(const std::filesystem::path& tensor_path);
std::string meta_to_json(const TensorMeta& meta);
TensorMeta meta_from_json(const std::string& text);
void write_meta(const std::filesystem::path& tensor_path, const TensorMeta& meta);
TensorMeta read_meta(const std::filesystem::path& tensor_path);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

TimeSeries read_series_csv(const std::filesystem::path& path);
void write_series_csv(const std::filesystem::path& path, const TimeSeries& x);

/// One row per window: `window,t0,...,t{d-1}` header then values.
void write_windows_csv(const std::filesystem::path& path, std::span<const TimeSeries> windows);
std::vector<TimeSeries> read_windows_csv(const std::filesystem::path& path);

}  // namespace xirp::io
