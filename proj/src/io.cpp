#include "xirp/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace xirp::io {

namespace {

using json = nlohmann::json;

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
    for (int b = 0; b < bytes; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t offset, int bytes) {
    std::uint64_t v = 0;
    for (int b = 0; b < bytes; ++b) v |= static_cast<std::uint64_t>(in[offset + b]) << (8 * b);
    return v;
}

[[noreturn]] void corrupt(const std::string& what) { throw Error(ErrorCode::Parse, "corrupt tensor: " + what); }

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::optional<double> parse_double(const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
    return v;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
    return out;
}

json kind_to_json(const RepresentationKind& kind) {
    json j = {{"name", kind_name(kind)}};
    if (const auto* b = std::get_if<BinaryRP>(&kind)) j["epsilon"] = b->epsilon;
    return j;
}

}  // namespace

std::uint64_t Tensor::element_count() const {
    std::uint64_t n = 1;
    for (auto d : shape) n *= d;
    return n;
}

Tensor stack_images(std::span<const RepresentationMatrix> images) {
    if (images.empty()) throw Error(ErrorCode::InvalidParams, "no images to stack");
    const std::size_t s = images.front().size();
    Tensor t;
    t.shape = {images.size(), s, s};
    t.data.reserve(images.size() * s * s);
    for (const auto& img : images) {
        if (img.size() != s) throw Error(ErrorCode::InvalidParams, "images differ in size");
        const auto d = img.data.data();
        t.data.insert(t.data.end(), d.begin(), d.end());
    }
    return t;
}

RepresentationMatrix image_at(const Tensor& t, std::size_t k, const RepresentationKind& kind) {
    if (t.shape.size() != 3 || t.shape[1] != t.shape[2]) {
        throw Error(ErrorCode::Parse, "expected an (N, S, S) tensor");
    }
    if (k >= t.shape[0]) throw Error(ErrorCode::IndexOutOfRange, "image index out of range");
    const std::size_t s = t.shape[1];
    Matrix m(s);
    std::copy_n(t.data.begin() + static_cast<std::ptrdiff_t>(k * s * s), s * s, m.data().begin());
    return {std::move(m), kind, std::nullopt};
}

std::vector<std::uint8_t> encode_tensor(const Tensor& t) {
    if (t.shape.size() > 255) throw Error(ErrorCode::InvalidParams, "tensor rank exceeds 255");
    if (t.element_count() != t.data.size()) {
        throw Error(ErrorCode::InvalidParams, "tensor payload does not match its shape");
    }
    std::vector<std::uint8_t> out;
    out.reserve(8 + 8 * t.shape.size() + 8 * t.data.size());
    out.insert(out.end(), std::begin(kTensorMagic), std::end(kTensorMagic));
    put_le(out, kTensorVersion, 2);
    put_le(out, kElementFloat64, 1);
    put_le(out, t.shape.size(), 1);
    for (auto d : t.shape) put_le(out, d, 8);
    for (double v : t.data) put_le(out, std::bit_cast<std::uint64_t>(v), 8);
    return out;
}

Tensor decode_tensor(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 8) corrupt("file shorter than the fixed header");
    if (!std::equal(std::begin(kTensorMagic), std::end(kTensorMagic), bytes.begin())) corrupt("bad magic");
    const auto version = get_le(bytes, 4, 2);
    if (version != kTensorVersion) corrupt("unsupported version " + std::to_string(version));
    if (bytes[6] != kElementFloat64) corrupt("unsupported element type " + std::to_string(bytes[6]));
    const std::size_t rank = bytes[7];
    if (bytes.size() < 8 + 8 * rank) corrupt("truncated dimension list");

    Tensor t;
    t.shape.resize(rank);
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < rank; ++k) {
        t.shape[k] = get_le(bytes, 8 + 8 * k, 8);
        if (t.shape[k] != 0 && count > (bytes.size() / 8) / t.shape[k]) corrupt("dimensions exceed file size");
        count *= t.shape[k];
    }
    const std::size_t payload = 8 + 8 * rank;
    if (bytes.size() != payload + 8 * count) {
        corrupt("payload holds " + std::to_string(bytes.size() - payload) + " bytes, expected " +
                std::to_string(8 * count));
    }
    t.data.resize(count);
    for (std::size_t k = 0; k < count; ++k) t.data[k] = std::bit_cast<double>(get_le(bytes, payload + 8 * k, 8));
    return t;
}

void write_tensor(const std::filesystem::path& path, const Tensor& t) {
    const auto bytes = encode_tensor(t);
    auto out = open_out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::Io, "write failed for '" + path.string() + "'");
}

Tensor read_tensor(const std::filesystem::path& path) {
    const std::string raw = read_text(path);
    return decode_tensor(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
}

std::filesystem::path sidecar_path(const std::filesystem::path& tensor_path) {
    return std::filesystem::path(tensor_path.string() + ".meta.json");
}

std::string meta_to_json(const TensorMeta& meta) {
    json j;
    j["format"] = "xirp-tensor";
    j["version"] = kTensorVersion;
    j["kind"] = kind_to_json(meta.kind);
    j["scaler"] = {{"source_min", meta.scaler.source_min},
                   {"source_max", meta.scaler.source_max},
                   {"target_lo", meta.scaler.target_lo},
                   {"target_hi", meta.scaler.target_hi},
                   {"degenerate", meta.scaler.degenerate}};
    j["window"] = meta.window;
    j["stride"] = meta.stride;
    j["limit"] = meta.limit;
    j["series_name"] = meta.series_name;
    j["source_length"] = meta.source_length;
    return j.dump(2);
}

TensorMeta meta_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        TensorMeta m;
        const auto& k = j.at("kind");
        std::optional<double> eps;
        if (k.contains("epsilon")) eps = k.at("epsilon").get<double>();
        m.kind = parse_kind(k.at("name").get<std::string>(), eps);
        const auto& s = j.at("scaler");
        m.scaler.source_min = s.at("source_min").get<double>();
        m.scaler.source_max = s.at("source_max").get<double>();
        m.scaler.target_lo = s.at("target_lo").get<double>();
        m.scaler.target_hi = s.at("target_hi").get<double>();
        m.scaler.degenerate = s.value("degenerate", false);
        m.scaler.check();
        m.window = j.at("window").get<std::size_t>();
        m.stride = j.value("stride", std::size_t{1});
        m.limit = j.value("limit", std::size_t{0});
        m.series_name = j.value("series_name", std::string{});
        m.source_length = j.value("source_length", std::size_t{0});
        return m;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("bad sidecar: ") + e.what());
    }
}

void write_meta(const std::filesystem::path& tensor_path, const TensorMeta& meta) {
    auto out = open_out(sidecar_path(tensor_path));
    out << meta_to_json(meta) << '\n';
}

TensorMeta read_meta(const std::filesystem::path& tensor_path) { return meta_from_json(read_text(sidecar_path(tensor_path))); }

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

TimeSeries read_series_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string cell = trim(line);
        if (cell.empty()) continue;
        const auto v = parse_double(cell);
        if (!v) {
            if (first_content) {
                first_content = false;
                continue;  // header
            }
            throw Error(ErrorCode::Parse, path.string() + ":" + std::to_string(lineno) + ": cannot parse '" + cell + "'");
        }
        first_content = false;
        values.push_back(*v);
    }
    return TimeSeries(std::move(values), path.stem().string());
}

void write_series_csv(const std::filesystem::path& path, const TimeSeries& x) {
    auto out = open_out(path);
    out << "value\n";
    for (double v : x.values) out << format_double(v) << '\n';
}

void write_windows_csv(const std::filesystem::path& path, std::span<const TimeSeries> windows) {
    auto out = open_out(path);
    const std::size_t d = windows.empty() ? 0 : windows.front().size();
    out << "window";
    for (std::size_t t = 0; t < d; ++t) out << ",t" << t;
    out << '\n';
    for (std::size_t k = 0; k < windows.size(); ++k) {
        out << k;
        for (double v : windows[k].values) out << ',' << format_double(v);
        out << '\n';
    }
}

std::vector<TimeSeries> read_windows_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    std::vector<TimeSeries> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 || trim(line).empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');  // window index
        std::vector<double> values;
        while (std::getline(ss, cell, ',')) {
            const auto v = parse_double(trim(cell));
            if (!v) throw Error(ErrorCode::Parse, path.string() + ":" + std::to_string(lineno) + ": bad value");
            values.push_back(*v);
        }
        out.emplace_back(std::move(values));
    }
    return out;
}

}  // namespace xirp::io
