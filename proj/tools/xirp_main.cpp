// xirp: generate synthetic series, encode them as images, invert image
// batches and aggregate backtest scores.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xirp/generators.hpp"
#include "xirp/inversion.hpp"
#include "xirp/io.hpp"
#include "xirp/metrics.hpp"
#include "xirp/preprocessing.hpp"
#include "xirp/report.hpp"
#include "xirp/representations.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

json params_json(const xirp::ProcessParams& params) {
    struct Visitor {
        json operator()(const xirp::SineParams& p) const {
            return {{"amplitude", p.amplitude}, {"frequency", p.frequency}, {"shift", p.shift},
                    {"noise_std", p.noise_std}};
        }
        json operator()(const xirp::AR1Params& p) const {
            return {{"coefficient", p.coefficient}, {"innovation_std", p.innovation_std}};
        }
        json operator()(const xirp::BrownianParams& p) const { return {{"mu", p.mu}, {"sigma", p.sigma}}; }
        json operator()(const xirp::MertonParams& p) const {
            return {{"mu", p.mu}, {"sigma", p.sigma}, {"lambda", p.lambda}, {"jump_mean", p.jump_mean},
                    {"jump_std", p.jump_std}};
        }
        json operator()(const xirp::PowerLawParams& p) const { return {{"alpha", p.alpha}}; }
    };
    return std::visit(Visitor{}, params);
}

// -----------------------------------------------------------------------------
// generate
// -----------------------------------------------------------------------------

struct GenerateArgs {
    std::string family;
    std::optional<std::size_t> n;
    std::size_t length = 1000;
    std::uint64_t seed = 0;
    std::string out = ".";
    xirp::DatasetOptions options;
};

void cmd_generate(const GenerateArgs& a) {
    const xirp::Family family = xirp::parse_family(a.family);
    const std::size_t n = a.n.value_or(xirp::default_series_count(family));
    const auto configs = xirp::dataset_configs(family, n, a.length, a.seed, a.options);

    fs::create_directories(a.out);
    json manifest;
    manifest["family"] = std::string(xirp::to_string(family));
    manifest["seed"] = a.seed;
    manifest["n_series"] = n;
    manifest["length"] = configs.front().length;
    manifest["prng"] = "mt19937_64";
    manifest["seed_rule"] = "series k uses seed + k";
    manifest["series"] = json::array();

    for (std::size_t k = 0; k < configs.size(); ++k) {
        xirp::TimeSeries s = xirp::generate(configs[k]);
        const std::string file = std::string(xirp::to_string(family)) + "_" + std::to_string(k) + ".csv";
        xirp::io::write_series_csv(fs::path(a.out) / file, s);
        manifest["series"].push_back(
            {{"file", file}, {"seed", configs[k].seed}, {"params", params_json(configs[k].params)}});
    }
    std::ofstream(fs::path(a.out) / "manifest.json") << manifest.dump(2) << '\n';
    std::cout << "wrote " << n << " series to " << a.out << '\n';
}

// -----------------------------------------------------------------------------
// encode
// -----------------------------------------------------------------------------

struct EncodeArgs {
    std::string input;
    std::string kind = "xirp";
    std::size_t d = 20;
    std::size_t stride = 1;
    std::size_t limit = xirp::kDefaultSeriesLimit;
    double epsilon = 0.2;
    std::optional<double> train_fraction;
    std::string out;
};

void cmd_encode(const EncodeArgs& a) {
    const xirp::RepresentationKind kind = xirp::parse_kind(a.kind, a.epsilon);
    xirp::TimeSeries raw = xirp::io::read_series_csv(a.input);
    xirp::validate_series(raw);
    const xirp::TimeSeries x = xirp::truncate(raw, a.limit);

    xirp::ScalerOptions so;
    if (a.train_fraction) {
        so.train_length = static_cast<std::size_t>(*a.train_fraction * static_cast<double>(x.size()));
    }
    const xirp::ScalingParams scaler = xirp::fit_scaler(x, kind, so);
    const xirp::TimeSeries scaled = xirp::apply_scaler(x, scaler);

    const auto windows = xirp::window(scaled, a.d, a.stride);
    std::vector<xirp::RepresentationMatrix> images;
    images.reserve(windows.size());
    for (std::size_t k = 0; k < windows.size(); ++k) {
        try {
            images.push_back(xirp::encode(kind, windows[k]));
        } catch (const xirp::Error& e) {
            throw xirp::Error(e.code(), "window " + std::to_string(k) + " (rows " + std::to_string(k * a.stride) +
                                            ".." + std::to_string(k * a.stride + a.d - 1) + "): " + e.what());
        }
    }

    xirp::io::write_tensor(a.out, xirp::io::stack_images(images));
    xirp::io::TensorMeta meta;
    meta.kind = kind;
    meta.scaler = scaler;
    meta.window = a.d;
    meta.stride = a.stride;
    meta.limit = a.limit;
    meta.series_name = raw.name;
    meta.source_length = x.size();
    xirp::io::write_meta(a.out, meta);
    std::cout << "wrote " << images.size() << " x " << a.d << " x " << a.d << " " << a.kind << " tensor to " << a.out
              << '\n';
}

// -----------------------------------------------------------------------------
// invert
// -----------------------------------------------------------------------------

struct InvertArgs {
    std::string input;
    std::string method = "im";
    std::uint64_t seed = 0;
    bool repair = false;
    bool geometric = false;
    std::string out;
};

void cmd_invert(const InvertArgs& a) {
    const xirp::InversionKind kind = xirp::parse_inversion_kind(a.method);
    const xirp::io::Tensor t = xirp::io::read_tensor(a.input);
    const xirp::io::TensorMeta meta = xirp::io::read_meta(a.input);
    if (!xirp::is_invertible(meta.kind)) {
        throw xirp::Error(xirp::ErrorCode::NotInvertible, xirp::kind_name(meta.kind) + " tensors cannot be inverted");
    }
    if (t.shape.size() != 3 || t.shape[1] != t.shape[2]) {
        throw xirp::Error(xirp::ErrorCode::Parse, "expected an (N, S, S) tensor");
    }

    xirp::InversionOptions opts;
    opts.repair_consistency = a.repair;
    opts.geometric_mean = a.geometric;

    std::vector<xirp::TimeSeries> series;
    series.reserve(t.shape[0]);
    for (std::size_t k = 0; k < t.shape[0]; ++k) {
        const xirp::InversionMethod method{kind, a.seed + k};
        const xirp::TimeSeries y = xirp::invert(xirp::io::image_at(t, k, meta.kind), method, opts);
        series.push_back(xirp::invert_scaler(y, meta.scaler));
    }
    xirp::io::write_windows_csv(a.out, series);

    json info;
    info["method"] = std::string(xirp::to_string(kind));
    info["kind"] = xirp::kind_name(meta.kind);
    info["count"] = series.size();
    info["repair_consistency"] = a.repair;
    info["geometric_mean"] = a.geometric;
    if (kind == xirp::InversionKind::IRC) {
        info["seed"] = a.seed;
        info["prng"] = std::string(xirp::kIrcPrngName);
        info["seed_rule"] = "image k uses seed + k; column = first unbiased draw modulo S";
    }
    std::ofstream(a.out + ".meta.json") << info.dump(2) << '\n';
    std::cout << "wrote " << series.size() << " series to " << a.out << '\n';
}

// -----------------------------------------------------------------------------
// aggregate
// -----------------------------------------------------------------------------

struct AggregateArgs {
    std::string input;
    std::string mode = "summary";
    std::optional<std::string> dataset;
    std::optional<std::string> metric;
    std::optional<std::string> inversion;
    std::string format = "text";
    std::optional<std::string> out;
};

void cmd_aggregate(const AggregateArgs& a) {
    xirp::ScoreTable table = xirp::ScoreTable::read_csv_file(a.input);
    if (a.inversion) {
        std::optional<xirp::InversionKind> tag;
        if (*a.inversion != "none") tag = xirp::parse_inversion_kind(*a.inversion);
        table = table.with_inversion(tag);
    }
    xirp::ReportFilter filter;
    filter.dataset = a.dataset;
    if (a.metric) filter.metric = xirp::parse_metric(*a.metric);

    xirp::Report rep;
    if (a.mode == "summary") rep = xirp::summary_report(table, filter);
    else if (a.mode == "best") rep = xirp::best_report(table, filter);
    else if (a.mode == "ranks") rep = xirp::rank_report(table, filter);
    else rep = xirp::improvement_report(table);

    std::ofstream file;
    if (a.out) {
        file.open(*a.out);
        if (!file) throw xirp::Error(xirp::ErrorCode::Io, "cannot write '" + *a.out + "'");
    }
    std::ostream& os = a.out ? static_cast<std::ostream&>(file) : std::cout;
    if (a.format == "csv") rep.write_csv(os);
    else rep.write_text(os);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time series image encodings, inversion and score aggregation"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "write a seeded synthetic dataset as CSV files plus a manifest");
    g->add_option("family", gen.family, "sine | noisy-sine | ar1 | brownian | merton | power-law")
        ->required()
        ->check(CLI::IsMember({"sine", "noisy-sine", "ar1", "brownian", "merton", "power-law"}));
    g->add_option("--n", gen.n, "number of series (default per family)")->check(CLI::PositiveNumber);
    g->add_option("--len", gen.length, "series length, capped at 1000")->check(CLI::Range(2, 1000000));
    g->add_option("--seed", gen.seed, "master seed");
    g->add_option("--out", gen.out, "output directory");
    g->add_option("--amplitude", gen.options.sine_amplitude, "sine amplitude");
    g->add_option("--frequency", gen.options.sine_frequency, "sine frequency in cycles per step");
    g->add_option("--jump-mean", gen.options.merton_jump_mean, "Merton jump mean");
    g->add_option("--jump-std", gen.options.merton_jump_std, "Merton jump standard deviation");
    g->add_option("--phi", gen.options.ar1_coefficient, "AR(1) coefficient");

    EncodeArgs enc;
    auto* e = app.add_subcommand("encode", "window a series and encode every window as an image");
    e->add_option("input", enc.input, "series CSV")->required();
    e->add_option("--kind", enc.kind, "representation")
        ->check(CLI::IsMember({"binary-rp", "urp", "irp", "xirp", "gasf", "naive"}));
    e->add_option("--d", enc.d, "window length / image side")->check(CLI::PositiveNumber);
    e->add_option("--stride", enc.stride, "window stride")->check(CLI::PositiveNumber);
    e->add_option("--limit", enc.limit, "observation cap")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
    e->add_option("--epsilon", enc.epsilon, "binary recurrence threshold")->check(CLI::PositiveNumber);
    e->add_option("--train-fraction", enc.train_fraction, "fit the scaler on this leading fraction")
        ->check(CLI::Range(0.0, 1.0));
    e->add_option("--out", enc.out, "tensor file")->required();

    InvertArgs inv;
    auto* i = app.add_subcommand("invert", "invert every image of a tensor back into a series");
    i->add_option("input", inv.input, "tensor file (sidecar must sit next to it)")->required();
    i->add_option("--method", inv.method, "diagonal | im | irc")->check(CLI::IsMember({"diagonal", "im", "irc"}));
    i->add_option("--seed", inv.seed, "IRC seed; image k uses seed + k");
    i->add_flag("--repair", inv.repair, "antisymmetrise XIRP off-diagonals first");
    i->add_flag("--geometric", inv.geometric, "IM averages XIRP variants in log space");
    i->add_option("--out", inv.out, "output CSV")->required();

    AggregateArgs agg;
    auto* a = app.add_subcommand("aggregate", "summarise a score table");
    a->add_option("input", agg.input, "score CSV")->required();
    a->add_option("--mode", agg.mode, "summary | best | ranks | improvement")
        ->check(CLI::IsMember({"summary", "best", "ranks", "improvement"}));
    a->add_option("--dataset", agg.dataset, "restrict to one dataset");
    a->add_option("--metric", agg.metric, "S_D or S_P")->check(CLI::IsMember({"S_D", "S_P", "sd", "sp", "SD", "SP"}));
    a->add_option("--inversion", agg.inversion, "keep records with this tag (none | diagonal | im | irc)")
        ->check(CLI::IsMember({"none", "diagonal", "im", "irc"}));
    a->add_option("--format", agg.format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
    a->add_option("--out", agg.out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kExitUsage;
    }

    try {
        if (*g) cmd_generate(gen);
        else if (*e) cmd_encode(enc);
        else if (*i) cmd_invert(inv);
        else if (*a) cmd_aggregate(agg);
    } catch (const xirp::Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitData;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitData;
    }
    return 0;
}
