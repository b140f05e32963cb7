#include "xirp/metrics.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

namespace xirp {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

// One row of a ranking problem: the scores of every contender on one series.
struct SeriesScores {
    std::map<std::string, double> by_contender;
};

// Groups selected records by (dataset, series_id).
std::map<std::pair<std::string, std::string>, SeriesScores> group_series(const ScoreTable& table,
                                                                         const Selection& sel) {
    std::map<std::pair<std::string, std::string>, SeriesScores> groups;
    for (const auto& r : table.records()) {
        if (r.metric != sel.metric) continue;
        if (sel.dataset && r.dataset != *sel.dataset) continue;
        auto& g = groups[{r.dataset, r.series_id}];
        if (!g.by_contender.emplace(r.contender, r.value).second) {
            throw Error(ErrorCode::DuplicateContender,
                        "contender '" + r.contender + "' scored twice on " + r.dataset + "/" + r.series_id +
                            " for " + std::string(to_string(r.metric)) +
                            "; select a single inversion method first");
        }
    }
    if (groups.empty()) {
        throw Error(ErrorCode::EmptyGroup, "no " + std::string(to_string(sel.metric)) + " records" +
                                               (sel.dataset ? " for dataset '" + *sel.dataset + "'" : std::string{}));
    }
    return groups;
}

std::set<std::string> all_contenders(const std::map<std::pair<std::string, std::string>, SeriesScores>& groups) {
    std::set<std::string> names;
    for (const auto& [key, g] : groups)
        for (const auto& [c, v] : g.by_contender) names.insert(c);
    return names;
}

void require_complete(const std::map<std::pair<std::string, std::string>, SeriesScores>& groups,
                      const std::set<std::string>& names) {
    for (const auto& [key, g] : groups) {
        for (const auto& c : names) {
            if (!g.by_contender.contains(c)) {
                throw Error(ErrorCode::MissingContender,
                            "contender '" + c + "' has no score on " + key.first + "/" + key.second);
            }
        }
    }
}

}  // namespace

std::string_view to_string(Metric m) { return m == Metric::SD ? "S_D" : "S_P"; }

Metric parse_metric(std::string_view name) {
    std::string n;
    for (char c : name)
        if (c != '_') n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (n == "sd") return Metric::SD;
    if (n == "sp") return Metric::SP;
    throw Error(ErrorCode::Parse, "unknown metric '" + std::string(name) + "' (expected S_D or S_P)");
}

bool higher_is_better(Metric m) { return m == Metric::SD; }

bool better(Metric m, double a, double b) { return higher_is_better(m) ? a > b : a < b; }

ScoreTable::ScoreTable(std::vector<ScoreRecord> records) {
    for (auto& r : records) add(std::move(r));
}

void ScoreTable::add(ScoreRecord r) {
    if (!std::isfinite(r.value)) {
        throw Error(ErrorCode::NonFinite, "score for " + r.dataset + "/" + r.series_id + "/" + r.contender +
                                              " is not finite");
    }
    const int tag = r.inversion ? static_cast<int>(*r.inversion) : -1;
    if (!keys_.emplace(r.dataset, r.series_id, static_cast<int>(r.metric), tag, r.contender).second) {
        throw Error(ErrorCode::DuplicateContender,
                    "duplicate record for " + r.dataset + "/" + r.series_id + "/" + r.contender);
    }
    records_.push_back(std::move(r));
}

std::vector<std::string> ScoreTable::datasets() const {
    std::vector<std::string> out;
    for (const auto& r : records_)
        if (std::find(out.begin(), out.end(), r.dataset) == out.end()) out.push_back(r.dataset);
    return out;
}

std::vector<std::string> ScoreTable::contenders() const {
    std::vector<std::string> out;
    for (const auto& r : records_)
        if (std::find(out.begin(), out.end(), r.contender) == out.end()) out.push_back(r.contender);
    return out;
}

ScoreTable ScoreTable::with_inversion(std::optional<InversionKind> tag) const {
    ScoreTable out;
    for (const auto& r : records_)
        if (r.inversion == tag) out.add(r);
    return out;
}

ScoreTable ScoreTable::read_csv(std::istream& in) {
    ScoreTable table;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (!header_seen) {
            if (trim(line) != kScoreCsvHeader) {
                throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected header '" +
                                                  std::string(kScoreCsvHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 6) {
            throw Error(ErrorCode::Parse,
                        "line " + std::to_string(lineno) + ": expected 6 fields, got " + std::to_string(f.size()));
        }
        ScoreRecord r;
        r.dataset = f[0];
        r.series_id = f[1];
        r.contender = f[2];
        try {
            r.metric = parse_metric(f[3]);
            if (!f[4].empty()) r.inversion = parse_inversion_kind(f[4]);
        } catch (const Error& e) {
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + e.what());
        }
        const char* first = f[5].data();
        const char* last = first + f[5].size();
        auto [ptr, ec] = std::from_chars(first, last, r.value);
        if (ec != std::errc{} || ptr != last) {
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad value '" + f[5] + "'");
        }
        if (r.dataset.empty() || r.series_id.empty() || r.contender.empty()) {
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": empty key field");
        }
        try {
            table.add(std::move(r));
        } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!header_seen) throw Error(ErrorCode::Parse, "empty score table");
    return table;
}

ScoreTable ScoreTable::read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    return read_csv(in);
}

void ScoreTable::write_csv(std::ostream& out) const {
    out << kScoreCsvHeader << '\n';
    char buf[64];
    for (const auto& r : records_) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), r.value);
        out << r.dataset << ',' << r.series_id << ',' << r.contender << ',' << to_string(r.metric) << ','
            << (r.inversion ? to_string(*r.inversion) : std::string_view{}) << ',' << std::string_view(buf, end)
            << '\n';
    }
}

std::map<std::string, Summary> summarize(const ScoreTable& table, const Selection& sel) {
    std::map<std::string, std::vector<double>> values;
    for (const auto& [key, g] : group_series(table, sel))
        for (const auto& [c, v] : g.by_contender) values[c].push_back(v);

    std::map<std::string, Summary> out;
    for (const auto& [c, vs] : values) {
        const double n = static_cast<double>(vs.size());
        const double mean = std::accumulate(vs.begin(), vs.end(), 0.0) / n;
        double ss = 0.0;
        for (double v : vs) ss += (v - mean) * (v - mean);
        out[c] = Summary{vs.size(), mean, std::sqrt(ss / n)};
    }
    return out;
}

std::map<std::string, double> count_best(const ScoreTable& table, const Selection& sel) {
    const auto groups = group_series(table, sel);
    const auto names = all_contenders(groups);
    require_complete(groups, names);

    std::map<std::string, double> counts;
    for (const auto& c : names) counts[c] = 0.0;
    for (const auto& [key, g] : groups) {
        std::optional<double> best;
        for (const auto& [c, v] : g.by_contender)
            if (!best || better(sel.metric, v, *best)) best = v;
        std::vector<std::string> winners;
        for (const auto& [c, v] : g.by_contender)
            if (v == *best) winners.push_back(c);
        const double share = 1.0 / static_cast<double>(winners.size());
        for (const auto& w : winners) counts[w] += share;
    }
    return counts;
}

std::vector<double> rank_values(const std::vector<double>& values, Metric metric) {
    const std::size_t k = values.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return better(metric, values[a], values[b]); });
    std::vector<double> ranks(k);
    for (std::size_t pos = 0; pos < k;) {
        std::size_t end = pos + 1;
        while (end < k && values[order[end]] == values[order[pos]]) ++end;
        // Positions pos..end-1 are tied; ranks are 1-based.
        const double shared = (static_cast<double>(pos + 1) + static_cast<double>(end)) / 2.0;
        for (std::size_t q = pos; q < end; ++q) ranks[order[q]] = shared;
        pos = end;
    }
    return ranks;
}

std::map<std::string, double> rank(const ScoreTable& table, const Selection& sel) {
    const auto groups = group_series(table, sel);
    const auto names = all_contenders(groups);
    require_complete(groups, names);

    std::map<std::string, double> sums;
    for (const auto& c : names) sums[c] = 0.0;
    for (const auto& [key, g] : groups) {
        std::vector<std::string> labels;
        std::vector<double> values;
        for (const auto& [c, v] : g.by_contender) {
            labels.push_back(c);
            values.push_back(v);
        }
        const auto r = rank_values(values, sel.metric);
        for (std::size_t q = 0; q < labels.size(); ++q) sums[labels[q]] += r[q];
    }
    for (auto& [c, s] : sums) s /= static_cast<double>(groups.size());
    return sums;
}

std::map<std::string, double> group_counts(const std::map<std::string, double>& counts,
                                           const std::map<std::string, std::string>& groups) {
    std::map<std::string, double> out;
    for (const auto& [c, n] : counts) {
        const auto it = groups.find(c);
        out[it == groups.end() ? c : it->second] += n;
    }
    return out;
}

double improvement_pct(double im_score, double irc_score, Metric metric) {
    if (!std::isfinite(im_score) || !std::isfinite(irc_score)) {
        throw Error(ErrorCode::NonFinite, "improvement needs finite scores");
    }
    if (metric == Metric::SD) {
        if (im_score == 0.0) throw Error(ErrorCode::DivisionByZero, "IM score is zero");
        return 100.0 * (irc_score - im_score) / im_score;
    }
    if (irc_score == 0.0) throw Error(ErrorCode::DivisionByZero, "IRC score is zero");
    return 100.0 * (im_score - irc_score) / irc_score;
}

std::vector<Improvement> improvement_table(const ScoreTable& table) {
    // (contender, metric) -> sums and counts of IM and IRC scores
    std::map<std::pair<std::string, Metric>, std::array<double, 4>> acc;
    for (const auto& r : table.records()) {
        if (!r.inversion || *r.inversion == InversionKind::DiagonalOnly) continue;
        auto& a = acc[{r.contender, r.metric}];
        const std::size_t off = *r.inversion == InversionKind::IM ? 0 : 2;
        a[off] += r.value;
        a[off + 1] += 1.0;
    }
    std::vector<Improvement> out;
    for (const auto& [key, a] : acc) {
        if (a[1] == 0.0 || a[3] == 0.0) continue;
        Improvement imp;
        imp.contender = key.first;
        imp.metric = key.second;
        imp.im = a[0] / a[1];
        imp.irc = a[2] / a[3];
        imp.delta_pct = improvement_pct(imp.im, imp.irc, imp.metric);
        out.push_back(imp);
    }
    if (out.empty()) throw Error(ErrorCode::EmptyGroup, "no contender has both IM and IRC records");
    return out;
}

}  // namespace xirp
