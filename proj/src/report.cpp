#include "xirp/report.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>

namespace xirp {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::vector<Metric> metrics_of(const ScoreTable& table, const ReportFilter& filter) {
    if (filter.metric) return {*filter.metric};
    std::vector<Metric> out;
    for (Metric m : {Metric::SD, Metric::SP}) {
        if (std::any_of(table.records().begin(), table.records().end(),
                        [m](const ScoreRecord& r) { return r.metric == m; })) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<std::optional<std::string>> datasets_of(const ScoreTable& table, const ReportFilter& filter,
                                                    bool pooled) {
    if (filter.dataset) return {filter.dataset};
    std::vector<std::optional<std::string>> out;
    for (auto& d : table.datasets()) out.emplace_back(d);
    if (pooled && out.size() > 1) out.emplace_back(std::nullopt);
    return out;
}

bool has_records(const ScoreTable& table, const Selection& sel) {
    return std::any_of(table.records().begin(), table.records().end(), [&](const ScoreRecord& r) {
        return r.metric == sel.metric && (!sel.dataset || r.dataset == *sel.dataset);
    });
}

// Runs `emit` for every (dataset, metric) cell that has data.
void for_each_cell(const ScoreTable& table, const ReportFilter& filter, bool pooled,
                   const std::function<void(const Selection&, const std::string&)>& emit) {
    const bool explicit_cell = filter.dataset.has_value() && filter.metric.has_value();
    for (const auto& ds : datasets_of(table, filter, pooled)) {
        for (Metric m : metrics_of(table, filter)) {
            Selection sel{ds, m};
            if (!explicit_cell && !has_records(table, sel)) continue;
            emit(sel, ds ? *ds : std::string(kAllDatasets));
        }
    }
}

}  // namespace

void Report::write_csv(std::ostream& out) const {
    for (const auto& n : notes) out << "# " << n << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void Report::write_text(std::ostream& out) const {
    for (const auto& n : notes) out << "# " << n << '\n';
    std::vector<std::size_t> width(header.size(), 0);
    auto measure = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size() && c < width.size(); ++c) width[c] = std::max(width[c], cells[c].size());
    };
    measure(header);
    for (const auto& r : rows) measure(r);
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) s += "  ";
            s += cells[c];
            if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
        }
        out << s << '\n';
    };
    line(header);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
    for (const auto& r : rows) line(r);
}

Report summary_report(const ScoreTable& table, const ReportFilter& filter) {
    Report rep;
    rep.header = {"dataset", "metric", "contender", "n", "mean", "std"};
    rep.notes.push_back("std: population standard deviation over series");
    for_each_cell(table, filter, false, [&](const Selection& sel, const std::string& label) {
        for (const auto& [c, s] : summarize(table, sel)) {
            rep.rows.push_back({label, std::string(to_string(sel.metric)), c, std::to_string(s.count), fixed(s.mean, 3),
                                fixed(s.std, 3)});
        }
    });
    return rep;
}

Report best_report(const ScoreTable& table, const ReportFilter& filter) {
    Report rep;
    rep.header = {"dataset", "metric", "contender", "best"};
    rep.notes.push_back("ties: " + std::string(kBestTieRule));
    for_each_cell(table, filter, true, [&](const Selection& sel, const std::string& label) {
        for (const auto& [c, n] : count_best(table, sel)) {
            const bool whole = n == static_cast<double>(static_cast<long long>(n));
            rep.rows.push_back({label, std::string(to_string(sel.metric)), c,
                                whole ? std::to_string(static_cast<long long>(n)) : fixed(n, 3)});
        }
    });
    return rep;
}

Report rank_report(const ScoreTable& table, const ReportFilter& filter) {
    Report rep;
    rep.header = {"dataset", "metric", "contender", "avg_rank"};
    rep.notes.push_back("ties: " + std::string(kRankTieRule));
    for_each_cell(table, filter, true, [&](const Selection& sel, const std::string& label) {
        for (const auto& [c, r] : rank(table, sel)) {
            rep.rows.push_back({label, std::string(to_string(sel.metric)), c, fixed(r, 2)});
        }
    });
    return rep;
}

Report improvement_report(const ScoreTable& table) {
    Report rep;
    rep.header = {"contender", "metric", "im", "irc", "delta_pct"};
    rep.notes.push_back("S_D: 100*(irc-im)/im; S_P: 100*(im-irc)/irc; positive means IRC is better");
    for (const auto& imp : improvement_table(table)) {
        rep.rows.push_back({imp.contender, std::string(to_string(imp.metric)), fixed(imp.im, 3), fixed(imp.irc, 3),
                            fixed(imp.delta_pct, 3)});
    }
    return rep;
}

}  // namespace xirp
