#pragma once

// Tabular reports over a ScoreTable, rendered as CSV or aligned text.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xirp/metrics.hpp"

namespace xirp {

struct Report {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// Free-form lines emitted before the table, prefixed with "# ".
    std::vector<std::string> notes;

    void write_csv(std::ostream& out) const;
    void write_text(std::ostream& out) const;
};

struct ReportFilter {
    std::optional<std::string> dataset;
    std::optional<Metric> metric;
};

/// Label used for rows pooled over every dataset.
inline constexpr std::string_view kAllDatasets = "ALL";

Report summary_report(const ScoreTable& table, const ReportFilter& filter = {});
Report best_report(const ScoreTable& table, const ReportFilter& filter = {});
Report rank_report(const ScoreTable& table, const ReportFilter& filter = {});
Report improvement_report(const ScoreTable& table);

}  // namespace xirp
