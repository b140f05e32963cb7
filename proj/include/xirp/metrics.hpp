#pragma once

/**
 * @file metrics.hpp
 * @brief Aggregation of per-series backtest scores into benchmark tables:
 * mean/std summaries, best-score counts, average ranks and the IM to IRC
 * improvement percentage.
 *
 * Two metrics are known. S_D (discriminative score) is higher-is-better and
 * S_P (predictive score) is lower-is-better.
 *
 * Tie rules:
 *  - rank(): tied contenders share the average of the rank positions they
 *    occupy.
 *  - count_best(): t tied winners receive 1/t each, so counts still sum to
 *    the number of series.
 */

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "xirp/types.hpp"

namespace xirp {

enum class Metric { SD, SP };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view name);
bool higher_is_better(Metric m);

/// True when `a` is a strictly better score than `b` under `m`.
bool better(Metric m, double a, double b);

struct ScoreRecord {
    std::string dataset;
    std::string series_id;
    std::string contender;
    Metric metric = Metric::SD;
    std::optional<InversionKind> inversion;
    double value = 0.0;
};

inline constexpr std::string_view kScoreCsvHeader = "dataset,series_id,contender,metric,inversion,value";

inline constexpr std::string_view kRankTieRule = "average rank of tied positions";
inline constexpr std::string_view kBestTieRule = "1/t to each of t tied winners";

class ScoreTable {
public:
    ScoreTable() = default;
    explicit ScoreTable(std::vector<ScoreRecord> records);

    /// Throws Error{NonFinite} for a non-finite value and
    /// Error{DuplicateContender} when the (dataset, series, metric,
    /// inversion, contender) key repeats.
    void add(ScoreRecord r);

    const std::vector<ScoreRecord>& records() const noexcept { return records_; }
    bool empty() const noexcept { return records_.empty(); }

    std::vector<std::string> datasets() const;
    std::vector<std::string> contenders() const;

    /// Records with the given inversion tag (nullopt keeps untagged records).
    ScoreTable with_inversion(std::optional<InversionKind> tag) const;

    /// Parses the CSV schema `kScoreCsvHeader`. Errors name the line number.
    static ScoreTable read_csv(std::istream& in);
    static ScoreTable read_csv_file(const std::string& path);
    void write_csv(std::ostream& out) const;

private:
    std::vector<ScoreRecord> records_;
    std::set<std::tuple<std::string, std::string, int, int, std::string>> keys_;
};

struct Selection {
    std::optional<std::string> dataset;  ///< nullopt pools every dataset
    Metric metric = Metric::SD;
};

struct Summary {
    std::size_t count = 0;
    double mean = 0.0;
    double std = 0.0;  ///< population standard deviation over series
};

std::map<std::string, Summary> summarize(const ScoreTable& table, const Selection& sel);

/// Best-score counts per contender; fractional only when ties occur.
std::map<std::string, double> count_best(const ScoreTable& table, const Selection& sel);

/// Average rank (1 = best) per contender.
std::map<std::string, double> rank(const ScoreTable& table, const Selection& sel);

/// Ranks of one series' scores, in input order, 1 = best.
std::vector<double> rank_values(const std::vector<double>& values, Metric metric);

/// Sums contender counts into groups, e.g. representations into models.
/// Contenders not named in `groups` keep their own label.
std::map<std::string, double> group_counts(const std::map<std::string, double>& counts,
                                           const std::map<std::string, std::string>& groups);

/// Signed change from IM to IRC in percent, positive when IRC is better.
/// S_D: 100 (irc - im) / im.  S_P: 100 (im - irc) / irc.
double improvement_pct(double im_score, double irc_score, Metric metric);

struct Improvement {
    std::string contender;
    Metric metric = Metric::SD;
    double im = 0.0;
    double irc = 0.0;
    double delta_pct = 0.0;
};

/// Per (contender, metric): mean IM score, mean IRC score and their
/// improvement_pct, using records tagged `im` and `irc`.
std::vector<Improvement> improvement_table(const ScoreTable& table);

}  // namespace xirp
