#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entryrisk/date.hpp"
#include "entryrisk/errors.hpp"
#include "entryrisk/indicator.hpp"
#include "entryrisk/market_data.hpp"
#include "entryrisk/strategy_grid.hpp"

namespace entryrisk {

/// Macro regime applying to [start, end]; an absent end is open-ended.
struct MacroSegment {
    Date start;
    std::optional<Date> end;
    MacroProfile profile;

    [[nodiscard]] bool contains(const Date& d) const { return !(d < start) && (!end || !(*end < d)); }

    friend bool operator==(const MacroSegment&, const MacroSegment&) = default;
};

struct ScenarioConfig {
    std::vector<MacroSegment> segments;
    SharesSchedule shares_schedule;
    CapitalSchedule common_stock_schedule;
    std::string price_csv_path;
    GridBoundaries grid;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Segments must be non-empty, individually ordered, date-ascending and disjoint.
inline void validate_segments(const std::vector<MacroSegment>& segments) {
    if (segments.empty()) {
        throw ConfigError("scenario needs at least one segment");
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const auto& s = segments[i];
        if (s.end && *s.end < s.start) {
            throw ConfigError("segment " + std::to_string(i) + " ends (" + format_date(*s.end) + ") before it starts (" +
                              format_date(s.start) + ")");
        }
        if (i == 0) {
            continue;
        }
        const auto& prev = segments[i - 1];
        if (s.start < prev.start) {
            throw ConfigError("segments not date-ascending at segment " + std::to_string(i));
        }
        if (!prev.end || !(*prev.end < s.start)) {
            throw ConfigError("overlapping segments " + std::to_string(i - 1) + " and " + std::to_string(i));
        }
    }
}

inline const MacroSegment* segment_for(const std::vector<MacroSegment>& segments, const Date& d) {
    for (const auto& s : segments) {
        if (s.contains(d)) {
            return &s;
        }
    }
    return nullptr;
}

struct IndicatorPoint {
    CompanySnapshot snapshot;
    IndicatorResult result;
    Classification classification;

    [[nodiscard]] const Date& date() const noexcept { return snapshot.date; }
};

struct IndicatorSeries {
    std::vector<IndicatorPoint> points;

    [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
    [[nodiscard]] bool empty() const noexcept { return points.empty(); }
};

/// Evaluates the indicator on every trading date. Coverage by a segment and by both
/// schedules is checked for all dates before any evaluation.
inline IndicatorSeries build_series(const ScenarioConfig& config, const PriceSeries& prices) {
    validate_segments(config.segments);
    std::vector<const MacroSegment*> regime;
    regime.reserve(prices.size());
    for (const auto& quote : prices.records()) {
        const MacroSegment* seg = segment_for(config.segments, quote.date);
        if (seg == nullptr) {
            throw CoverageError("date " + format_date(quote.date) + " is not covered by any macro segment");
        }
        if (!config.shares_schedule.covers(quote.date)) {
            throw CoverageError("date " + format_date(quote.date) + " precedes the shares schedule");
        }
        if (!config.common_stock_schedule.covers(quote.date)) {
            throw CoverageError("date " + format_date(quote.date) + " precedes the common stock schedule");
        }
        regime.push_back(seg);
    }

    IndicatorSeries series;
    series.points.reserve(prices.size());
    for (std::size_t i = 0; i < prices.size(); ++i) {
        const Date& date = prices.records()[i].date;
        IndicatorPoint point;
        point.snapshot = snapshot_at(prices, config.shares_schedule, config.common_stock_schedule, date);
        try {
            point.result = compute_indicator(regime[i]->profile,
                                             FirmValuation{point.snapshot.market_value, point.snapshot.common_stock});
        } catch (const DomainError& e) {
            throw DomainError(format_date(date) + ": " + e.what());
        }
        point.classification = classify_detailed(point.result.i_star, config.grid);
        series.points.push_back(std::move(point));
    }
    return series;
}

struct ClassSummary {
    std::array<std::size_t, kAllStrategies.size()> counts{};
    std::vector<Date> change_dates;

    [[nodiscard]] std::size_t count(StrategyClass s) const { return counts[static_cast<std::size_t>(s)]; }
    [[nodiscard]] std::size_t total() const {
        std::size_t n = 0;
        for (auto c : counts) {
            n += c;
        }
        return n;
    }
};

inline ClassSummary classify_series(const IndicatorSeries& series) {
    ClassSummary summary;
    for (std::size_t i = 0; i < series.points.size(); ++i) {
        const auto strategy = series.points[i].classification.strategy;
        ++summary.counts[static_cast<std::size_t>(strategy)];
        if (i > 0 && strategy != series.points[i - 1].classification.strategy) {
            summary.change_dates.push_back(series.points[i].date());
        }
    }
    return summary;
}

}  // namespace entryrisk
