#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "entryrisk/forecast.hpp"
#include "entryrisk/numeric_format.hpp"
#include "entryrisk/scenario_config.hpp"
#include "entryrisk/series.hpp"

namespace entryrisk {

inline constexpr int kIndicatorDecimals = 6;

/// RFC-4180 field quoting.
inline std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

inline std::string warning_codes(const IndicatorPoint& p) {
    std::string codes;
    for (const auto& w : p.result.warnings) {
        codes += (codes.empty() ? "" : ";") + w.code;
    }
    if (p.classification.boundary_hit) {
        codes += (codes.empty() ? "" : ";") + std::string("grid_boundary_hit");
    }
    return codes;
}

inline constexpr std::string_view kSeriesCsvHeader = "date,price,shares,V,V/CS,I,I_star,class,warnings";

/// One row per point. Currency and ratios at full round-trip precision, I and I* fixed to 6 decimals.
inline void write_series_csv(std::ostream& out, const IndicatorSeries& series) {
    out << kSeriesCsvHeader << '\n';
    for (const auto& p : series.points) {
        out << format_date(p.date()) << ',' << format_shortest(p.snapshot.close_price) << ','
            << p.snapshot.shares_outstanding << ',' << format_shortest(p.snapshot.market_value) << ','
            << format_shortest(p.result.valuation_ratio) << ',' << format_fixed(p.result.i_value, kIndicatorDecimals)
            << ',' << format_fixed(p.result.i_star, kIndicatorDecimals) << ','
            << csv_field(to_string(p.classification.strategy)) << ',' << csv_field(warning_codes(p)) << '\n';
    }
}

inline Json forecast_to_json(const ForecastResult& f) {
    Json j = Json::object();
    j["method"] = std::string(to_string(f.method));
    j["window_used"] = f.window_used;
    j["window_start"] = format_date(f.window_start);
    j["step"] = format_step(f.step);
    j["slope_per_day"] = f.slope ? Json(*f.slope) : Json(nullptr);
    j["intercept"] = f.intercept ? Json(*f.intercept) : Json(nullptr);
    Json pts = Json::array();
    for (const auto& p : f.horizon_points) {
        pts.push_back(Json{{"date", format_date(p.date)}, {"i_star", p.i_star}});
    }
    j["horizon"] = std::move(pts);
    return j;
}

inline Json class_summary_to_json(const ClassSummary& s) {
    Json counts = Json::object();
    for (auto strategy : kAllStrategies) {
        counts[std::string(to_string(strategy))] = s.count(strategy);
    }
    Json changes = Json::array();
    for (const auto& d : s.change_dates) {
        changes.push_back(format_date(d));
    }
    return Json{{"counts", std::move(counts)}, {"change_dates", std::move(changes)}};
}

inline Json summary_to_json(const ScenarioConfig& config, const IndicatorSeries& series,
                            const std::optional<ForecastResult>& forecast_result) {
    Json j = Json::object();
    j["config"] = scenario_to_json(config);
    j["points"] = series.size();
    j["first_date"] = series.empty() ? Json(nullptr) : Json(format_date(series.points.front().date()));
    j["last_date"] = series.empty() ? Json(nullptr) : Json(format_date(series.points.back().date()));
    j["class_summary"] = class_summary_to_json(classify_series(series));
    Json hits = Json::array();
    for (const auto& p : series.points) {
        if (p.classification.boundary_hit) {
            hits.push_back(format_date(p.date()));
        }
    }
    j["boundary_hits"] = std::move(hits);
    if (forecast_result) {
        j["forecast"] = forecast_to_json(*forecast_result);
    }
    return j;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace entryrisk
