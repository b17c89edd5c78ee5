#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entryrisk/date.hpp"
#include "entryrisk/errors.hpp"
#include "entryrisk/series.hpp"

namespace entryrisk {

enum class ForecastMethod { Linear, HoldLast };

inline std::string_view to_string(ForecastMethod m) { return m == ForecastMethod::Linear ? "linear" : "hold-last"; }

inline ForecastMethod parse_forecast_method(std::string_view text) {
    if (text == "linear") {
        return ForecastMethod::Linear;
    }
    if (text == "hold-last") {
        return ForecastMethod::HoldLast;
    }
    throw ParseError(0, "unknown forecast method '" + std::string(text) + "' (use linear or hold-last)");
}

struct Observation {
    Date date;
    double value;
};

struct ForecastPoint {
    Date date;
    double i_star;
};

struct ForecastResult {
    ForecastMethod method = ForecastMethod::Linear;
    std::size_t window_used = 0;
    Date window_start;
    CalendarStep step;
    std::vector<ForecastPoint> horizon_points;
    /// Linear only: i_star = intercept + slope * (days since window_start).
    std::optional<double> slope;
    std::optional<double> intercept;
};

/// Trend extrapolation of I* over the trailing `window` observations.
/// `observations` must be date-ascending.
inline ForecastResult forecast(std::span<const Observation> observations, std::size_t window, int horizon,
                               const CalendarStep& step, ForecastMethod method = ForecastMethod::Linear) {
    if (window < 2) {
        throw InsufficientData("forecast window must be at least 2, got " + std::to_string(window));
    }
    if (observations.size() < window) {
        throw InsufficientData("forecast needs " + std::to_string(window) + " points, series has " +
                               std::to_string(observations.size()));
    }
    if (horizon < 1) {
        throw DomainError("forecast horizon must be at least 1");
    }
    auto tail = observations.subspan(observations.size() - window);

    ForecastResult out;
    out.method = method;
    out.window_used = window;
    out.window_start = tail.front().date;
    out.step = step;
    const Date& last = tail.back().date;

    if (method == ForecastMethod::HoldLast) {
        for (int k = 1; k <= horizon; ++k) {
            out.horizon_points.push_back({advance(last, step, k), tail.back().value});
        }
        return out;
    }

    // Centered least squares on t = days since window start.
    const double n = static_cast<double>(tail.size());
    double t_mean = 0.0;
    double y_mean = 0.0;
    for (const auto& obs : tail) {
        t_mean += static_cast<double>(days_between(out.window_start, obs.date));
        y_mean += obs.value;
    }
    t_mean /= n;
    y_mean /= n;
    double stt = 0.0;
    double sty = 0.0;
    for (const auto& obs : tail) {
        const double dt = static_cast<double>(days_between(out.window_start, obs.date)) - t_mean;
        stt += dt * dt;
        sty += dt * (obs.value - y_mean);
    }
    if (!(stt > 0.0)) {
        throw InsufficientData("forecast window spans a single date");
    }
    const double slope = sty / stt;
    const double intercept = y_mean - slope * t_mean;
    out.slope = slope;
    out.intercept = intercept;
    for (int k = 1; k <= horizon; ++k) {
        const Date d = advance(last, step, k);
        out.horizon_points.push_back({d, intercept + slope * static_cast<double>(days_between(out.window_start, d))});
    }
    return out;
}

inline std::vector<Observation> i_star_observations(const IndicatorSeries& series) {
    std::vector<Observation> obs;
    obs.reserve(series.size());
    for (const auto& p : series.points) {
        obs.push_back({p.date(), p.result.i_star});
    }
    return obs;
}

inline ForecastResult forecast(const IndicatorSeries& series, std::size_t window, int horizon, const CalendarStep& step,
                               ForecastMethod method = ForecastMethod::Linear) {
    auto obs = i_star_observations(series);
    return forecast(std::span<const Observation>(obs), window, horizon, step, method);
}

}  // namespace entryrisk
