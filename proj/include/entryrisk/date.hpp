#pragma once

#include <charconv>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "entryrisk/errors.hpp"

namespace entryrisk {

using Date = std::chrono::year_month_day;

/// Parses a strict ISO-8601 calendar date `YYYY-MM-DD`. Returns nullopt on any deviation.
inline std::optional<Date> try_parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        return std::nullopt;
    }
    auto field = [&](std::size_t pos, std::size_t len) -> std::optional<int> {
        int value = 0;
        const char* first = text.data() + pos;
        const char* last = first + len;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || *first == '-' || *first == '+') {
            return std::nullopt;
        }
        return value;
    };
    auto y = field(0, 4);
    auto m = field(5, 2);
    auto d = field(8, 2);
    if (!y || !m || !d) {
        return std::nullopt;
    }
    Date date{std::chrono::year{*y}, std::chrono::month{static_cast<unsigned>(*m)},
              std::chrono::day{static_cast<unsigned>(*d)}};
    if (!date.ok()) {
        return std::nullopt;
    }
    return date;
}

inline Date parse_date(std::string_view text) {
    if (auto date = try_parse_date(text)) {
        return *date;
    }
    throw ParseError(0, "invalid date '" + std::string(text) + "' (expected YYYY-MM-DD)");
}

inline std::string format_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

/// Signed whole days from `from` to `to`.
inline long days_between(const Date& from, const Date& to) {
    return static_cast<long>((std::chrono::sys_days{to} - std::chrono::sys_days{from}).count());
}

enum class StepUnit { Day, Week, Month, Year };

/// A calendar interval such as "1y", "6m", "2w" or "30d".
struct CalendarStep {
    int count = 1;
    StepUnit unit = StepUnit::Day;

    friend bool operator==(const CalendarStep&, const CalendarStep&) = default;
};

inline CalendarStep parse_step(std::string_view text) {
    if (text.size() < 2) {
        throw ParseError(0, "invalid calendar step '" + std::string(text) + "'");
    }
    CalendarStep step;
    const char* first = text.data();
    const char* last = text.data() + text.size() - 1;
    auto [ptr, ec] = std::from_chars(first, last, step.count);
    if (ec != std::errc{} || ptr != last || step.count < 1) {
        throw ParseError(0, "invalid calendar step '" + std::string(text) + "'");
    }
    switch (text.back()) {
        case 'd': step.unit = StepUnit::Day; break;
        case 'w': step.unit = StepUnit::Week; break;
        case 'm': step.unit = StepUnit::Month; break;
        case 'y': step.unit = StepUnit::Year; break;
        default: throw ParseError(0, "invalid calendar step unit in '" + std::string(text) + "' (use d, w, m or y)");
    }
    return step;
}

inline std::string format_step(const CalendarStep& step) {
    constexpr char units[] = {'d', 'w', 'm', 'y'};
    return std::to_string(step.count) + units[static_cast<int>(step.unit)];
}

/// `origin` advanced by `multiple` steps. Month/year arithmetic clamps to the last day of the month.
inline Date advance(const Date& origin, const CalendarStep& step, int multiple = 1) {
    using namespace std::chrono;
    const int n = step.count * multiple;
    switch (step.unit) {
        case StepUnit::Day: return year_month_day{sys_days{origin} + days{n}};
        case StepUnit::Week: return year_month_day{sys_days{origin} + days{7 * n}};
        case StepUnit::Month:
        case StepUnit::Year: {
            year_month_day moved = step.unit == StepUnit::Month ? origin + months{n} : origin + years{n};
            if (!moved.ok()) {
                moved = year_month_day{year_month_day_last{moved.year(), month_day_last{moved.month()}}};
            }
            return moved;
        }
    }
    return origin;
}

}  // namespace entryrisk
