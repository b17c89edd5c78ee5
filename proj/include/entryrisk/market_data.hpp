#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entryrisk/date.hpp"
#include "entryrisk/errors.hpp"
#include "entryrisk/numeric_format.hpp"

namespace entryrisk {

struct QuoteRecord {
    Date date;
    double close_price = 0.0;
    std::int64_t volume = 0;

    friend bool operator==(const QuoteRecord&, const QuoteRecord&) = default;
};

/// Daily quotes with strictly ascending dates. Only trading days are present.
class PriceSeries {
public:
    PriceSeries() = default;

    /// Sorts by date; throws DuplicateDate if two records share a date.
    explicit PriceSeries(std::vector<QuoteRecord> records) : records_(std::move(records)) {
        std::stable_sort(records_.begin(), records_.end(),
                         [](const QuoteRecord& a, const QuoteRecord& b) { return a.date < b.date; });
        for (std::size_t i = 1; i < records_.size(); ++i) {
            if (records_[i].date == records_[i - 1].date) {
                throw DuplicateDate(0, "duplicate date " + format_date(records_[i].date));
            }
        }
    }

    [[nodiscard]] const std::vector<QuoteRecord>& records() const noexcept { return records_; }
    [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }
    [[nodiscard]] bool empty() const noexcept { return records_.empty(); }

    [[nodiscard]] const QuoteRecord* find(const Date& date) const {
        auto it = std::lower_bound(records_.begin(), records_.end(), date,
                                   [](const QuoteRecord& r, const Date& d) { return r.date < d; });
        return (it != records_.end() && it->date == date) ? &*it : nullptr;
    }

    friend bool operator==(const PriceSeries&, const PriceSeries&) = default;

private:
    std::vector<QuoteRecord> records_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

}  // namespace detail

/// Reads `YYYY-MM-DD,<close>,<volume>` records (LF or CRLF). An optional header is
/// recognised on line 1 when its first field is not a date and its second is not a number.
/// Blank lines are skipped.
inline PriceSeries parse_price_csv(std::istream& in) {
    std::vector<QuoteRecord> records;
    std::vector<std::size_t> line_of;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.size() >= 3 && view.substr(0, 3) == "\xEF\xBB\xBF") {
            view.remove_prefix(3);
        }
        if (detail::trim(view).empty()) {
            continue;
        }
        auto fields = detail::split_commas(view);
        if (line_no == 1 && fields.size() >= 2 && !try_parse_date(fields[0]) && !parse_decimal(fields[1])) {
            continue;  // header
        }
        if (fields.size() != 3) {
            throw ParseError(line_no, "expected 3 fields (date,close,volume), got " + std::to_string(fields.size()));
        }
        auto date = try_parse_date(fields[0]);
        if (!date) {
            throw ParseError(line_no, "bad date '" + std::string(fields[0]) + "'");
        }
        auto price = parse_decimal(fields[1]);
        if (!price) {
            throw ParseError(line_no, "non-numeric price '" + std::string(fields[1]) + "'");
        }
        if (*price < 0.0) {
            throw ParseError(line_no, "negative price '" + std::string(fields[1]) + "'");
        }
        auto volume = parse_integer(fields[2]);
        if (!volume) {
            throw ParseError(line_no, "non-integer volume '" + std::string(fields[2]) + "'");
        }
        if (*volume < 0) {
            throw ParseError(line_no, "negative volume '" + std::string(fields[2]) + "'");
        }
        records.push_back({*date, *price, *volume});
        line_of.push_back(line_no);
    }

    std::vector<std::size_t> order(records.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return records[a].date < records[b].date; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (records[order[i]].date == records[order[i - 1]].date) {
            throw DuplicateDate(std::max(line_of[order[i]], line_of[order[i - 1]]),
                                "duplicate date " + format_date(records[order[i]].date));
        }
    }
    return PriceSeries(std::move(records));
}

inline void write_price_csv(std::ostream& out, const PriceSeries& series) {
    out << "date,close,volume\n";
    for (const auto& r : series.records()) {
        out << format_date(r.date) << ',' << format_shortest(r.close_price) << ',' << r.volume << '\n';
    }
}

/// Piecewise-constant value keyed by effective date (shares outstanding, common stock).
template <typename Value>
class EffectiveSchedule {
public:
    struct Entry {
        Date effective;
        Value value;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    EffectiveSchedule() = default;

    explicit EffectiveSchedule(std::vector<Entry> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw DomainError("schedule needs at least one entry");
        }
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!(entries_[i].value > Value{0})) {
                throw DomainError("schedule value at " + format_date(entries_[i].effective) + " must be positive");
            }
            if (i > 0 && !(entries_[i - 1].effective < entries_[i].effective)) {
                throw DomainError("schedule effective dates must be strictly ascending");
            }
        }
    }

    [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

    [[nodiscard]] bool covers(const Date& date) const { return !entries_.empty() && !(date < entries_.front().effective); }

    /// Value of the latest entry with effective date <= `date`.
    [[nodiscard]] Value at(const Date& date) const {
        if (!covers(date)) {
            throw ScheduleGap("no schedule entry effective on or before " + format_date(date));
        }
        auto it = std::upper_bound(entries_.begin(), entries_.end(), date,
                                   [](const Date& d, const Entry& e) { return d < e.effective; });
        return std::prev(it)->value;
    }

    friend bool operator==(const EffectiveSchedule&, const EffectiveSchedule&) = default;

private:
    std::vector<Entry> entries_;
};

using SharesSchedule = EffectiveSchedule<std::int64_t>;
using CapitalSchedule = EffectiveSchedule<double>;

/// Market capitalization: close price times shares outstanding.
inline double market_value(double close_price, std::int64_t shares_outstanding) {
    if (!(close_price >= 0.0) || !std::isfinite(close_price)) {
        throw DomainError("close price must be non-negative and finite");
    }
    if (shares_outstanding <= 0) {
        throw DomainError("shares outstanding must be positive");
    }
    return close_price * static_cast<double>(shares_outstanding);
}

/// Nearest whole currency unit, ties away from zero.
inline std::int64_t display_currency(double amount) { return static_cast<std::int64_t>(std::llround(amount)); }

/// "31,786,996 lei"
inline std::string format_lei(double amount) {
    auto units = display_currency(amount);
    bool negative = units < 0;
    std::string digits = std::to_string(negative ? -units : units);
    std::string grouped;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0 && (digits.size() - i) % 3 == 0) {
            grouped += ',';
        }
        grouped += digits[i];
    }
    return (negative ? "-" : "") + grouped + " lei";
}

struct CompanySnapshot {
    Date date;
    double close_price = 0.0;
    std::int64_t shares_outstanding = 0;
    double common_stock = 0.0;
    double market_value = 0.0;
};

inline CompanySnapshot snapshot_at(const PriceSeries& series, const SharesSchedule& shares,
                                   const CapitalSchedule& common_stock, const Date& date) {
    const QuoteRecord* quote = series.find(date);
    if (quote == nullptr) {
        throw MissingQuote("no quote for " + format_date(date));
    }
    CompanySnapshot snap;
    snap.date = date;
    snap.close_price = quote->close_price;
    snap.shares_outstanding = shares.at(date);
    snap.common_stock = common_stock.at(date);
    snap.market_value = market_value(snap.close_price, snap.shares_outstanding);
    return snap;
}

}  // namespace entryrisk
