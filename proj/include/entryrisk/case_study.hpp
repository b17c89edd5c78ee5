#pragma once

// Reference inputs of the Electroputere S.A. / Al-Arrab case (2007 takeover).

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "entryrisk/indicator.hpp"
#include "entryrisk/market_data.hpp"
#include "entryrisk/numeric_format.hpp"
#include "entryrisk/strategy_grid.hpp"

namespace entryrisk::case_study {

inline constexpr std::int64_t kSharesOutstanding2007 = 124'167'954;
inline constexpr double kCommonStock2007 = 12'416'795.40;
inline constexpr double kPriceJune1 = 0.256;
inline constexpr double kPriceNov6 = 1.22;

/// Romania (target) vs. Saudi Arabia (origin), 2007.
inline constexpr MacroProfile kProfile2007{7.0, 10.0, 0.066, 0.041, 0.06, 0.04};

struct PublishedFigure {
    const char* date;
    double enterprise_value;
    double i_value;
    double i_star;
    StrategyClass strategy;
};

/// Figures printed in the original case write-up. They do not follow from the
/// indicator formula applied to the same inputs; kept only to flag the mismatch.
inline constexpr PublishedFigure kPublished[] = {
    {"2007-06-01", 31'786'996.224, 4.382, 0.641672373, StrategyClass::Acquisition},
    {"2007-11-06", 151'484'903.88, 20.8895, 1.31992804, StrategyClass::Acquisition},
};

namespace detail {
inline bool near_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }
inline bool near_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }
}  // namespace detail

inline std::optional<PublishedFigure> match_published(const MacroProfile& p, const FirmValuation& v) {
    constexpr double tol = 1e-9;
    const MacroProfile& ref = kProfile2007;
    if (!detail::near_abs(p.n_rating, ref.n_rating, tol) || !detail::near_abs(p.f_compat, ref.f_compat, tol) ||
        !detail::near_abs(p.ri_target, ref.ri_target, tol) || !detail::near_abs(p.ri_origin, ref.ri_origin, tol) ||
        !detail::near_abs(p.rce_target, ref.rce_target, tol) || !detail::near_abs(p.rce_origin, ref.rce_origin, tol) ||
        !detail::near_rel(v.common_stock, kCommonStock2007, tol)) {
        return std::nullopt;
    }
    for (const auto& fig : kPublished) {
        if (detail::near_rel(v.enterprise_value, fig.enterprise_value, tol)) {
            return fig;
        }
    }
    return std::nullopt;
}

/// Informational note for inputs that reproduce a published case-study date.
inline std::optional<std::string> discrepancy_note(const MacroProfile& p, const FirmValuation& v) {
    auto fig = match_published(p, v);
    if (!fig) {
        return std::nullopt;
    }
    return std::string("note: published case-study figures for these inputs (") + fig->date + ") report I=" +
           format_shortest(fig->i_value) + ", I*=" + format_shortest(fig->i_star) + " (" +
           std::string(to_string(fig->strategy)) +
           "); the indicator formula applied to the same inputs gives the values above";
}

}  // namespace entryrisk::case_study
