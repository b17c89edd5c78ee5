#pragma once

// Market-entry risk indicator:
//
//   I  = N * F * (1+RI_T)/(1+RI_O) * (1+RCE_T)/(1+RCE_O) * V/CS
//   I* = lg I = lg(N * monetary * growth) + lg(F * V/CS)
//
// The first log term scores the target country, the second the target firm.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "entryrisk/errors.hpp"

namespace entryrisk {

/// Country and compatibility factors for one evaluation regime.
struct MacroProfile {
    double n_rating = 1.0;    ///< country-risk rating, [1, 10]
    double f_compat = 1.0;    ///< cultural/organizational compatibility, [0.1, 100]
    double ri_target = 0.0;   ///< target-market inflation, fraction
    double ri_origin = 0.0;   ///< origin-country inflation, fraction
    double rce_target = 0.0;  ///< target-country growth, fraction, may be negative
    double rce_origin = 0.0;  ///< origin-country growth, fraction, may be negative

    friend bool operator==(const MacroProfile&, const MacroProfile&) = default;
};

struct FirmValuation {
    double enterprise_value = 0.0;  ///< V, market capitalization when listed
    double common_stock = 1.0;      ///< CS, nominal share capital

    friend bool operator==(const FirmValuation&, const FirmValuation&) = default;
};

namespace limits {
inline constexpr double kRatingMin = 1.0;
inline constexpr double kRatingMax = 10.0;
inline constexpr double kCompatMin = 0.1;
inline constexpr double kCompatMax = 100.0;
inline constexpr double kRatioSoftMax = 2.0;
inline constexpr double kValuationSoftMax = 100.0;
}  // namespace limits

enum class IssueSeverity { Violation, Warning };

struct Issue {
    IssueSeverity severity;
    std::string code;     ///< machine-friendly, stable across releases
    std::string message;  ///< human-friendly

    [[nodiscard]] bool is_violation() const noexcept { return severity == IssueSeverity::Violation; }
};

namespace detail {

inline std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << std::showpoint << v;
    std::string s = os.str();
    // trim trailing zeros but keep one digit after the point
    auto dot = s.find('.');
    if (dot != std::string::npos && s.find('e') == std::string::npos) {
        auto last = s.find_last_not_of('0');
        s.erase(std::max(last, dot + 1) + 1);
    }
    return s;
}

inline void check_rate(std::vector<Issue>& out, double rate, const char* name) {
    if (!std::isfinite(rate)) {
        out.push_back({IssueSeverity::Violation, std::string(name) + "_not_finite",
                       std::string(name) + " is not a finite number"});
    } else if (rate <= -1.0) {
        out.push_back({IssueSeverity::Violation, std::string(name) + "_at_or_below_minus_1",
                       std::string(name) + " " + fmt_num(rate) + " must exceed -1"});
    }
}

}  // namespace detail

/// Reports hard violations (factor outside its definitional range) and soft warnings
/// (monetary or growth ratio above 2). Never throws.
inline std::vector<Issue> validate_profile(const MacroProfile& p) {
    std::vector<Issue> out;
    if (!std::isfinite(p.n_rating)) {
        out.push_back({IssueSeverity::Violation, "n_not_finite", "N is not a finite number"});
    } else if (p.n_rating < limits::kRatingMin) {
        out.push_back({IssueSeverity::Violation, "n_below_1", "N below 1 (" + detail::fmt_num(p.n_rating) + ")"});
    } else if (p.n_rating > limits::kRatingMax) {
        out.push_back({IssueSeverity::Violation, "n_above_10", "N above 10 (" + detail::fmt_num(p.n_rating) + ")"});
    }
    if (!std::isfinite(p.f_compat)) {
        out.push_back({IssueSeverity::Violation, "f_not_finite", "F is not a finite number"});
    } else if (p.f_compat < limits::kCompatMin) {
        out.push_back({IssueSeverity::Violation, "f_below_0.1", "F below 0.1 (" + detail::fmt_num(p.f_compat) + ")"});
    } else if (p.f_compat > limits::kCompatMax) {
        out.push_back({IssueSeverity::Violation, "f_above_100", "F above 100 (" + detail::fmt_num(p.f_compat) + ")"});
    }
    const std::size_t hard_before_rates = out.size();
    detail::check_rate(out, p.ri_target, "ri_target");
    detail::check_rate(out, p.ri_origin, "ri_origin");
    detail::check_rate(out, p.rce_target, "rce_target");
    detail::check_rate(out, p.rce_origin, "rce_origin");
    if (out.size() != hard_before_rates) {
        return out;  // ratios undefined
    }

    const double monetary = (1.0 + p.ri_target) / (1.0 + p.ri_origin);
    const double growth = (1.0 + p.rce_target) / (1.0 + p.rce_origin);
    if (monetary > limits::kRatioSoftMax) {
        out.push_back({IssueSeverity::Warning, "monetary_ratio_above_2",
                       "monetary ratio " + detail::fmt_num(monetary) + " exceeds 2"});
    }
    if (growth > limits::kRatioSoftMax) {
        out.push_back({IssueSeverity::Warning, "growth_ratio_above_2",
                       "growth ratio " + detail::fmt_num(growth) + " exceeds 2"});
    }
    return out;
}

inline bool has_violation(const std::vector<Issue>& issues) {
    for (const auto& issue : issues) {
        if (issue.is_violation()) {
            return true;
        }
    }
    return false;
}

struct IndicatorResult {
    double i_value = 0.0;
    double i_star = 0.0;
    double monetary_ratio = 0.0;
    double growth_ratio = 0.0;
    double valuation_ratio = 0.0;
    double country_term = 0.0;  ///< lg(N * monetary * growth)
    double firm_term = 0.0;     ///< lg(F * V/CS)
    std::vector<Issue> warnings;
};

/// Decimal logarithm of the indicator. Throws DomainError for non-positive or non-finite input.
inline double log_indicator(double i_value) {
    if (!(i_value > 0.0) || !std::isfinite(i_value)) {
        throw DomainError("lg undefined for indicator value " + detail::fmt_num(i_value));
    }
    return std::log10(i_value);
}

inline IndicatorResult compute_indicator(const MacroProfile& profile, const FirmValuation& valuation) {
    auto issues = validate_profile(profile);
    for (const auto& issue : issues) {
        if (issue.is_violation()) {
            throw DomainError(issue.message);
        }
    }
    if (!(valuation.common_stock > 0.0) || !std::isfinite(valuation.common_stock)) {
        throw DomainError("common stock must be positive and finite");
    }
    if (!(valuation.enterprise_value > 0.0) || !std::isfinite(valuation.enterprise_value)) {
        throw DomainError("enterprise value must be positive and finite for the indicator");
    }

    IndicatorResult r;
    r.monetary_ratio = (1.0 + profile.ri_target) / (1.0 + profile.ri_origin);
    r.growth_ratio = (1.0 + profile.rce_target) / (1.0 + profile.rce_origin);
    r.valuation_ratio = valuation.enterprise_value / valuation.common_stock;
    r.i_value = profile.n_rating * profile.f_compat * r.monetary_ratio * r.growth_ratio * r.valuation_ratio;
    if (!std::isfinite(r.i_value) || !(r.i_value > 0.0)) {
        throw DomainError("indicator not representable: " + detail::fmt_num(r.i_value));
    }
    r.i_star = log_indicator(r.i_value);
    r.country_term = std::log10(profile.n_rating * r.monetary_ratio * r.growth_ratio);
    r.firm_term = std::log10(profile.f_compat * r.valuation_ratio);

    r.warnings = std::move(issues);
    if (r.valuation_ratio > limits::kValuationSoftMax) {
        r.warnings.push_back({IssueSeverity::Warning, "valuation_ratio_above_100",
                              "valuation ratio V/CS " + detail::fmt_num(r.valuation_ratio) + " exceeds 100"});
    }
    return r;
}

enum class ValuationHealth { NearBankrupt, Parity, RichInAssets };

inline const char* to_string(ValuationHealth h) {
    switch (h) {
        case ValuationHealth::NearBankrupt: return "NearBankrupt";
        case ValuationHealth::Parity: return "Parity";
        case ValuationHealth::RichInAssets: return "RichInAssets";
    }
    return "?";
}

/// V > CS: assets exceed the nominal capital. V < CS: close to bankruptcy.
inline ValuationHealth valuation_health(const FirmValuation& v) {
    if (!(v.common_stock > 0.0)) {
        throw DomainError("common stock must be positive");
    }
    if (v.enterprise_value > v.common_stock) {
        return ValuationHealth::RichInAssets;
    }
    if (v.enterprise_value < v.common_stock) {
        return ValuationHealth::NearBankrupt;
    }
    return ValuationHealth::Parity;
}

}  // namespace entryrisk
