#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "entryrisk/case_study.hpp"
#include "entryrisk/indicator.hpp"
#include "oracle.hpp"

namespace entryrisk {
namespace {

using testing::ValidInputGenerator;

bool has_code(const std::vector<Issue>& issues, const std::string& code) {
    for (const auto& i : issues) {
        if (i.code == code) {
            return true;
        }
    }
    return false;
}

TEST(ValidateProfile, CaseStudyProfileIsClean) {
    EXPECT_TRUE(validate_profile(case_study::kProfile2007).empty());
}

TEST(ValidateProfile, RatingBelowOneIsViolation) {
    MacroProfile p = case_study::kProfile2007;
    p.n_rating = 0.5;
    auto issues = validate_profile(p);
    ASSERT_EQ(issues.size(), 1u);
    EXPECT_TRUE(issues[0].is_violation());
    EXPECT_EQ(issues[0].code, "n_below_1");
    EXPECT_NE(issues[0].message.find("N below 1"), std::string::npos);
}

TEST(ValidateProfile, RangeEdgesAreAccepted) {
    EXPECT_TRUE(validate_profile({1.0, 0.1, 0, 0, 0, 0}).empty());
    EXPECT_TRUE(validate_profile({10.0, 100.0, 0, 0, 0, 0}).empty());
    EXPECT_TRUE(has_code(validate_profile({10.5, 1, 0, 0, 0, 0}), "n_above_10"));
    EXPECT_TRUE(has_code(validate_profile({5, 0.09, 0, 0, 0, 0}), "f_below_0.1"));
    EXPECT_TRUE(has_code(validate_profile({5, 100.5, 0, 0, 0, 0}), "f_above_100"));
}

TEST(ValidateProfile, RatesAtOrBelowMinusOneAreViolations) {
    EXPECT_TRUE(has_code(validate_profile({5, 10, -1.0, 0, 0, 0}), "ri_target_at_or_below_minus_1"));
    EXPECT_TRUE(has_code(validate_profile({5, 10, 0, -1.5, 0, 0}), "ri_origin_at_or_below_minus_1"));
    EXPECT_TRUE(has_code(validate_profile({5, 10, 0, 0, -1.0, 0}), "rce_target_at_or_below_minus_1"));
    EXPECT_TRUE(has_code(validate_profile({5, 10, 0, 0, 0, -2.0}), "rce_origin_at_or_below_minus_1"));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_TRUE(has_violation(validate_profile({nan, 10, 0, 0, 0, 0})));
    EXPECT_TRUE(has_violation(validate_profile({5, 10, 0, nan, 0, 0})));
}

TEST(ValidateProfile, MonetaryRatioAboveTwoIsSoftWarning) {
    auto issues = validate_profile({7, 10, 3.0, 0.0, 0, 0});
    ASSERT_EQ(issues.size(), 1u);
    EXPECT_FALSE(issues[0].is_violation());
    EXPECT_EQ(issues[0].code, "monetary_ratio_above_2");
    EXPECT_NE(issues[0].message.find("monetary ratio 4.0 exceeds 2"), std::string::npos) << issues[0].message;
}

TEST(ValidateProfile, NegativeGrowthDownTurnIsAccepted) {
    // 2008-2009 style target contraction
    EXPECT_TRUE(validate_profile({5, 10, 0.12, 0.02, -0.07, 0.01}).empty());
}

TEST(ComputeIndicator, June2007InputsMatchOracle) {
    const FirmValuation v{31'786'996.224, 12'416'795.40};
    const auto r = compute_indicator(case_study::kProfile2007, v);
    // 60-digit mpmath: 187.032468780019212295869356388...
    EXPECT_NEAR(r.i_value, 187.0324687800192, 1e-10);
    EXPECT_NEAR(r.i_star, 2.271917006472114, 1e-12);
    EXPECT_DOUBLE_EQ(r.valuation_ratio, 2.56);
    const auto oracle = testing::oracle_indicator_decimal("7", "10", "0.066", "0.041", "0.06", "0.04",
                                                          "31786996.224", "12416795.40");
    EXPECT_NEAR(r.i_value / oracle.convert_to<double>() - 1.0, 0.0, 1e-12);
    EXPECT_TRUE(r.warnings.empty());
}

TEST(ComputeIndicator, UnitInputsGiveOne) {
    const auto r = compute_indicator({1, 1, 0.03, 0.03, 0.02, 0.02}, {5e6, 5e6});
    EXPECT_EQ(r.i_value, 1.0);
    EXPECT_EQ(r.i_star, 0.0);
}

TEST(ComputeIndicator, DoublingValueDoublesIndicator) {
    const auto base = compute_indicator(case_study::kProfile2007, {31'786'996.224, 12'416'795.40});
    const auto twice = compute_indicator(case_study::kProfile2007, {2 * 31'786'996.224, 12'416'795.40});
    EXPECT_EQ(twice.i_value, 2.0 * base.i_value);
    EXPECT_NEAR(twice.i_star - base.i_star, std::log10(2.0), 1e-12);
}

TEST(ComputeIndicator, HardViolationsThrowAndNeverClamp) {
    EXPECT_THROW(compute_indicator({0.5, 10, 0, 0, 0, 0}, {1, 1}), DomainError);
    EXPECT_THROW(compute_indicator({7, 10, 0, 0, 0, 0}, {1, 0}), DomainError);
    EXPECT_THROW(compute_indicator({7, 10, 0, 0, 0, 0}, {1, -3}), DomainError);
    EXPECT_THROW(compute_indicator({7, 10, 0, 0, 0, 0}, {0, 1}), DomainError);
}

TEST(ComputeIndicator, SoftWarningsPropagate) {
    const auto r = compute_indicator({7, 10, 3.0, 0.0, 0, 0}, {500, 1});
    EXPECT_TRUE(has_code(r.warnings, "monetary_ratio_above_2"));
    EXPECT_TRUE(has_code(r.warnings, "valuation_ratio_above_100"));
    EXPECT_NEAR(r.i_value, 7 * 10 * 4.0 * 500, 1e-9);
}

TEST(LogIndicator, PublishedPairs) {
    EXPECT_NEAR(log_indicator(4.382), 0.641672373, 1e-9);
    EXPECT_NEAR(log_indicator(20.8895), 1.31992804, 1e-8);
    EXPECT_EQ(log_indicator(1.0), 0.0);
}

TEST(LogIndicator, RejectsNonPositive) {
    EXPECT_THROW(log_indicator(0.0), DomainError);
    EXPECT_THROW(log_indicator(-1.0), DomainError);
    EXPECT_THROW(log_indicator(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(ValuationHealth, Categories) {
    EXPECT_EQ(valuation_health({31'786'996.224, 12'416'795.40}), ValuationHealth::RichInAssets);
    EXPECT_EQ(valuation_health({4.0, 4.0}), ValuationHealth::Parity);
    EXPECT_EQ(valuation_health({2.0, 4.0}), ValuationHealth::NearBankrupt);
    EXPECT_THROW(valuation_health({1.0, 0.0}), DomainError);
}

TEST(IndicatorProperties, DecompositionAndOracleOnRandomInputs) {
    ValidInputGenerator gen(20071106);
    for (int i = 0; i < 1000; ++i) {
        const auto p = gen.profile();
        const auto v = gen.valuation();
        const auto r = compute_indicator(p, v);
        ASSERT_TRUE(std::isfinite(r.i_value));
        ASSERT_GT(r.i_value, 0.0);
        ASSERT_NEAR(r.country_term + r.firm_term, r.i_star, 1e-9);
        ASSERT_NEAR(r.i_star, std::log10(r.i_value), 1e-12 * std::max(1.0, std::abs(r.i_star)));
        const double oracle = testing::oracle_indicator(p, v).convert_to<double>();
        ASSERT_LE(std::abs(r.i_value - oracle) / oracle, 1e-12);
    }
}

TEST(IndicatorProperties, JointScalingOfValueAndCapital) {
    ValidInputGenerator gen(7);
    for (int i = 0; i < 200; ++i) {
        const auto p = gen.profile();
        const auto v = gen.valuation();
        // power-of-two scale keeps the ratio bit-identical
        const FirmValuation scaled{v.enterprise_value * 1024.0, v.common_stock * 1024.0};
        ASSERT_EQ(compute_indicator(p, v).i_value, compute_indicator(p, scaled).i_value);
    }
}

}  // namespace
}  // namespace entryrisk
