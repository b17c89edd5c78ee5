#include <gtest/gtest.h>

#include "entryrisk/strategy_grid.hpp"

namespace entryrisk {
namespace {

TEST(Classify, CaseStudyValuesAreAcquisition) {
    EXPECT_EQ(classify(0.641672373), StrategyClass::Acquisition);
    EXPECT_EQ(classify(1.31992804), StrategyClass::Acquisition);
}

TEST(Classify, InteriorAndBoundaryPoints) {
    EXPECT_EQ(classify(-0.25), StrategyClass::GreenfieldInvestment);
    EXPECT_EQ(classify(0.0), StrategyClass::Acquisition);
    EXPECT_EQ(classify(1.6), StrategyClass::MergerAcquisition);
    EXPECT_EQ(classify(2.0), StrategyClass::Cooperation);
    EXPECT_EQ(classify(5.0), StrategyClass::Export);
    EXPECT_EQ(classify(std::nextafter(1.6, 0.0)), StrategyClass::Acquisition);
    EXPECT_EQ(classify(std::nextafter(0.0, -1.0)), StrategyClass::GreenfieldInvestment);
}

TEST(Classify, BoundaryHitFlag) {
    EXPECT_TRUE(classify_detailed(5.0).boundary_hit);
    EXPECT_TRUE(classify_detailed(1.6 + 5e-13).boundary_hit);
    EXPECT_FALSE(classify_detailed(1.6 + 1e-9).boundary_hit);
    EXPECT_FALSE(classify_detailed(0.641672373).boundary_hit);
}

TEST(Classify, NonFiniteRejected) {
    EXPECT_THROW(classify(std::numeric_limits<double>::quiet_NaN()), DomainError);
    EXPECT_THROW(classify(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(Classify, MidpointRoundTrip) {
    const GridBoundaries grid;
    const auto& c = grid.cuts();
    const double mids[] = {c[0] - 1.0, (c[0] + c[1]) / 2, (c[1] + c[2]) / 2, (c[2] + c[3]) / 2, c[3] + 1.0};
    for (std::size_t i = 0; i < kAllStrategies.size(); ++i) {
        EXPECT_EQ(classify(mids[i], grid), kAllStrategies[i]);
    }
}

TEST(Classify, CustomBoundaries) {
    const GridBoundaries grid({-1.0, 1.0, 3.0, 4.0});
    EXPECT_EQ(classify(-0.5, grid), StrategyClass::Acquisition);
    EXPECT_EQ(classify(3.5, grid), StrategyClass::Cooperation);
    EXPECT_THROW(GridBoundaries({0.0, 2.0, 1.6, 5.0}), DomainError);
    EXPECT_THROW(GridBoundaries({0.0, 0.0, 1.6, 5.0}), DomainError);
}

TEST(Describe, TableWording) {
    const auto coop = describe(StrategyClass::Cooperation);
    EXPECT_NE(coop.environment.find("environment favourable for economic cooperation"), std::string_view::npos);
    EXPECT_EQ(coop.strategy, "licensing, franchising, strategic alliances, management contract");
    EXPECT_EQ(describe(StrategyClass::Export).strategy, "export");
    EXPECT_NE(describe(StrategyClass::Export).environment.find("favourable for trading operations"),
              std::string_view::npos);
    EXPECT_EQ(describe(StrategyClass::GreenfieldInvestment).strategy, "direct greenfield investment");
    EXPECT_EQ(describe(StrategyClass::Acquisition).strategy, "acquisition");
    EXPECT_EQ(describe(StrategyClass::MergerAcquisition).strategy, "mergers, acquisitions");
}

TEST(StrategyNames, RoundTrip) {
    for (auto s : kAllStrategies) {
        EXPECT_EQ(strategy_from_string(to_string(s)), s);
    }
    EXPECT_FALSE(strategy_from_string("Licensing"));
}

}  // namespace
}  // namespace entryrisk
