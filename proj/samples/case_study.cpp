// Evaluates the two 2007 Electroputere dates and a 2008-2009 style downgrade
// (N 7 -> 5) on the same valuation, then extrapolates the two-point trend.

#include <iostream>
#include <vector>

#include "entryrisk/case_study.hpp"
#include "entryrisk/entryrisk.hpp"

int main() {
    using namespace entryrisk;
    namespace cs = entryrisk::case_study;

    const std::vector<std::pair<const char*, double>> quotes = {{"2007-06-01", cs::kPriceJune1},
                                                                {"2007-11-06", cs::kPriceNov6}};
    std::vector<Observation> observations;
    for (const auto& [date, price] : quotes) {
        const double v = market_value(price, cs::kSharesOutstanding2007);
        const auto r = compute_indicator(cs::kProfile2007, {v, cs::kCommonStock2007});
        std::cout << date << "  V=" << format_lei(v) << "  I=" << format_fixed(r.i_value, 6)
                  << "  I*=" << format_fixed(r.i_star, 6) << "  " << to_string(classify(r.i_star)) << '\n';
        observations.push_back({parse_date(date), r.i_star});
    }

    MacroProfile downgraded = cs::kProfile2007;
    downgraded.n_rating = 5.0;
    const auto r = compute_indicator(downgraded, {market_value(cs::kPriceNov6, cs::kSharesOutstanding2007),
                                                  cs::kCommonStock2007});
    std::cout << "N=5 on 2007-11-06 valuation: I*=" << format_fixed(r.i_star, 6) << "  "
              << to_string(classify(r.i_star)) << '\n';

    const auto fc = forecast(std::span<const Observation>(observations), 2, 4, parse_step("1y"));
    for (const auto& p : fc.horizon_points) {
        std::cout << "trend " << format_date(p.date) << "  I*=" << format_fixed(p.i_star, 6) << '\n';
    }
}
