#pragma once

// Test-only reference evaluation of the indicator product in 50-digit arithmetic.
// Shares nothing with the library beyond the input structs.

#include <random>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "entryrisk/indicator.hpp"

namespace entryrisk::testing {

using Wide = boost::multiprecision::cpp_bin_float_50;
using WideDec = boost::multiprecision::cpp_dec_float_50;

/// Exact double inputs, product carried at 50 significant digits.
inline Wide oracle_indicator(const MacroProfile& p, const FirmValuation& v) {
    const Wide one = 1;
    return Wide(p.n_rating) * Wide(p.f_compat) * ((one + Wide(p.ri_target)) / (one + Wide(p.ri_origin))) *
           ((one + Wide(p.rce_target)) / (one + Wide(p.rce_origin))) *
           (Wide(v.enterprise_value) / Wide(v.common_stock));
}

/// Same product over decimal literals, so printed inputs are taken exactly.
inline WideDec oracle_indicator_decimal(const std::string& n, const std::string& f, const std::string& ri_t,
                                        const std::string& ri_o, const std::string& rce_t, const std::string& rce_o,
                                        const std::string& value, const std::string& capital) {
    const WideDec one = 1;
    return WideDec(n) * WideDec(f) * ((one + WideDec(ri_t)) / (one + WideDec(ri_o))) *
           ((one + WideDec(rce_t)) / (one + WideDec(rce_o))) * (WideDec(value) / WideDec(capital));
}

/// Random inputs inside every hard and soft range.
struct ValidInputGenerator {
    std::mt19937_64 rng;

    explicit ValidInputGenerator(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

    MacroProfile profile() {
        return {uniform(1.0, 10.0), uniform(0.1, 100.0), uniform(-0.2, 0.5),
                uniform(-0.2, 0.5), uniform(-0.3, 0.3), uniform(-0.3, 0.3)};
    }

    FirmValuation valuation() {
        const double cs = std::exp(uniform(std::log(1e3), std::log(1e10)));
        return {cs * std::exp(uniform(std::log(0.01), std::log(100.0))), cs};
    }
};

}  // namespace entryrisk::testing
