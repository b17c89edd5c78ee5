#pragma once

// JSON scenario documents:
//
// {"segments":[{"start":"YYYY-MM-DD","end":"YYYY-MM-DD"|null,
//               "profile":{"n":..,"f":..,"ri_target":..,"ri_origin":..,"rce_target":..,"rce_origin":..}}],
//  "shares":[{"effective":"YYYY-MM-DD","value":<integer>}],
//  "common_stock":[{"effective":"YYYY-MM-DD","value":<number>}],
//  "prices":"path.csv",
//  "grid":[c0,c1,c2,c3]}            <- optional
//
// Unknown keys are rejected at every level. Profile fields have no defaults.

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <type_traits>

#include <json.hpp>

#include "entryrisk/date.hpp"
#include "entryrisk/errors.hpp"
#include "entryrisk/series.hpp"

namespace entryrisk {

using Json = nlohmann::ordered_json;

namespace detail {

inline void require_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) {
        throw ConfigError(path + ": expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            throw ConfigError(path + ": unknown key '" + key + "'");
        }
    }
}

inline const Json& require_key(const Json& j, const std::string& path, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ConfigError(path + ": missing required key '" + key + "'");
    }
    return *it;
}

inline double require_number(const Json& j, const std::string& path, const char* key) {
    const Json& v = require_key(j, path, key);
    if (v.is_null()) {
        throw ConfigError(path + "." + key + ": must be set explicitly (no default)");
    }
    if (!v.is_number()) {
        throw ConfigError(path + "." + key + ": expected a number");
    }
    return v.get<double>();
}

inline Date require_date(const Json& j, const std::string& path, const char* key) {
    const Json& v = require_key(j, path, key);
    if (!v.is_string()) {
        throw ConfigError(path + "." + key + ": expected a YYYY-MM-DD string");
    }
    auto d = try_parse_date(v.get<std::string>());
    if (!d) {
        throw ConfigError(path + "." + key + ": invalid date '" + v.get<std::string>() + "'");
    }
    return *d;
}

inline MacroProfile profile_from_json(const Json& j, const std::string& path) {
    require_object(j, path, {"n", "f", "ri_target", "ri_origin", "rce_target", "rce_origin"});
    MacroProfile p;
    p.n_rating = require_number(j, path, "n");
    p.f_compat = require_number(j, path, "f");
    p.ri_target = require_number(j, path, "ri_target");
    p.ri_origin = require_number(j, path, "ri_origin");
    p.rce_target = require_number(j, path, "rce_target");
    p.rce_origin = require_number(j, path, "rce_origin");
    auto issues = validate_profile(p);
    for (const auto& issue : issues) {
        if (issue.is_violation()) {
            throw ConfigError(path + ": " + issue.message);
        }
    }
    return p;
}

template <typename Value>
EffectiveSchedule<Value> schedule_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError(path + ": expected a non-empty array");
    }
    std::vector<typename EffectiveSchedule<Value>::Entry> entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string item = path + "[" + std::to_string(i) + "]";
        require_object(j[i], item, {"effective", "value"});
        Date effective = require_date(j[i], item, "effective");
        const Json& v = require_key(j[i], item, "value");
        Value value{};
        if constexpr (std::is_integral_v<Value>) {
            if (!v.is_number_integer()) {
                throw ConfigError(item + ".value: expected an integer share count");
            }
            value = v.get<Value>();
        } else {
            if (!v.is_number()) {
                throw ConfigError(item + ".value: expected a number");
            }
            value = v.get<Value>();
        }
        entries.push_back({effective, value});
    }
    try {
        return EffectiveSchedule<Value>(std::move(entries));
    } catch (const DomainError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

}  // namespace detail

inline ScenarioConfig scenario_from_json(const Json& j) {
    detail::require_object(j, "config", {"segments", "shares", "common_stock", "prices", "grid"});
    ScenarioConfig config;

    const Json& segs = detail::require_key(j, "config", "segments");
    if (!segs.is_array()) {
        throw ConfigError("segments: expected an array");
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const std::string path = "segments[" + std::to_string(i) + "]";
        detail::require_object(segs[i], path, {"start", "end", "profile"});
        MacroSegment seg;
        seg.start = detail::require_date(segs[i], path, "start");
        if (auto it = segs[i].find("end"); it != segs[i].end() && !it->is_null()) {
            seg.end = detail::require_date(segs[i], path, "end");
        }
        seg.profile = detail::profile_from_json(detail::require_key(segs[i], path, "profile"), path + ".profile");
        config.segments.push_back(seg);
    }
    validate_segments(config.segments);

    config.shares_schedule =
        detail::schedule_from_json<std::int64_t>(detail::require_key(j, "config", "shares"), "shares");
    config.common_stock_schedule =
        detail::schedule_from_json<double>(detail::require_key(j, "config", "common_stock"), "common_stock");

    const Json& prices = detail::require_key(j, "config", "prices");
    if (!prices.is_string() || prices.get<std::string>().empty()) {
        throw ConfigError("prices: expected a non-empty path string");
    }
    config.price_csv_path = prices.get<std::string>();

    if (auto it = j.find("grid"); it != j.end()) {
        if (!it->is_array() || it->size() != 4) {
            throw ConfigError("grid: expected an array of four ascending numbers");
        }
        std::array<double, 4> cuts{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (!(*it)[i].is_number()) {
                throw ConfigError("grid[" + std::to_string(i) + "]: expected a number");
            }
            cuts[i] = (*it)[i].get<double>();
        }
        try {
            config.grid = GridBoundaries(cuts);
        } catch (const DomainError& e) {
            throw ConfigError(std::string("grid: ") + e.what());
        }
    }
    return config;
}

inline Json profile_to_json(const MacroProfile& p) {
    return Json{{"n", p.n_rating},          {"f", p.f_compat},
                {"ri_target", p.ri_target}, {"ri_origin", p.ri_origin},
                {"rce_target", p.rce_target}, {"rce_origin", p.rce_origin}};
}

inline Json scenario_to_json(const ScenarioConfig& config) {
    Json j = Json::object();
    Json segs = Json::array();
    for (const auto& s : config.segments) {
        segs.push_back(Json{{"start", format_date(s.start)},
                            {"end", s.end ? Json(format_date(*s.end)) : Json(nullptr)},
                            {"profile", profile_to_json(s.profile)}});
    }
    j["segments"] = std::move(segs);
    Json shares = Json::array();
    for (const auto& e : config.shares_schedule.entries()) {
        shares.push_back(Json{{"effective", format_date(e.effective)}, {"value", e.value}});
    }
    j["shares"] = std::move(shares);
    Json cs = Json::array();
    for (const auto& e : config.common_stock_schedule.entries()) {
        cs.push_back(Json{{"effective", format_date(e.effective)}, {"value", e.value}});
    }
    j["common_stock"] = std::move(cs);
    j["prices"] = config.price_csv_path;
    if (config.grid != GridBoundaries{}) {
        const auto& c = config.grid.cuts();
        j["grid"] = Json::array({c[0], c[1], c[2], c[3]});
    }
    return j;
}

/// Loads and validates a scenario file. Errors carry the file name (and line/column for syntax errors).
inline ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path.string() + ": cannot open scenario file");
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    try {
        return scenario_from_json(j);
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

/// The price file named by `config`, relative paths taken against the scenario file's directory.
inline std::filesystem::path resolve_prices_path(const std::filesystem::path& scenario_path,
                                                 const ScenarioConfig& config) {
    std::filesystem::path prices = config.price_csv_path;
    if (prices.is_relative()) {
        prices = scenario_path.parent_path() / prices;
    }
    return prices;
}

inline PriceSeries load_price_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open price file", path.string());
    }
    try {
        return parse_price_csv(in);
    } catch (const DuplicateDate& e) {
        throw DuplicateDate(e.line(), e.reason(), path.string());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.reason(), path.string());
    }
}

}  // namespace entryrisk
