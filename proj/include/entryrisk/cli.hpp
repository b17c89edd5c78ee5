#pragma once

// Command-line front end. Exit codes: 0 ok, 2 usage/parse/config, 3 domain/coverage.

#include <array>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entryrisk/case_study.hpp"
#include "entryrisk/forecast.hpp"
#include "entryrisk/indicator.hpp"
#include "entryrisk/report.hpp"
#include "entryrisk/scenario_config.hpp"
#include "entryrisk/series.hpp"
#include "entryrisk/strategy_grid.hpp"

namespace entryrisk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

struct ForecastRequest {
    std::size_t window = 0;
    int horizon = 0;
    CalendarStep step{1, StepUnit::Day};
    ForecastMethod method = ForecastMethod::Linear;
};

/// Parses `window=W horizon=H [step=1y] [method=linear|hold-last]`.
inline ForecastRequest parse_forecast_request(const std::vector<std::string>& tokens) {
    ForecastRequest req;
    bool have_window = false;
    bool have_horizon = false;
    for (const auto& token : tokens) {
        auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw ParseError(0, "--forecast expects key=value, got '" + token + "'");
        }
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "window") {
            auto w = parse_integer(value);
            if (!w || *w < 2) {
                throw ParseError(0, "--forecast window must be an integer >= 2");
            }
            req.window = static_cast<std::size_t>(*w);
            have_window = true;
        } else if (key == "horizon") {
            auto h = parse_integer(value);
            if (!h || *h < 1 || *h > 100000) {
                throw ParseError(0, "--forecast horizon must be a positive integer");
            }
            req.horizon = static_cast<int>(*h);
            have_horizon = true;
        } else if (key == "step") {
            req.step = parse_step(value);
        } else if (key == "method") {
            req.method = parse_forecast_method(value);
        } else {
            throw ParseError(0, "--forecast: unknown key '" + key + "'");
        }
    }
    if (!have_window || !have_horizon) {
        throw ParseError(0, "--forecast requires window= and horizon=");
    }
    return req;
}

namespace detail {

inline void print_strategy(std::ostream& out, const Classification& c) {
    const auto desc = describe(c.strategy);
    out << "strategy = " << to_string(c.strategy) << '\n';
    out << "environment = " << desc.environment << '\n';
    out << "entry strategy = " << desc.strategy << '\n';
}

inline void print_boundary_note(std::ostream& out, const Classification& c) {
    if (c.boundary_hit) {
        out << "note: I* lies on a grid boundary; lower-inclusive intervals assign it to " << to_string(c.strategy)
            << '\n';
    }
}

inline GridBoundaries grid_from(const std::vector<double>& cuts) {
    if (cuts.empty()) {
        return {};
    }
    return GridBoundaries({cuts[0], cuts[1], cuts[2], cuts[3]});
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw ConfigError(path + ": cannot open for writing");
    }
    f << content;
    if (!f) {
        throw ConfigError(path + ": write failed");
    }
}

struct ScenarioRun {
    ScenarioConfig config;
    IndicatorSeries series;
};

inline ScenarioRun run_scenario(const std::string& config_path) {
    ScenarioRun run;
    run.config = load_scenario_file(config_path);
    PriceSeries prices = load_price_file(resolve_prices_path(config_path, run.config));
    run.series = build_series(run.config, prices);
    return run;
}

}  // namespace detail

struct ComputeArgs {
    MacroProfile profile;
    FirmValuation valuation;
};

inline int cmd_compute(const ComputeArgs& args, std::ostream& out) {
    const IndicatorResult r = compute_indicator(args.profile, args.valuation);
    const Classification c = classify_detailed(r.i_star);
    out << "I = " << format_fixed(r.i_value, kIndicatorDecimals) << '\n';
    out << "I* = " << format_fixed(r.i_star, kIndicatorDecimals) << '\n';
    out << "country term = " << format_fixed(r.country_term, kIndicatorDecimals) << '\n';
    out << "firm term = " << format_fixed(r.firm_term, kIndicatorDecimals) << '\n';
    out << "monetary ratio = " << format_fixed(r.monetary_ratio, kIndicatorDecimals) << '\n';
    out << "growth ratio = " << format_fixed(r.growth_ratio, kIndicatorDecimals) << '\n';
    out << "valuation ratio = " << format_shortest(r.valuation_ratio) << '\n';
    out << "valuation health = " << to_string(valuation_health(args.valuation)) << '\n';
    if (r.warnings.empty()) {
        out << "warnings = none\n";
    } else {
        for (const auto& w : r.warnings) {
            out << "warning = " << w.code << ": " << w.message << '\n';
        }
    }
    detail::print_strategy(out, c);
    detail::print_boundary_note(out, c);
    if (auto note = case_study::discrepancy_note(args.profile, args.valuation)) {
        out << *note << '\n';
    }
    return kExitOk;
}

inline int cmd_classify(double i_star, const GridBoundaries& grid, std::ostream& out) {
    const Classification c = classify_detailed(i_star, grid);
    out << "I* = " << format_fixed(i_star, kIndicatorDecimals) << '\n';
    detail::print_strategy(out, c);
    detail::print_boundary_note(out, c);
    return kExitOk;
}

inline int cmd_series(const std::string& config_path, const std::string& csv_path, const std::string& json_path,
                      const std::optional<ForecastRequest>& request, std::ostream& out) {
    auto run = detail::run_scenario(config_path);
    std::optional<ForecastResult> fc;
    if (request) {
        fc = forecast(run.series, request->window, request->horizon, request->step, request->method);
    }
    std::ostringstream csv;
    write_series_csv(csv, run.series);
    const std::string summary = dump_json(summary_to_json(run.config, run.series, fc));
    detail::write_file(csv_path, csv.str());
    detail::write_file(json_path, summary);
    out << "wrote " << run.series.size() << " rows to " << csv_path << " and summary to " << json_path << '\n';
    return kExitOk;
}

inline int cmd_forecast(const std::string& config_path, const ForecastRequest& request,
                        const std::string& json_path, std::ostream& out) {
    auto run = detail::run_scenario(config_path);
    const auto fc = forecast(run.series, request.window, request.horizon, request.step, request.method);
    const std::string text = dump_json(forecast_to_json(fc));
    if (json_path.empty()) {
        out << text;
    } else {
        detail::write_file(json_path, text);
    }
    return kExitOk;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Market-entry risk indicator: compute, classify, evaluate series, forecast", "entryrisk"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "Indicator I, I* and entry strategy for one set of inputs");
    compute->add_option("--n", compute_args.profile.n_rating, "country-risk rating N [1,10]")->required();
    compute->add_option("--f", compute_args.profile.f_compat, "compatibility score F [0.1,100]")->required();
    compute->add_option("--ri-target", compute_args.profile.ri_target, "target-market inflation (fraction)")->required();
    compute->add_option("--ri-origin", compute_args.profile.ri_origin, "origin-country inflation (fraction)")->required();
    compute->add_option("--rce-target", compute_args.profile.rce_target, "target-country growth (fraction)")->required();
    compute->add_option("--rce-origin", compute_args.profile.rce_origin, "origin-country growth (fraction)")->required();
    compute->add_option("--value", compute_args.valuation.enterprise_value, "enterprise value V")->required();
    compute->add_option("--capital", compute_args.valuation.common_stock, "common stock CS")->required();

    double i_star = 0.0;
    std::vector<double> cuts;
    auto* classify_cmd = app.add_subcommand("classify", "Entry strategy for an I* value");
    classify_cmd->add_option("--i-star", i_star, "I* = lg I")->required();
    classify_cmd->add_option("--boundaries", cuts, "four ascending grid cuts (default 0 1.6 2 5)")->expected(4);

    std::string config_path;
    std::string csv_path;
    std::string json_path;
    std::vector<std::string> forecast_tokens;
    auto* series_cmd = app.add_subcommand("series", "Evaluate a scenario over its price file");
    series_cmd->add_option("--config", config_path, "scenario JSON")->required();
    series_cmd->add_option("--csv", csv_path, "output series CSV")->required();
    series_cmd->add_option("--json", json_path, "output summary JSON")->required();
    series_cmd->add_option("--forecast", forecast_tokens, "window=W horizon=H [step=1y] [method=linear|hold-last]")
        ->expected(1, 4);

    ForecastRequest fc_request;
    std::string step_text = "1d";
    std::string method_text = "linear";
    std::string fc_json_path;
    auto* forecast_cmd = app.add_subcommand("forecast", "Extrapolate the I* series of a scenario");
    forecast_cmd->add_option("--config", config_path, "scenario JSON")->required();
    forecast_cmd->add_option("--window", fc_request.window, "trailing points used")->required();
    forecast_cmd->add_option("--horizon", fc_request.horizon, "number of predicted points")->required();
    forecast_cmd->add_option("--step", step_text, "spacing of predictions, e.g. 1y, 6m, 2w, 30d");
    forecast_cmd->add_option("--method", method_text, "linear or hold-last");
    forecast_cmd->add_option("--json", fc_json_path, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(compute_args, out);
        }
        if (classify_cmd->parsed()) {
            if (!std::isfinite(i_star)) {
                err << "error: --i-star must be a finite number\n";
                return kExitUsage;
            }
            GridBoundaries grid;
            try {
                grid = detail::grid_from(cuts);
            } catch (const DomainError& e) {
                err << "error: --boundaries: " << e.what() << '\n';
                return kExitUsage;
            }
            return cmd_classify(i_star, grid, out);
        }
        if (series_cmd->parsed()) {
            std::optional<ForecastRequest> request;
            if (!forecast_tokens.empty()) {
                request = parse_forecast_request(forecast_tokens);
            }
            return cmd_series(config_path, csv_path, json_path, request, out);
        }
        if (forecast_cmd->parsed()) {
            if (fc_request.window < 2 || fc_request.horizon < 1) {
                err << "error: --window must be >= 2 and --horizon >= 1\n";
                return kExitUsage;
            }
            fc_request.step = parse_step(step_text);
            fc_request.method = parse_forecast_method(method_text);
            return cmd_forecast(config_path, fc_request, fc_json_path, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const CoverageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const MissingQuote& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ScheduleGap& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const InsufficientData& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace entryrisk::cli
