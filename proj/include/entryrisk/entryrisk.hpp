#pragma once

#include "entryrisk/date.hpp"
#include "entryrisk/errors.hpp"
#include "entryrisk/forecast.hpp"
#include "entryrisk/indicator.hpp"
#include "entryrisk/market_data.hpp"
#include "entryrisk/report.hpp"
#include "entryrisk/scenario_config.hpp"
#include "entryrisk/series.hpp"
#include "entryrisk/strategy_grid.hpp"
