#pragma once

#include "json.hpp"
#include <string>

#include "rpq/asymptotics.hpp"
#include "rpq/kernel.hpp"
#include "rpq/report.hpp"
#include "rpq/series.hpp"

namespace rpq {

/// Kernel config document:
///   {"p": 1, "q": 0.5, "kernel": {"builtin": "difference"}}
///   {"p": 0.8, "q": 0.5, "kernel": {"laurent": [{"s": -1, "t": 0, "c": 1}, ...]}}
/// "builtin" is one of difference, jagannathan-srinivasa, q. The q kernel
/// fixes p = 1 and may omit it. Schema problems throw ConfigError; range
/// checks are left to build_context.
KernelSpec kernel_from_json(const nlohmann::json& doc);
KernelSpec parse_kernel_config(const std::string& text);

/// Series documents are arrays of [re, im] pairs indexed by degree.
TruncatedSeries series_from_json(const nlohmann::json& doc);
TruncatedSeries parse_series(const std::string& text);
nlohmann::json series_to_json(const TruncatedSeries& f);

nlohmann::json report_to_json(const BoundCheckReport& report);
nlohmann::json fit_to_json(const AsymptoticFit& fit);

/// JSON cannot carry infinities; they are written as the strings "inf"/"-inf".
nlohmann::json number_to_json(double value);

}  // namespace rpq
