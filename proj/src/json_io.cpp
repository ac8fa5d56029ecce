#include "rpq/json_io.hpp"

#include <cmath>

#include "rpq/error.hpp"

namespace rpq {

using nlohmann::json;

namespace {

double require_number(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number()) {
    throw Error(ErrorCode::ConfigError, std::string("field \"") + key + "\" must be a number");
  }
  return doc.at(key).get<double>();
}

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
    throw Error(ErrorCode::ConfigError, std::string("field \"") + key + "\" must be an integer");
  }
  return doc.at(key).get<int>();
}

}  // namespace

KernelSpec kernel_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("kernel") || !doc.at("kernel").is_object()) {
    throw Error(ErrorCode::ConfigError, "config needs an object field \"kernel\"");
  }
  const json& kernel = doc.at("kernel");
  const double q = require_number(doc, "q");

  if (kernel.contains("builtin")) {
    if (!kernel.at("builtin").is_string()) {
      throw Error(ErrorCode::ConfigError, "\"builtin\" must be a string");
    }
    const auto name = kernel.at("builtin").get<std::string>();
    if (name == "q") {
      KernelSpec spec = KernelSpec::q_number(q);
      if (doc.contains("p")) {
        spec.p = require_number(doc, "p");
      }
      return spec;
    }
    const double p = require_number(doc, "p");
    if (name == "difference") {
      return KernelSpec::difference(p, q);
    }
    if (name == "jagannathan-srinivasa") {
      return KernelSpec::jagannathan_srinivasa(p, q);
    }
    throw Error(ErrorCode::ConfigError, "unknown builtin kernel \"" + name + "\"");
  }

  if (kernel.contains("laurent")) {
    const json& terms = kernel.at("laurent");
    if (!terms.is_array()) {
      throw Error(ErrorCode::ConfigError, "\"laurent\" must be an array");
    }
    std::vector<LaurentTerm> parsed;
    for (const json& term : terms) {
      if (!term.is_object()) {
        throw Error(ErrorCode::ConfigError, "Laurent terms must be objects {s, t, c}");
      }
      parsed.push_back(LaurentTerm{require_int(term, "s"), require_int(term, "t"), require_number(term, "c")});
    }
    return KernelSpec::laurent(require_number(doc, "p"), q, std::move(parsed));
  }

  throw Error(ErrorCode::ConfigError, "\"kernel\" needs either \"builtin\" or \"laurent\"");
}

KernelSpec parse_kernel_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, std::string("kernel config is not JSON: ") + e.what());
  }
  return kernel_from_json(doc);
}

TruncatedSeries series_from_json(const json& doc) {
  if (!doc.is_array() || doc.empty()) {
    throw Error(ErrorCode::ConfigError, "series must be a nonempty array of [re, im] pairs");
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(doc.size());
  for (const json& pair : doc) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw Error(ErrorCode::ConfigError, "series entries must be [re, im] number pairs");
    }
    coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries parse_series(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, std::string("series is not JSON: ") + e.what());
  }
  return series_from_json(doc);
}

json series_to_json(const TruncatedSeries& f) {
  json out = json::array();
  for (const Complex c : f.coeffs()) {
    out.push_back(json::array({c.real(), c.imag()}));
  }
  return out;
}

json number_to_json(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  return value;
}

json report_to_json(const BoundCheckReport& report) {
  json out;
  out["passed"] = report.passed();
  out["status"] = std::string(to_string(report.verdict));
  out["worst_margin"] = number_to_json(report.worst_margin);
  out["witness"] = report.witness;
  out["trials"] = report.trials;
  if (report.gate) {
    out["gate_lhs"] = number_to_json(report.gate->lhs);
    out["gate_rhs"] = number_to_json(report.gate->rhs);
    out["gate_passed"] = report.gate->passed;
  }
  if (!report.note.empty()) {
    out["note"] = report.note;
  }
  return out;
}

json fit_to_json(const AsymptoticFit& fit) {
  json out;
  out["alpha"] = fit.alpha_hat;
  out["beta"] = fit.beta_hat;
  out["intercept"] = fit.intercept_hat;
  out["max_abs_residual"] = fit.max_abs_residual;
  out["regime"] = std::string(to_string(fit.regime));
  out["lambda"] = fit.lambda_hat;
  out["window"] = json::array({fit.window.first, fit.window.last});
  return out;
}

}  // namespace rpq
