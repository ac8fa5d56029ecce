#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rpq/asymptotics.hpp"
#include "rpq/error.hpp"
#include "rpq/format.hpp"
#include "rpq/gamma.hpp"
#include "rpq/json_io.hpp"
#include "rpq/kernel.hpp"
#include "rpq/norms.hpp"
#include "rpq/numbers.hpp"
#include "rpq/random.hpp"
#include "rpq/sectors.hpp"
#include "rpq/series.hpp"

namespace rpq::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string kernel_file;
  int order_cap = 64;
  std::uint64_t seed = 0;
  std::string format = "csv";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ConfigError, "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

KWindow parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigError, "expected a range like 0..4, got \"" + text + "\"");
  }
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      return {std::stod(text), 0.0};
    }
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigError, "expected a complex number like 0.5,-1, got \"" + text + "\"");
  }
}

std::string fmt(double v) { return format_double(v); }

int exit_for(const BoundCheckReport& report) {
  switch (report.verdict) {
    case Verdict::Passed: return kSuccess;
    case Verdict::Failed: return kCheckFailed;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kCheckFailed;
}

int emit_report(std::ostream& out, const BoundCheckReport& report) {
  out << report_to_json(report).dump(2) << '\n';
  return exit_for(report);
}

void emit_scalar(std::ostream& out, const std::string& format, const std::string& name, double value) {
  if (format == "json") {
    out << json{{name, number_to_json(value)}}.dump(2) << '\n';
  } else {
    out << name << '\n' << fmt(value) << '\n';
  }
}

DeformedContext load_context(const CommonOptions& common, int needed_cap) {
  const KernelSpec spec = parse_kernel_config(read_file(common.kernel_file));
  return build_context(spec, std::max(common.order_cap, needed_cap));
}

std::optional<TruncatedSeries> load_series(const std::string& path) {
  if (path.empty()) {
    return std::nullopt;
  }
  return parse_series(read_file(path));
}

SectorSpec make_sector(const std::string& mode, double theta, double omega) {
  SectorSpec spec;
  spec.theta = theta;
  spec.omega = omega;
  if (mode == "sup") {
    spec.rho_mode = RhoMode::Sup;
  } else if (mode == "per-index") {
    spec.rho_mode = RhoMode::PerIndex;
  } else if (mode == "fixed-omega") {
    spec.rho_mode = RhoMode::FixedOmega;
  } else {
    throw Error(ErrorCode::ConfigError, "sector mode must be sup, per-index or fixed-omega");
  }
  return spec;
}

void add_common(CLI::App* sub, CommonOptions& common, bool with_format) {
  sub->add_option("--kernel", common.kernel_file, "Kernel config JSON")->required();
  sub->add_option("--order-cap", common.order_cap, "Cached order (raised automatically when needed)");
  sub->add_option("--seed", common.seed, "Random seed");
  if (with_format) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }
}

int cmd_numbers(const CommonOptions& common, const std::string& range, std::ostream& out) {
  const KWindow window = parse_range(range);
  if (window.first < 0 || window.last < window.first) {
    throw Error(ErrorCode::ConfigError, "bad index range " + range);
  }
  const DeformedContext ctx = load_context(common, window.last);

  json numbers = json::array();
  json binomials = json::array();
  std::ostringstream csv;
  csv << "n,number,log_number,factorial,log_factorial\n";
  for (int n = window.first; n <= window.last; ++n) {
    const LogQuantity number = deformed_number(ctx, n);
    const LogQuantity factorial = deformed_factorial(ctx, n);
    csv << n << ',' << fmt(number.value()) << ',' << fmt(number.log_value()) << ',' << fmt(factorial.value())
        << ',' << fmt(factorial.log_value()) << '\n';
    numbers.push_back({{"n", n},
                       {"number", number.value()},
                       {"log_number", number_to_json(number.log_value())},
                       {"factorial", factorial.value()},
                       {"log_factorial", factorial.log_value()}});
  }
  csv << "\nm,k,binomial,log_binomial\n";
  for (int m = window.first; m <= window.last; ++m) {
    for (int k = 0; k <= m; ++k) {
      const LogQuantity b = deformed_binomial(ctx, m, k);
      csv << m << ',' << k << ',' << fmt(b.value()) << ',' << fmt(b.log_value()) << '\n';
      binomials.push_back({{"m", m}, {"k", k}, {"binomial", b.value()}, {"log_binomial", b.log_value()}});
    }
  }
  if (common.format == "json") {
    out << json{{"numbers", numbers}, {"binomials", binomials}}.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return kSuccess;
}

int cmd_gamma(const CommonOptions& common, const std::vector<double>& xs, bool integer_only, std::ostream& out) {
  double largest = 1.0;
  for (const double x : xs) {
    largest = std::max(largest, x);
  }
  const DeformedContext ctx = load_context(common, static_cast<int>(std::ceil(largest)));
  const GammaConfig cfg{ctx, integer_only ? GammaBaseMode::IntegerOnly : GammaBaseMode::Interpolated};

  json rows = json::array();
  std::ostringstream csv;
  csv << "x,gamma_log\n";
  for (const double x : xs) {
    const double g = gamma_log(cfg, x);
    csv << fmt(x) << ',' << fmt(g) << '\n';
    rows.push_back({{"x", x}, {"gamma_log", g}});
  }
  out << (common.format == "json" ? rows.dump(2) + "\n" : csv.str());
  return kSuccess;
}

int cmd_stirling(const CommonOptions& common, double alpha, double beta, const std::string& range,
                 std::ostream& out, std::ostream& err) {
  const KWindow window = parse_range(range);
  const int needed = std::max(window.last, static_cast<int>(std::ceil(alpha * window.last + beta)));
  const DeformedContext ctx = load_context(common, needed);
  const GammaConfig cfg{ctx};
  const StirlingDiagnostic diag = stirling_diagnostic(cfg, alpha, beta, window);

  if (common.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < diag.residuals.size(); ++i) {
      rows.push_back({{"k", window.first + static_cast<int>(i)},
                      {"z_k", diag.z[i]},
                      {"gamma_log", diag.gamma_logs[i]},
                      {"log_lattice_k", diag.log_lattice[i]},
                      {"D_k", diag.residuals[i]}});
    }
    out << json{{"rows", rows},
                {"stabilized", diag.stabilized},
                {"c_estimate", number_to_json(diag.c_estimate)}}
               .dump(2)
        << '\n';
  } else {
    out << "k,z_k,gamma_log,log_lattice_k,D_k\n";
    for (std::size_t i = 0; i < diag.residuals.size(); ++i) {
      out << window.first + static_cast<int>(i) << ',' << fmt(diag.z[i]) << ',' << fmt(diag.gamma_logs[i]) << ','
          << fmt(diag.log_lattice[i]) << ',' << fmt(diag.residuals[i]) << '\n';
    }
    err << "stabilized=" << (diag.stabilized ? "true" : "false") << " c_estimate=" << fmt(diag.c_estimate) << '\n';
  }
  return kSuccess;
}

int cmd_fit(const CommonOptions& common, const std::string& range, std::ostream& out) {
  const KWindow window = parse_range(range);
  const DeformedContext ctx = load_context(common, window.last);
  out << fit_to_json(fit_log_growth(ctx, window)).dump(2) << '\n';
  return kSuccess;
}

DerivativeMode parse_mode(const std::string& mode) {
  return mode == "canonical" ? DerivativeMode::Canonical : DerivativeMode::Composite;
}

int cmd_derive(const CommonOptions& common, const std::string& series_file, const std::string& mode,
               const std::string& out_file, std::ostream& out) {
  const TruncatedSeries f = *load_series(series_file);
  const DeformedContext ctx = load_context(common, f.order());
  const std::string doc = series_to_json(r_derivative(ctx, f, parse_mode(mode))).dump() + "\n";
  if (out_file.empty()) {
    out << doc;
  } else {
    std::ofstream file(out_file, std::ios::binary);
    if (!file) {
      throw Error(ErrorCode::ConfigError, "cannot write " + out_file);
    }
    file << doc;
  }
  return kSuccess;
}

int cmd_radius(const CommonOptions& common, const std::string& series_file, const std::string& mode, int window,
               std::ostream& out) {
  const TruncatedSeries f = *load_series(series_file);
  const DeformedContext ctx = load_context(common, f.order());
  const double radius =
      cauchy_hadamard_radius(ctx, f, mode == "classical" ? RadiusMode::Classical : RadiusMode::Paper, window);
  emit_scalar(out, common.format, "radius", radius);
  return kSuccess;
}

int cmd_norm(const CommonOptions& common, const std::string& series_file, double r, std::ostream& out) {
  const TruncatedSeries f = *load_series(series_file);
  const DeformedContext ctx = load_context(common, f.order());
  emit_scalar(out, common.format, "norm", weighted_norm(ctx, f, r));
  return kSuccess;
}

// Runs `check` on the given series, or on `trials` random polynomials of
// order uniform in [1, max_order] when no series file is supplied.
BoundCheckReport series_or_trials(const std::optional<TruncatedSeries>& series, int trials, int max_order,
                                  std::uint64_t seed,
                                  const std::function<BoundCheckReport(const TruncatedSeries&)>& check) {
  if (series) {
    return check(*series);
  }
  if (trials < 1 || max_order < 1) {
    throw Error(ErrorCode::PreconditionViolated, "need --series or positive --trials and --max-order");
  }
  SeededRng rng(seed);
  BoundCheckReport total;
  for (int t = 0; t < trials; ++t) {
    const int order = rng.uniform_int(1, max_order);
    BoundCheckReport one = check(random_polynomial(rng, order));
    one.witness = "trial " + std::to_string(t) + " (order " + std::to_string(order) + "): " + one.witness;
    merge_into(total, one);
  }
  return total;
}

TruncatedSeries series_or_exponential(const std::optional<TruncatedSeries>& series, const DeformedContext& ctx,
                                      int exp_order) {
  if (series) {
    return *series;
  }
  return deformed_exponential(ctx, exp_order);
}

std::vector<Complex> parse_points(const std::vector<std::string>& texts) {
  if (texts.empty()) {
    throw Error(ErrorCode::ConfigError, "no --z points given");
  }
  std::vector<Complex> points;
  for (const auto& t : texts) {
    points.push_back(parse_complex(t));
  }
  return points;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for R(p,q)-deformed calculus"};
  app.require_subcommand(1);
  CommonOptions common;

  std::string range = "0..8";
  auto* numbers = app.add_subcommand("numbers", "Deformed numbers, factorials and binomials");
  add_common(numbers, common, true);
  numbers->add_option("--n", range, "Index range a..b");

  std::vector<double> xs;
  bool integer_only = false;
  auto* gamma = app.add_subcommand("gamma", "log Gamma_R at the given arguments");
  add_common(gamma, common, true);
  gamma->add_option("--x", xs, "Arguments")->required()->delimiter(',');
  gamma->add_flag("--integer-only", integer_only, "Reject non-integer arguments");

  double alpha_i = 1.0;
  double beta_i = 1.0;
  std::string k_range = "10..40";
  auto* stirling = app.add_subcommand("stirling", "Stirling-ratio residuals D_k");
  add_common(stirling, common, true);
  stirling->add_option("--alpha", alpha_i, "Drift slope alpha_i");
  stirling->add_option("--beta", beta_i, "Drift offset beta_i");
  stirling->add_option("--k", k_range, "Window a..b");

  std::string fit_range = "20..60";
  auto* fit = app.add_subcommand("fit", "Quadratic fit of log R(p^n, q^n)");
  add_common(fit, common, false);
  fit->add_option("--window", fit_range, "Window a..b");

  std::string series_file;
  std::string derive_mode = "composite";
  std::string out_file;
  auto* derive = app.add_subcommand("derive", "Apply the deformed derivative to a series file");
  add_common(derive, common, false);
  derive->add_option("--series", series_file, "Series JSON")->required();
  derive->add_option("--mode", derive_mode)->check(CLI::IsMember({"composite", "canonical"}));
  derive->add_option("--out", out_file, "Write the result here instead of stdout");

  std::string radius_mode = "paper";
  int tail_window = kDefaultTailWindow;
  auto* radius = app.add_subcommand("radius", "Cauchy-Hadamard radius estimate");
  add_common(radius, common, true);
  radius->add_option("--series", series_file, "Series JSON")->required();
  radius->add_option("--mode", radius_mode)->check(CLI::IsMember({"paper", "classical"}));
  radius->add_option("--window", tail_window, "Tail window length");

  double r = 1.0;
  auto* norm = app.add_subcommand("norm", "Weighted R(p,q)-norm");
  add_common(norm, common, true);
  norm->add_option("--series", series_file, "Series JSON")->required();
  norm->add_option("--r", r, "Weight radius");

  int trials = 500;
  int max_order = 32;
  auto* check_coef = app.add_subcommand("check-coef", "Coefficient (Cauchy) estimate");
  add_common(check_coef, common, false);
  check_coef->add_option("--series", series_file, "Series JSON (otherwise random trials)");
  check_coef->add_option("--r", r, "Weight radius");
  check_coef->add_option("--trials", trials);
  check_coef->add_option("--max-order", max_order);

  double rho_eval = 0.5;
  int samples = kDefaultCircleSamples;
  auto* check_sup = app.add_subcommand("check-sup", "Sup-on-disk estimate");
  add_common(check_sup, common, false);
  check_sup->add_option("--series", series_file, "Series JSON (otherwise random trials)");
  check_sup->add_option("--r", r, "Weight radius");
  check_sup->add_option("--rho-eval", rho_eval, "Evaluation radius");
  check_sup->add_option("--samples", samples, "Circle samples");
  check_sup->add_option("--trials", trials);
  check_sup->add_option("--max-order", max_order);

  double rho = 0.8;
  int order = 16;
  auto* check_opnorm = app.add_subcommand("check-opnorm", "Explicit operator-norm bound, difference kernel");
  add_common(check_opnorm, common, false);
  check_opnorm->add_option("--r", r, "Image radius");
  check_opnorm->add_option("--rho", rho, "Source radius");
  check_opnorm->add_option("--trials", trials);
  check_opnorm->add_option("--order", order);
  check_opnorm->add_option("--samples", samples, "Circle samples");

  double big_r = 3.0;
  double small_r = 2.0;
  int radial = 64;
  int angular = 64;
  int exp_order = 32;
  auto* check_bc = app.add_subcommand("check-bc", "Borel-Caratheodory inequality in deformed discs");
  add_common(check_bc, common, false);
  check_bc->add_option("--series", series_file, "Series JSON (otherwise the deformed exponential)");
  check_bc->add_option("--exp-order", exp_order, "Order of the deformed exponential");
  check_bc->add_option("--R", big_r, "Outer deformed radius");
  check_bc->add_option("--r", small_r, "Inner deformed radius");
  check_bc->add_option("--radial", radial);
  check_bc->add_option("--angular", angular);

  std::string sector_mode = "sup";
  double theta = 1.0;
  double omega = 1.0;
  GrowthEnvelope envelope{10.0, 1.0, 1.0};
  std::optional<double> bound_m;
  int pl_radial = 32;
  int pl_angular = 65;
  double max_radius = 1.0;
  auto* check_pl = app.add_subcommand("check-pl", "Phragmen-Lindelof interior bound on a truncated sector");
  add_common(check_pl, common, false);
  check_pl->add_option("--series", series_file, "Series JSON (otherwise the deformed exponential)");
  check_pl->add_option("--exp-order", exp_order, "Order of the deformed exponential");
  check_pl->add_option("--mode", sector_mode)->check(CLI::IsMember({"sup", "per-index", "fixed-omega"}));
  check_pl->add_option("--theta", theta);
  check_pl->add_option("--omega", omega);
  check_pl->add_option("--C", envelope.c, "Envelope constant C");
  check_pl->add_option("--A", envelope.a, "Envelope rate A");
  check_pl->add_option("--exponent", envelope.exponent, "Envelope growth order");
  check_pl->add_option("--M", bound_m, "Boundary bound (default: sampled boundary max)");
  check_pl->add_option("--radial", pl_radial);
  check_pl->add_option("--angular", pl_angular);
  check_pl->add_option("--max-radius", max_radius);

  std::vector<std::string> z_texts;
  auto* sector = app.add_subcommand("sector", "Sector membership of points");
  add_common(sector, common, true);
  sector->add_option("--z", z_texts, "Point re,im (repeatable)")->required();
  sector->add_option("--mode", sector_mode)->check(CLI::IsMember({"sup", "per-index", "fixed-omega"}));
  sector->add_option("--theta", theta);
  sector->add_option("--omega", omega);

  std::optional<double> disc_radius;
  auto* pseudonorm = app.add_subcommand("pseudonorm", "Deformed pseudo-norm of points");
  add_common(pseudonorm, common, true);
  pseudonorm->add_option("--z", z_texts, "Point re,im (repeatable)")->required();
  pseudonorm->add_option("--R", disc_radius, "Also report membership in the deformed disc of this radius");

  std::vector<const char*> argv{"rpq"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    const int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  if (numbers->parsed()) {
    return cmd_numbers(common, range, out);
  }
  if (gamma->parsed()) {
    return cmd_gamma(common, xs, integer_only, out);
  }
  if (stirling->parsed()) {
    return cmd_stirling(common, alpha_i, beta_i, k_range, out, err);
  }
  if (fit->parsed()) {
    return cmd_fit(common, fit_range, out);
  }
  if (derive->parsed()) {
    return cmd_derive(common, series_file, derive_mode, out_file, out);
  }
  if (radius->parsed()) {
    return cmd_radius(common, series_file, radius_mode, tail_window, out);
  }
  if (norm->parsed()) {
    return cmd_norm(common, series_file, r, out);
  }
  if (check_coef->parsed()) {
    const auto series = load_series(series_file);
    const DeformedContext ctx = load_context(common, series ? series->order() : max_order);
    return emit_report(out, series_or_trials(series, trials, max_order, common.seed, [&](const TruncatedSeries& f) {
                         return coefficient_bound_check(ctx, f, r);
                       }));
  }
  if (check_sup->parsed()) {
    const auto series = load_series(series_file);
    const DeformedContext ctx = load_context(common, series ? series->order() : max_order);
    return emit_report(out, series_or_trials(series, trials, max_order, common.seed, [&](const TruncatedSeries& f) {
                         return sup_disk_bound_check(ctx, f, r, rho_eval, samples);
                       }));
  }
  if (check_opnorm->parsed()) {
    const DeformedContext ctx = load_context(common, order);
    return emit_report(out, operator_norm_inequality_check(ctx, r, rho, trials, order, common.seed, samples));
  }
  if (check_bc->parsed()) {
    const auto series = load_series(series_file);
    const DeformedContext ctx = load_context(common, series ? 0 : exp_order);
    const TruncatedSeries f = series_or_exponential(series, ctx, exp_order);
    return emit_report(out, borel_caratheodory_check(ctx, f, big_r, small_r, PolarGrid{radial, angular, 1.0}));
  }
  if (check_pl->parsed()) {
    const auto series = load_series(series_file);
    const SectorSpec spec = make_sector(sector_mode, theta, omega);
    const int radius_cap = spec.rho_mode == RhoMode::PerIndex ? static_cast<int>(std::ceil(max_radius)) : 0;
    const DeformedContext ctx = load_context(common, std::max(radius_cap, series ? 0 : exp_order));
    const TruncatedSeries f = series_or_exponential(series, ctx, exp_order);
    const PolarGrid grid{pl_radial, pl_angular, max_radius};
    const double m = bound_m ? *bound_m : sampled_sector_boundary_max(ctx, spec, f, grid);
    return emit_report(out, pl_interior_check(ctx, spec, f, envelope, m, grid));
  }
  if (sector->parsed()) {
    const SectorSpec spec = make_sector(sector_mode, theta, omega);
    const std::vector<Complex> points = parse_points(z_texts);
    int needed = 0;
    for (const Complex z : points) {
      needed = std::max(needed, static_cast<int>(std::ceil(std::abs(z))));
    }
    const DeformedContext ctx = load_context(common, spec.rho_mode == RhoMode::PerIndex ? needed : 0);
    json rows = json::array();
    std::ostringstream csv;
    csv << "re,im,inside,rate_positive,half_opening\n";
    for (const Complex z : points) {
      const SectorMembership m = sector_membership(ctx, spec, z);
      csv << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << (m.inside ? "true" : "false") << ','
          << (m.rate_positive ? "true" : "false") << ',' << fmt(m.half_opening) << '\n';
      rows.push_back({{"re", z.real()},
                      {"im", z.imag()},
                      {"inside", m.inside},
                      {"rate_positive", m.rate_positive},
                      {"half_opening", m.half_opening}});
    }
    out << (common.format == "json" ? rows.dump(2) + "\n" : csv.str());
    return kSuccess;
  }
  if (pseudonorm->parsed()) {
    const std::vector<Complex> points = parse_points(z_texts);
    const DeformedContext ctx = load_context(common, 0);
    const DeformedPseudonorm norm_of(ctx);
    if (disc_radius && !(*disc_radius > 0.0)) {
      throw Error(ErrorCode::DomainError, "disc radius must be positive");
    }
    json rows = json::array();
    std::ostringstream csv;
    csv << "re,im,pseudonorm" << (disc_radius ? ",in_disc" : "") << '\n';
    for (const Complex z : points) {
      const double value = norm_of(z);
      csv << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(value);
      json row{{"re", z.real()}, {"im", z.imag()}, {"pseudonorm", number_to_json(value)}};
      if (disc_radius) {
        const bool inside = value < *disc_radius;
        csv << ',' << (inside ? "true" : "false");
        row["in_disc"] = inside;
      }
      csv << '\n';
      rows.push_back(row);
    }
    out << (common.format == "json" ? rows.dump(2) + "\n" : csv.str());
    return kSuccess;
  }
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  try {
    const int status = dispatch(args, buffer, err);
    out << buffer.str();
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace rpq::cli
