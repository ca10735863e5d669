#include "superosc/cli.hpp"

#include "superosc/analysis.hpp"
#include "superosc/errors.hpp"
#include "superosc/spectrum.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace superosc::cli {

namespace {

constexpr double kCrossingDensity = 1e5;  // grid points per unit length

template <class T>
T parse_value(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_real<T>(text);
    const T num = parse_real<T>(text.substr(0, slash));
    const T den = parse_real<T>(text.substr(slash + 1));
    if (den == T(0)) throw ConfigError("zero denominator in '" + text + "'");
    return num / den;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + text + "'");
  }
}

template <class T>
std::string fmt(const T& x) {
  return to_decimal_string(x);
}

template <class T>
Domain<T> make_domain(const RunConfig& config) {
  if (config.domain_kind == "interval") {
    const T a = parse_value<T>(config.domain_values.at(0));
    if (!(a > T(0))) throw DomainError("interval half-width must be > 0");
    return Domain<T>::centered(a);
  }
  if (config.domain_kind == "annulus") {
    return symmetric_pair(parse_value<T>(config.domain_values.at(0)),
                          parse_value<T>(config.domain_values.at(1)));
  }
  return parse_domain<T>(config.domain_values.at(0));
}

template <class T>
std::string domain_string(const Domain<T>& domain) {
  std::string out;
  for (const auto& [lo, hi] : domain.intervals()) {
    if (!out.empty()) out += ';';
    out += fmt(lo) + ',' + fmt(hi);
  }
  return out;
}

// Constraint points sit in the non-negative part of the rightmost interval;
// evenness of the cosine basis mirrors them onto t < 0.
template <class T>
std::pair<T, T> constraint_window(const Domain<T>& domain) {
  const auto& [lo, hi] = domain.intervals().back();
  if (!(hi > T(0))) throw DomainError("domain has no part with t > 0 to place constraints");
  return {std::max(lo, T(0)), hi};
}

template <class T>
int crossing_grid(const Domain<T>& domain) {
  return std::max(1000, static_cast<int>(std::lround(kCrossingDensity *
                                                     scalar_cast<double>(domain.measure()))));
}

template <class T>
T constraint_residual(const CosineSignal<T>& signal, const ConstraintSet<T>& cs) {
  using std::abs;
  T worst(0);
  for (int j = 0; j < cs.size(); ++j) {
    const auto k = static_cast<std::size_t>(j);
    worst = std::max(worst, T(abs(signal.evaluate(cs.points[k]) - cs.values[k])));
  }
  return worst;
}

template <class T>
std::vector<std::string> coefficient_strings(const CosineSignal<T>& signal) {
  std::vector<std::string> out;
  for (Eigen::Index k = 0; k < signal.coeffs().size(); ++k) out.push_back(fmt(signal.coeffs()(k)));
  return out;
}

template <class T>
SeriesRecord make_series(const CosineSignal<T>& signal, const T& lo, const T& hi, int count,
                         const std::string& name, int index) {
  using std::abs;
  using std::log10;
  SeriesRecord series;
  series.name = name;
  series.index = index;
  for (const auto& [t, v] : signal.sample(lo, hi, count)) {
    series.t.push_back(fmt(t));
    series.value.push_back(fmt(v));
    series.log10_magnitude.push_back(v == T(0) ? std::string("-inf") : fmt(T(log10(abs(v)))));
  }
  return series;
}

template <class T>
struct Context {
  RunConfig config;
  Domain<T> domain;
  ConstraintSet<T> constraints;
  Problem<T> problem;
};

template <class T>
Context<T> prepare(const RunConfig& config) {
  Domain<T> domain = make_domain<T>(config);
  const auto [lo, hi] = constraint_window(domain);
  ConstraintSet<T> cs = alternating_constraints(lo, hi, config.constraints);
  Problem<T> problem = build_problem(domain, cs, config.band_limit, config.seed);
  return Context<T>{config, std::move(domain), std::move(cs), std::move(problem)};
}

template <class T>
ResultDocument base_document(const RunConfig& config) {
  ResultDocument doc;
  ConfigEcho& echo = doc.config;
  echo.command = config.command;
  echo.band_limit = config.band_limit;
  echo.constraints = config.constraints;
  echo.domain_kind = config.domain_kind;
  echo.precision = config.precision;
  echo.scalar = is_high_precision_v<T> ? "mpfr" : "double";
  echo.method = config.method;
  echo.seed = config.seed;
  echo.format = config.format;
  echo.samples = config.samples;
  echo.a_values = config.a_values;
  echo.m_values = config.m_values;
  doc.diagnostics.seed = config.seed;
  return doc;
}

template <class T>
void describe_problem(ResultDocument& doc, const Context<T>& ctx) {
  doc.config.domain = domain_string(ctx.domain);
  const auto [lo, hi] = constraint_window(ctx.domain);
  doc.config.constraint_window = fmt(lo) + ',' + fmt(hi);
  doc.diagnostics.kept_constraint_rows = ctx.problem.reduced.kept_rows;
  doc.diagnostics.eliminated_residual = fmt(ctx.problem.reduced.eliminated_residual);
  doc.diagnostics.mu_tilde_norm2 = fmt(T(ctx.problem.frame.mu_tilde.squaredNorm()));
}

template <class T>
RootRecord root_record(const Context<T>& ctx, const SpectrumRoot<T>& root, int index) {
  const YieldReport<T> yield = yield_of(root.signal, ctx.domain, &ctx.problem.overlap);
  RootRecord rec;
  rec.index = index;
  rec.eigenvalue = fmt(root.eigenvalue);
  rec.attained = root.attained;
  rec.coefficients = coefficient_strings(root.signal);
  rec.yield_algebraic = fmt(yield.algebraic);
  rec.yield_quadrature = fmt(yield.quadrature);
  rec.crossings = zero_crossings(root.signal, ctx.domain, crossing_grid(ctx.domain));
  rec.secular_residual = fmt(root.secular_residual);
  rec.stationarity_residual = fmt(root.stationarity_residual);
  rec.constraint_residual = fmt(constraint_residual(root.signal, ctx.constraints));
  return rec;
}

template <class T>
GeneralizedSpectrum<T> solve(const Context<T>& ctx, ResultDocument& doc) {
  using std::abs;
  const auto& p = ctx.problem;
  if (ctx.config.method == "polynomial") return polynomial_spectrum(p.blocks, p.frame);
  GeneralizedSpectrum<T> secular = secular_spectrum(p.blocks, p.frame);
  if (ctx.config.method == "both") {
    const GeneralizedSpectrum<T> poly = polynomial_spectrum(p.blocks, p.frame);
    if (poly.roots.size() != secular.roots.size()) {
      throw SolverFailure("secular and polynomial root counts differ", poly.warnings);
    }
    for (std::size_t k = 0; k < secular.roots.size(); ++k) {
      const T& s = secular.roots[k].eigenvalue;
      const T& q = poly.roots[k].eigenvalue;
      doc.cross_method.push_back(CrossMethodRecord{static_cast<int>(k) + 1, fmt(s), fmt(q),
                                                   fmt(T(abs(s - q) / abs(s)))});
    }
    for (const auto& w : poly.warnings) doc.diagnostics.warnings.push_back("polynomial: " + w);
  }
  return secular;
}

template <class T>
ResultDocument design(const RunConfig& config) {
  const Context<T> ctx = prepare<T>(config);
  ResultDocument doc = base_document<T>(config);
  describe_problem(doc, ctx);
  const GeneralizedSpectrum<T> spectrum = solve(ctx, doc);
  doc.diagnostics.warnings.insert(doc.diagnostics.warnings.end(), spectrum.warnings.begin(),
                                  spectrum.warnings.end());
  const int top = static_cast<int>(spectrum.roots.size());
  doc.roots.push_back(root_record(ctx, spectrum.top(), top));
  if (!doc.cross_method.empty()) {
    doc.cross_method = {doc.cross_method.back()};
  }

  const int samples = config.samples < 0 ? 1000 : config.samples;
  if (samples >= 2) {
    const T p = pi<T>();
    doc.series.push_back(make_series(spectrum.top().signal, T(-p), p, samples, "full_period", top));
    const T lo = ctx.domain.intervals().front().first;
    const T hi = ctx.domain.intervals().back().second;
    doc.series.push_back(make_series(spectrum.top().signal, lo, hi, samples, "domain", top));
  }
  return doc;
}

template <class T>
ResultDocument spectrum(const RunConfig& config) {
  const Context<T> ctx = prepare<T>(config);
  ResultDocument doc = base_document<T>(config);
  describe_problem(doc, ctx);
  const GeneralizedSpectrum<T> found = solve(ctx, doc);
  doc.diagnostics.warnings.insert(doc.diagnostics.warnings.end(), found.warnings.begin(),
                                  found.warnings.end());
  const int samples = config.samples < 0 ? 0 : config.samples;
  const T p = pi<T>();
  for (std::size_t k = 0; k < found.roots.size(); ++k) {
    const int index = static_cast<int>(k) + 1;
    doc.roots.push_back(root_record(ctx, found.roots[k], index));
    if (samples >= 2) {
      doc.series.push_back(
          make_series(found.roots[k].signal, T(-p), p, samples, "full_period", index));
    }
  }
  return doc;
}

template <class T>
SignalRecord signal_record(const Context<T>& ctx, const CosineSignal<T>& signal,
                           const std::string& label, const std::string& eigenvalue) {
  const YieldReport<T> yield = yield_of(signal, ctx.domain, &ctx.problem.overlap);
  return SignalRecord{label,
                      eigenvalue,
                      fmt(signal.energy_per_period()),
                      fmt(yield.algebraic),
                      fmt(yield.quadrature),
                      coefficient_strings(signal)};
}

template <class T>
ResultDocument baseline(const RunConfig& config) {
  const Context<T> ctx = prepare<T>(config);
  ResultDocument doc = base_document<T>(config);
  describe_problem(doc, ctx);

  const CosineSignal<T> fk = fk_min_energy_signal(ctx.problem.frame);
  doc.baseline.push_back(signal_record(ctx, fk, "fk_min_energy", ""));
  const GeneralizedSpectrum<T> found = secular_spectrum(ctx.problem.blocks, ctx.problem.frame);
  doc.baseline.push_back(
      signal_record(ctx, found.top().signal, "yield_optimal", fmt(found.top().eigenvalue)));
  doc.diagnostics.warnings.insert(doc.diagnostics.warnings.end(), found.warnings.begin(),
                                  found.warnings.end());

  const std::vector<SlepianMode<T>> modes = slepian_modes(ctx.problem.overlap);
  for (std::size_t k = 0; k < modes.size(); ++k) {
    doc.slepian.push_back(signal_record(ctx, modes[k].signal, "slepian_" + std::to_string(k),
                                        fmt(modes[k].eigenvalue)));
  }
  return doc;
}

template <class T>
ResultDocument sweep(const RunConfig& config) {
  ResultDocument doc = base_document<T>(config);
  SweepTable<T> table;
  if (!config.a_values.empty()) {
    std::vector<T> a_values;
    for (const auto& text : config.a_values) a_values.push_back(parse_value<T>(text));
    const T smallest = *std::min_element(a_values.begin(), a_values.end());
    if (!is_high_precision_v<T> && smallest < T(0.1)) {
      throw ConfigError("sweeps with a < 0.1 need --precision above 16");
    }
    doc.config.domain_kind = "interval";
    table = scaling_sweep(config.band_limit, config.constraints, a_values, config.seed);
    for (std::size_t k = 0; k < table.slopes.size(); ++k) {
      const int index = static_cast<int>(k) + 1;
      std::ostringstream slope;
      slope.precision(17);
      slope << table.slopes[k];
      doc.slopes.push_back(
          SlopeRecord{index, slope.str(), scaling_exponent(config.band_limit, index)});
    }
  } else {
    const Domain<T> domain = make_domain<T>(config);
    const auto& front = domain.intervals().front();
    if (domain.intervals().size() != 1 || front.first != -front.second) {
      throw ConfigError("monotonicity sweeps need --interval");
    }
    const T a = domain.intervals().front().second;
    doc.config.domain = domain_string(domain);
    table = monotonicity_table(config.band_limit, a, config.m_values, config.seed);
    for (const auto& v : monotonicity_violations(table)) {
      doc.diagnostics.warnings.push_back(
          "lambda_" + std::to_string(v.index) + " increases from M=" +
          std::to_string(v.smaller_m) + " to M=" + std::to_string(v.larger_m));
    }
  }
  for (const auto& row : table.rows) {
    doc.sweep.push_back(
        SweepRecord{fmt(row.parameter), row.index, fmt(row.eigenvalue), fmt(row.normalized)});
  }
  doc.diagnostics.warnings.insert(doc.diagnostics.warnings.end(), table.warnings.begin(),
                                  table.warnings.end());
  doc.diagnostics.failures = table.failures;
  return doc;
}

template <class Fn>
ResultDocument dispatch(const RunConfig& config, Fn&& fn) {
  validate(config);
  if (config.precision <= 16) return fn(double{});
  PrecisionScope scope(static_cast<unsigned>(config.precision));
  return fn(HighPrecision{});
}

std::string stem_of(const std::string& path) {
  const auto dot = path.rfind('.');
  const auto slash = path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
  return path.substr(0, dot);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

void validate(const RunConfig& config) {
  static const std::vector<std::string> commands{"design", "spectrum", "baseline", "sweep"};
  if (std::find(commands.begin(), commands.end(), config.command) == commands.end()) {
    throw ConfigError("unknown command '" + config.command + "'");
  }
  if (config.band_limit < 1) throw ConfigError("band limit must be >= 1");
  if (config.precision < 15) throw ConfigError("precision must be >= 15 digits");
  if (config.method != "secular" && config.method != "polynomial" && config.method != "both") {
    throw ConfigError("method must be secular, polynomial or both");
  }
  if (config.format != "json" && config.format != "csv") {
    throw ConfigError("format must be json or csv");
  }
  const bool m_sweep = config.command == "sweep" && !config.m_values.empty();
  if (!m_sweep) {
    if (config.constraints < 1) throw ConfigError("constraint count must be >= 1");
    if (config.constraints > config.band_limit + 1) throw ConfigError("no solution for M>N+1");
  }
  for (int m : config.m_values) {
    if (m < 1) throw ConfigError("constraint count must be >= 1");
    if (m > config.band_limit + 1) throw ConfigError("no solution for M>N+1");
  }
  if (config.command == "sweep" && config.a_values.empty() == config.m_values.empty()) {
    throw ConfigError("sweep needs exactly one of --a-values or --m-values");
  }
  const std::size_t expected = config.domain_kind == "annulus" ? 2 : 1;
  if (config.domain_values.size() != expected) throw ConfigError("malformed domain flags");
}

ResultDocument cmd_design(const RunConfig& config) {
  return dispatch(config, [&](auto tag) { return design<decltype(tag)>(config); });
}

ResultDocument cmd_spectrum(const RunConfig& config) {
  return dispatch(config, [&](auto tag) { return spectrum<decltype(tag)>(config); });
}

ResultDocument cmd_baseline(const RunConfig& config) {
  return dispatch(config, [&](auto tag) { return baseline<decltype(tag)>(config); });
}

ResultDocument cmd_sweep(const RunConfig& config) {
  return dispatch(config, [&](auto tag) { return sweep<decltype(tag)>(config); });
}

ResultDocument execute(const RunConfig& config) {
  if (config.command == "design") return cmd_design(config);
  if (config.command == "spectrum") return cmd_spectrum(config);
  if (config.command == "baseline") return cmd_baseline(config);
  if (config.command == "sweep") return cmd_sweep(config);
  throw ConfigError("unknown command '" + config.command + "'");
}

namespace {

struct HelpRequested {
  std::string text;
};

}  // namespace

RunConfig parse_arguments(int argc, const char* const* argv) {
  RunConfig config;
  CLI::App app{"Design yield-optimized superoscillating signals"};
  app.require_subcommand(1);

  std::optional<std::string> interval;
  std::vector<std::string> annulus;
  std::optional<std::string> domain;
  std::optional<int> samples;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--band-limit,-N", config.band_limit, "Highest harmonic N")->capture_default_str();
    sub->add_option("--constraints,-M", config.constraints, "Number of alternating constraints M")
        ->capture_default_str();
    auto* i = sub->add_option("--interval", interval, "Single interval (-A, A)");
    auto* a = sub->add_option("--annulus", annulus, "Symmetric pair (-B,-A) U (A,B)")
                  ->expected(2)
                  ->type_name("A B");
    auto* d = sub->add_option("--domain", domain, "General domain \"lo,hi;lo,hi\"");
    i->excludes(a)->excludes(d);
    a->excludes(d);
    sub->add_option("--precision", config.precision, "Significant digits (<= 16 runs in double)")
        ->capture_default_str();
    sub->add_option("--method", config.method, "secular | polynomial | both")
        ->capture_default_str();
    sub->add_option("--seed", config.seed, "Completion seed")->capture_default_str();
    sub->add_option("--format", config.format, "json | csv")->capture_default_str();
    sub->add_option("--samples", samples, "Points per exported series");
    sub->add_option("--out,-o", config.out, "Output path (default stdout)");
  };

  for (const char* name : {"design", "spectrum", "baseline"}) {
    add_common(app.add_subcommand(name, std::string("Run ") + name));
  }
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Scaling (a) or monotonicity (M) sweep");
  add_common(sweep_cmd);
  auto* av = sweep_cmd->add_option("--a-values", config.a_values, "Interval half-widths, e.g. 1/64");
  auto* mv = sweep_cmd->add_option("--m-values", config.m_values, "Constraint counts");
  av->excludes(mv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  config.command = app.get_subcommands().front()->get_name();
  if (domain) {
    config.domain_kind = "general";
    config.domain_values = {*domain};
  } else if (!annulus.empty()) {
    config.domain_kind = "annulus";
    config.domain_values = annulus;
  } else if (interval) {
    config.domain_kind = "interval";
    config.domain_values = {*interval};
  }
  if (samples) config.samples = *samples;
  return config;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = parse_arguments(argc, argv);
    const ResultDocument doc = execute(config);
    if (config.format == "json") {
      if (config.out.empty()) {
        out << to_json(doc);
      } else {
        write_file(config.out, to_json(doc));
      }
    } else {
      if (config.out.empty()) {
        out << to_csv(doc);
        if (!doc.series.empty()) err << "note: series are written only with --out\n";
      } else {
        write_file(config.out, to_csv(doc));
        const std::string stem = stem_of(config.out);
        for (const auto& s : doc.series) {
          write_file(stem + "_" + s.name + "_" + std::to_string(s.index) + ".csv",
                     series_to_csv(s));
        }
      }
    }
    return 0;
  } catch (const HelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << '\n';
    for (const auto& d : e.diagnostics()) err << "  " << d << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleConstraints& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace superosc::cli
