#include "superosc/document.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace superosc {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConfigEcho, command, band_limit, constraints, domain_kind,
                                   domain, constraint_window, precision, scalar, method, seed,
                                   format, samples, a_values, m_values)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RootRecord, index, eigenvalue, attained, coefficients,
                                   yield_algebraic, yield_quadrature, crossings,
                                   secular_residual, stationarity_residual, constraint_residual)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CrossMethodRecord, index, secular, polynomial, relative_delta)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SignalRecord, label, eigenvalue, energy, yield_algebraic,
                                   yield_quadrature, coefficients)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SweepRecord, parameter, index, eigenvalue, normalized)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SlopeRecord, index, slope, expected)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SeriesRecord, name, index, t, value, log10_magnitude)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Diagnostics, seed, kept_constraint_rows, eliminated_residual,
                                   mu_tilde_norm2, warnings, failures)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ResultDocument, config, roots, cross_method, baseline,
                                   slepian, sweep, slopes, series, diagnostics)

std::string to_json(const ResultDocument& doc) {
  const nlohmann::json j = doc;
  return j.dump(2) + "\n";
}

ResultDocument from_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text).get<ResultDocument>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed result document: ") + e.what());
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const ResultDocument& doc) {
  std::ostringstream out;
  if (doc.config.command == "sweep") {
    out << "parameter,index,eigenvalue,normalized\n";
    for (const auto& row : doc.sweep) {
      out << row.parameter << ',' << row.index << ',' << row.eigenvalue << ',' << row.normalized
          << '\n';
    }
  } else if (doc.config.command == "baseline") {
    out << "mode,eigenvalue,energy,yield_quadrature\n";
    for (const auto& rec : doc.baseline) {
      out << csv_field(rec.label) << ',' << rec.eigenvalue << ',' << rec.energy << ','
          << rec.yield_quadrature << '\n';
    }
    for (const auto& rec : doc.slepian) {
      out << csv_field(rec.label) << ',' << rec.eigenvalue << ',' << rec.energy << ','
          << rec.yield_quadrature << '\n';
    }
  } else {
    out << "index,eigenvalue,yield_quadrature,crossings\n";
    for (const auto& root : doc.roots) {
      out << root.index << ',' << root.eigenvalue << ',' << root.yield_quadrature << ','
          << root.crossings << '\n';
    }
  }
  return out.str();
}

std::string series_to_csv(const SeriesRecord& series) {
  std::ostringstream out;
  out << "t,value,log10_magnitude\n";
  for (std::size_t k = 0; k < series.t.size(); ++k) {
    out << series.t[k] << ',' << series.value[k] << ',' << series.log10_magnitude[k] << '\n';
  }
  return out.str();
}

}  // namespace superosc
