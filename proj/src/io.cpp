#include "entmeter/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "entmeter/errors.hpp"
#include "entmeter/states.hpp"

namespace entmeter {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(std::string_view text, std::string_view near_token,
                               const std::string& what) {
  auto pos = text.find(near_token);
  if (pos == std::string_view::npos) pos = text.size();
  const auto [line, column] = line_column(text, pos);
  throw ParseError(line, column, what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending character
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, column, "malformed JSON");
  }
}

std::vector<int> read_dims(const json& doc, std::string_view text) {
  if (!doc.is_object() || !doc.contains("dims")) {
    schema_error(text, "{", "missing field \"dims\"");
  }
  const auto& dims = doc["dims"];
  if (!dims.is_array() || dims.empty()) {
    schema_error(text, "\"dims\"", "\"dims\" must be a non-empty array of integers");
  }
  std::vector<int> out;
  for (const auto& d : dims) {
    if (!d.is_number_integer()) {
      schema_error(text, "\"dims\"", "\"dims\" entries must be integers");
    }
    const auto v = d.get<long long>();
    if (v < 2 || v > static_cast<long long>(kMaxTotalOrder)) {
      throw ValidationError("dims", "each subsystem dimension must be at least 2");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

SystemShape make_shape(std::vector<int> dims) {
  try {
    return SystemShape(std::move(dims));
  } catch (const CapacityError& e) {
    throw ValidationError("dims", e.what());
  }
}

CVector read_complex_list(const json& doc, std::string_view key, std::string_view text) {
  if (!doc.contains(key)) {
    schema_error(text, "{", "missing field \"" + std::string(key) + "\"");
  }
  const auto& list = doc[std::string(key)];
  const std::string quoted = "\"" + std::string(key) + "\"";
  if (!list.is_array()) {
    schema_error(text, quoted, quoted + " must be an array of {re, im} objects");
  }
  CVector out(static_cast<Eigen::Index>(list.size()));
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& entry = list[i];
    if (!entry.is_object() || !entry.contains("re") || !entry.contains("im") ||
        !entry["re"].is_number() || !entry["im"].is_number()) {
      schema_error(text, quoted,
                   quoted + " entry " + std::to_string(i) + " must be {\"re\": number, \"im\": number}");
    }
    const double re = entry["re"].get<double>();
    const double im = entry["im"].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ValidationError("finite", "non-finite value in " + quoted);
    }
    out(static_cast<Eigen::Index>(i)) = Complex(re, im);
  }
  return out;
}

ordered_json complex_json(Complex c) {
  ordered_json j;
  j["re"] = c.real();
  j["im"] = c.imag();
  return j;
}

std::string complex_text(Complex c) {
  return "{\"re\": " + format_number(c.real()) + ", \"im\": " + format_number(c.imag()) + "}";
}

}  // namespace

LoadedState parse_state_file(std::string_view text) {
  const json doc = parse_json(text);
  const auto shape = make_shape(read_dims(doc, text));
  CVector amps = read_complex_list(doc, "amplitudes", text);
  if (static_cast<std::size_t>(amps.size()) != shape.total_dim()) {
    throw ValidationError("amplitude count", "expected " + std::to_string(shape.total_dim()) +
                                                 " amplitudes, found " + std::to_string(amps.size()));
  }
  const double norm = amps.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw ValidationError("normalization", "state norm " + format_number(norm) +
                                               " differs from 1 by more than 1e-6");
  }
  LoadedState out{PureState::normalized(shape, amps), std::nullopt};
  if (std::abs(amps.squaredNorm() - 1.0) <= 1e-12) {
    out.state = PureState(shape, std::move(amps));
  } else if (std::abs(norm - 1.0) > 1e-10) {
    out.warning = "state norm " + format_number(norm) + " re-normalized to 1";
  }
  return out;
}

DensityMatrix parse_density_file(std::string_view text) {
  const json doc = parse_json(text);
  const auto shape = make_shape(read_dims(doc, text));
  const CVector flat = read_complex_list(doc, "matrix", text);
  const auto n = static_cast<Eigen::Index>(shape.total_dim());
  if (flat.size() != n * n) {
    throw ValidationError("matrix size", "expected " + std::to_string(n * n) +
                                             " entries, found " + std::to_string(flat.size()));
  }
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = flat(i * n + j);
  }
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-8) {
    throw ValidationError("hermiticity", "matrix differs from its adjoint by " + format_number(defect));
  }
  const Complex trace = m.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > 1e-8) {
    throw ValidationError("trace", "trace " + format_number(trace.real()) + " differs from 1");
  }
  m = 0.5 * (m + m.adjoint());
  m /= m.trace().real();
  try {
    return DensityMatrix(shape, std::move(m));
  } catch (const ArgumentError& e) {
    throw ValidationError("positivity", e.what());
  }
}

std::string state_to_json(const PureState& psi) {
  ordered_json doc;
  doc["dims"] = psi.shape().dims();
  doc["amplitudes"] = ordered_json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    doc["amplitudes"].push_back(complex_json(psi.amplitudes()(i)));
  }
  return doc.dump(2) + "\n";
}

std::string density_to_json(const DensityMatrix& rho) {
  ordered_json doc;
  doc["dims"] = rho.shape().dims();
  doc["matrix"] = ordered_json::array();
  const CMatrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) doc["matrix"].push_back(complex_json(m(i, j)));
  }
  return doc.dump(2) + "\n";
}

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

ReportExtras report_extras(const PureState& psi) {
  ReportExtras extras;
  const auto& shape = psi.shape();
  if (shape == SystemShape({2, 2, 2})) extras.three_tangle = three_tangle(psi);
  if (shape.parties() == 2 && shape.dim(0) == shape.dim(1)) {
    extras.concurrence = concurrence_bipartite(psi, shape);
  }
  return extras;
}

std::string report_to_json(const EntanglementReport& report, const ReportExtras& extras) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"mu\": " << format_number(report.mu) << ",\n";
  out << "  \"total_variance\": " << format_number(report.total_variance) << ",\n";
  out << "  \"v_coh\": " << format_number(report.extremes.v_coh) << ",\n";
  out << "  \"v_ent\": " << format_number(report.extremes.v_ent) << ",\n";
  out << "  \"purities\": [";
  for (std::size_t i = 0; i < report.purities.size(); ++i) {
    out << (i ? ", " : "") << format_number(report.purities[i]);
  }
  out << "],\n";
  out << "  \"residual_max\": " << format_number(report.residual_max) << ",\n";
  out << "  \"convention\": \"" << report.convention.name() << "\"";
  if (extras.three_tangle) out << ",\n  \"three_tangle\": " << format_number(*extras.three_tangle);
  if (extras.concurrence) out << ",\n  \"concurrence\": " << format_number(*extras.concurrence);
  out << "\n}\n";
  return out.str();
}

std::string roof_to_json(const RoofResult& result, const RoofComparison& comparison,
                         bool emit_ensemble) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"value\": " << format_number(result.value) << ",\n";
  out << "  \"converged\": " << (result.converged ? "true" : "false") << ",\n";
  out << "  \"restarts_used\": " << result.restarts_used << ",\n";
  out << "  \"seed\": " << result.seed << ",\n";
  out << "  \"mu_upper_bound\": " << format_number(comparison.mu_upper_bound);
  if (comparison.wootters_concurrence) {
    out << ",\n  \"wootters_concurrence\": " << format_number(*comparison.wootters_concurrence);
  }
  if (emit_ensemble) {
    out << ",\n  \"ensemble\": [";
    const auto& members = result.best_ensemble.members;
    for (std::size_t i = 0; i < members.size(); ++i) {
      out << (i ? "," : "") << "\n    {\"weight\": " << format_number(members[i].weight)
          << ", \"amplitudes\": [";
      const auto& amps = members[i].state.amplitudes();
      for (Eigen::Index k = 0; k < amps.size(); ++k) out << (k ? ", " : "") << complex_text(amps(k));
      out << "]}";
    }
    out << "\n  ]";
  }
  out << "\n}\n";
  return out.str();
}

std::string sweep_csv(SweepFamily family, double from, double to, int steps) {
  if (!(from >= 0.0 && from <= to && to <= 1.0)) {
    throw ArgumentError("sweep range must satisfy 0 <= from <= to <= 1");
  }
  if (steps < 2) {
    throw ArgumentError("sweep needs at least 2 steps");
  }
  std::ostringstream out;
  out << (family == SweepFamily::Ghz3 ? "x,mu,tau\n" : "x,mu,residual_max\n");
  for (int i = 0; i < steps; ++i) {
    const double x = (i == steps - 1) ? to : from + (to - from) * i / (steps - 1);
    if (family == SweepFamily::Ghz3) {
      const auto psi = ghz3(x);
      out << format_number(x) << ',' << format_number(mu_value(psi)) << ','
          << format_number(three_tangle(psi)) << '\n';
    } else {
      const auto psi = ghz4(x);
      out << format_number(x) << ',' << format_number(mu_value(psi)) << ','
          << format_number(entanglement_residual(psi, psi.shape()).max_abs) << '\n';
    }
  }
  return out.str();
}

}  // namespace entmeter
