#pragma once

// JSON state/density files, report rendering and sweep CSV.
//
// StateFile:   {"dims": [2, 2], "amplitudes": [{"re": 0.7071, "im": 0}, ...]}
// DensityFile: {"dims": [2, 2], "matrix": [{"re": ..., "im": ...}, ...]}  (row-major)
//
// Amplitudes are in lexicographic order with subsystem 0 most significant.
// Reports use a fixed key order and 12 significant digits.

#include <optional>
#include <string>
#include <string_view>

#include "entmeter/measures.hpp"
#include "entmeter/mixed_roof.hpp"
#include "entmeter/tensor.hpp"

namespace entmeter {

struct LoadedState {
  PureState state;
  /// Set when the file norm was off by more than 1e-10 and was rescaled.
  std::optional<std::string> warning;
};

/// Throws ParseError (malformed JSON or schema) or ValidationError (norm off by more than 1e-6).
LoadedState parse_state_file(std::string_view text);

/// Throws ParseError or ValidationError (hermiticity / trace off by more than 1e-8).
DensityMatrix parse_density_file(std::string_view text);

/// Full-precision serialization; re-parsing reproduces amplitudes exactly.
std::string state_to_json(const PureState& psi);
std::string density_to_json(const DensityMatrix& rho);

/// %.12g with negative zero printed as 0.
std::string format_number(double value);

struct ReportExtras {
  std::optional<double> three_tangle;
  std::optional<double> concurrence;
};

/// Adds three_tangle for three-qubit states and concurrence for d x d states.
ReportExtras report_extras(const PureState& psi);

std::string report_to_json(const EntanglementReport& report, const ReportExtras& extras = {});

struct RoofComparison {
  double mu_upper_bound = 0.0;
  std::optional<double> wootters_concurrence;
};

std::string roof_to_json(const RoofResult& result, const RoofComparison& comparison,
                         bool emit_ensemble);

enum class SweepFamily { Ghz3, Ghz4 };

/// CSV over a uniform x grid. ghz3: x,mu,tau; ghz4: x,mu,residual_max.
std::string sweep_csv(SweepFamily family, double from, double to, int steps);

}  // namespace entmeter
