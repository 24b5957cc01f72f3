#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "entmeter/errors.hpp"
#include "entmeter/io.hpp"
#include "entmeter/measures.hpp"
#include "entmeter/mixed_roof.hpp"
#include "entmeter/observables.hpp"
#include "entmeter/states.hpp"
#include "entmeter/verify.hpp"

namespace entmeter::cli {

namespace {

struct Flags {
  std::string state;
  std::string file;
  std::optional<double> x;
  std::string convention;
  double from = 0.0;
  double to = 1.0;
  int steps = 11;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int trials = 20;
  int restarts = 32;
  std::optional<int> ensemble_size;
  bool emit_ensemble = false;
  std::string output;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Flags& flags, const std::string& text, std::ostream& out) {
  if (flags.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.output, std::ios::binary);
  if (!file) throw InputError("cannot write '" + flags.output + "'");
  file << text;
}

StateSpec named_spec(const Flags& flags) {
  auto spec = parse_state_name(flags.state);
  if (!spec) throw InputError("unknown state '" + flags.state + "'");
  if (flags.x) {
    if (spec->name != StateName::Ghz3 && spec->name != StateName::Ghz4) {
      throw InputError("--x applies only to ghz3 and ghz4 families");
    }
    spec->x = *flags.x;
  }
  return *spec;
}

PureState load_pure(const Flags& flags, std::ostream& err) {
  if (flags.state.empty() == flags.file.empty()) {
    throw InputError("exactly one of --state or --file is required");
  }
  if (!flags.state.empty()) return make_state(named_spec(flags));
  auto loaded = parse_state_file(read_file(flags.file));
  if (loaded.warning) err << "warning: " << *loaded.warning << "\n";
  return std::move(loaded.state);
}

int run_measure(const Flags& flags, std::ostream& out, std::ostream& err) {
  const auto psi = load_pure(flags, err);
  std::optional<BasisConvention> conv;
  if (!flags.convention.empty()) {
    conv = BasisConvention::parse(flags.convention);
    if (!conv) throw InputError("unknown convention '" + flags.convention + "'");
  }
  const auto report = mu(psi, psi.shape(), conv);
  emit(flags, report_to_json(report, report_extras(psi)), out);
  return kSuccess;
}

int run_sweep(const Flags& flags, std::ostream& out) {
  SweepFamily family;
  if (flags.state == "ghz3") {
    family = SweepFamily::Ghz3;
  } else if (flags.state == "ghz4") {
    family = SweepFamily::Ghz4;
  } else {
    throw InputError("sweep needs --state ghz3 or --state ghz4");
  }
  emit(flags, sweep_csv(family, flags.from, flags.to, flags.steps), out);
  return kSuccess;
}

int run_verify_command(const Flags& flags, std::ostream& out) {
  if (flags.trials < 1) throw InputError("--trials must be at least 1");
  VerifyOptions options;
  if (flags.seed_given) options.seed = flags.seed;
  options.trials = flags.trials;
  const auto report = run_verify(options);
  emit(flags, report.render(), out);
  return report.all_passed() ? kSuccess : kInvariantFailure;
}

int run_roof(const Flags& flags, std::ostream& out, std::ostream& err) {
  std::optional<DensityMatrix> rho;
  if (!flags.file.empty() && flags.state.empty()) {
    rho = parse_density_file(read_file(flags.file));
  } else {
    rho = DensityMatrix::from_pure(load_pure(flags, err));
  }
  RoofOptions options;
  options.restarts = flags.restarts;
  options.ensemble_size = flags.ensemble_size;
  if (flags.seed_given) options.seed = flags.seed;
  const auto result = convex_roof_mu(*rho, rho->shape(), options);
  RoofComparison comparison;
  comparison.mu_upper_bound = mu_upper_bound(*rho, rho->shape());
  if (rho->shape() == SystemShape({2, 2})) comparison.wootters_concurrence = wootters_concurrence(*rho);
  if (!result.converged) err << "warning: optimizer did not meet its convergence tolerance\n";
  emit(flags, roof_to_json(result, comparison, flags.emit_ensemble), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement measures from total local variance", "entmeter"};
  app.require_subcommand(1);
  Flags flags;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--state", flags.state, "Named state (w3, w3-paper, ghz3, ghz4, ghz4-minus, bell, bell-pair, biseparable-ab|ac|bc)");
    sub->add_option("--file", flags.file, "JSON state file (density file for roof)");
    sub->add_option("--output", flags.output, "Write the result to this path instead of stdout");
  };

  auto* measure = app.add_subcommand("measure", "Entanglement report for a pure state");
  add_input(measure);
  measure->add_option("--x", flags.x, "Family parameter for ghz3 / ghz4");
  measure->add_option("--convention", flags.convention, "pauli, spin or trace-orthonormal");

  auto* sweep = app.add_subcommand("sweep", "CSV of mu over the ghz3 or ghz4 family");
  sweep->add_option("--state", flags.state, "ghz3 or ghz4")->required();
  sweep->add_option("--from", flags.from, "Lower end of the x range");
  sweep->add_option("--to", flags.to, "Upper end of the x range");
  sweep->add_option("--steps", flags.steps, "Number of grid points");
  sweep->add_option("--output", flags.output, "Write the result to this path instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--seed", flags.seed, "Base seed")->each([&](const std::string&) { flags.seed_given = true; });
  verify->add_option("--trials", flags.trials, "Random inputs per invariant");
  verify->add_option("--output", flags.output, "Write the report to this path instead of stdout");

  auto* roof = app.add_subcommand("roof", "Convex-roof estimate for a density matrix");
  add_input(roof);
  roof->add_option("--x", flags.x, "Family parameter for ghz3 / ghz4");
  roof->add_option("--seed", flags.seed, "Restart seed")->each([&](const std::string&) { flags.seed_given = true; });
  roof->add_option("--restarts", flags.restarts, "Number of optimizer restarts");
  roof->add_option("--ensemble-size", flags.ensemble_size, "Ensemble size m (default rank squared)");
  roof->add_flag("--emit-ensemble", flags.emit_ensemble, "Include the optimal ensemble in the output");

  std::vector<const char*> argv{"entmeter"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*measure) return run_measure(flags, out, err);
    if (*sweep) return run_sweep(flags, out);
    if (*verify) return run_verify_command(flags, out);
    return run_roof(flags, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericFailure;
  }
  return kInputError;
}

}  // namespace entmeter::cli
