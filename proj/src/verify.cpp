#include "entmeter/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "entmeter/io.hpp"
#include "entmeter/measures.hpp"
#include "entmeter/mixed_roof.hpp"
#include "entmeter/observables.hpp"
#include "entmeter/random.hpp"
#include "entmeter/states.hpp"

namespace entmeter {

namespace {

using nlohmann::ordered_json;

class Recorder {
 public:
  explicit Recorder(std::string name) { outcome_.name = std::move(name); }

  void check(bool ok, const std::function<ordered_json()>& describe) {
    ++outcome_.cases;
    if (!ok && outcome_.passed) {
      outcome_.passed = false;
      outcome_.counterexample = describe().dump();
    }
  }

  InvariantOutcome finish() { return std::move(outcome_); }

 private:
  InvariantOutcome outcome_;
};

ordered_json describe_state(const PureState& psi) {
  ordered_json j;
  j["dims"] = psi.shape().dims();
  ordered_json amps = ordered_json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    amps.push_back({psi.amplitudes()(i).real(), psi.amplitudes()(i).imag()});
  }
  j["amplitudes"] = amps;
  return j;
}

CMatrix random_hermitian(int n, Rng& rng) {
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  return 0.5 * (g + g.adjoint());
}

CMatrix random_matrix(int n, Rng& rng) {
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

PureState random_product(const SystemShape& shape, Rng& rng) {
  std::vector<PureState> factors;
  for (int d : shape.dims()) factors.push_back(random_pure(SystemShape({d}), rng));
  return product(factors);
}

std::vector<BasisConvention> conventions_for(const SystemShape& shape) {
  if (shape.all_qubits()) return {kTraceOrthonormal, kPauli, kSpin};
  return {kTraceOrthonormal};
}

double casimir_sum(const SystemShape& shape, BasisConvention conv) {
  double c = 0.0;
  for (int d : shape.dims()) c += casimir_constant(d, conv);
  return c;
}

const std::vector<SystemShape>& property_shapes() {
  static const std::vector<SystemShape> shapes{SystemShape({2, 2}), SystemShape({2, 2, 2}),
                                               SystemShape({3, 3}), SystemShape({2, 3, 4})};
  return shapes;
}

struct Context {
  const VerifyOptions& options;
  std::uint64_t stream = 0;

  Rng rng_for(std::uint64_t invariant) const {
    return Rng(derive_seed(options.seed, invariant));
  }
};

// ---------------------------------------------------------------------------
// tensor-core

InvariantOutcome partial_trace_composition(const Context& ctx) {
  Recorder rec("tensor.partial_trace_composition");
  Rng rng = ctx.rng_for(1);
  const std::array<SystemShape, 3> shapes{SystemShape({2, 2, 2}), SystemShape({2, 3, 2}),
                                          SystemShape({2, 2, 2, 2})};
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto& shape = shapes[static_cast<std::size_t>(t) % shapes.size()];
    const auto psi = random_pure(shape, rng);
    const auto rho = DensityMatrix::from_pure(psi);
    // keep site 0, trace the others one at a time from the highest index down
    const std::array<std::size_t, 1> keep0{0};
    const auto joint = partial_trace(rho, keep0);
    DensityMatrix step = rho;
    for (std::size_t n = shape.parties(); n > 1; --n) {
      std::vector<std::size_t> keep(n - 1);
      std::iota(keep.begin(), keep.end(), 0);
      step = partial_trace(step, keep);
    }
    const double err = (joint.matrix() - step.matrix()).cwiseAbs().maxCoeff();
    rec.check(err <= 1e-12, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"error", err}};
    });
  }
  return rec.finish();
}

InvariantOutcome bipartite_isospectral(const Context& ctx) {
  Recorder rec("tensor.bipartite_purity_isospectral");
  Rng rng = ctx.rng_for(2);
  const std::array<SystemShape, 3> shapes{SystemShape({2, 3}), SystemShape({3, 3}),
                                          SystemShape({2, 4})};
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto psi = random_pure(shapes[static_cast<std::size_t>(t) % shapes.size()], rng);
    const std::array<std::size_t, 1> a{0}, b{1};
    const double pa = purity(reduced_density(psi, a));
    const double pb = purity(reduced_density(psi, b));
    rec.check(std::abs(pa - pb) <= 1e-12, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"purity_a", pa}, {"purity_b", pb}};
    });
  }
  return rec.finish();
}

InvariantOutcome eig_trace_and_projectors(const Context& ctx) {
  Recorder rec("tensor.hermitian_eig_trace_projector");
  Rng rng = ctx.rng_for(3);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const CMatrix h = random_hermitian(6, rng);
    const auto eig = hermitian_eig(h);
    const double err = std::abs(eig.eigenvalues.sum() - h.trace().real());
    rec.check(err <= 1e-10, [&] { return ordered_json{{"case", "trace"}, {"error", err}}; });

    const auto psi = random_pure(SystemShape({2, 3}), rng);
    const auto proj = hermitian_eig(DensityMatrix::from_pure(psi).matrix());
    double worst = 0.0;
    for (Eigen::Index k = 0; k < proj.eigenvalues.size(); ++k) {
      const double l = proj.eigenvalues(k);
      worst = std::max(worst, std::min(std::abs(l), std::abs(l - 1.0)));
    }
    rec.check(worst <= 1e-10, [&] {
      return ordered_json{{"case", "projector"}, {"state", describe_state(psi)}, {"error", worst}};
    });
  }
  return rec.finish();
}

InvariantOutcome kron_mixed_product(const Context& ctx) {
  Recorder rec("tensor.kron_mixed_product");
  Rng rng = ctx.rng_for(4);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const CMatrix a = random_matrix(2, rng), c = random_matrix(2, rng);
    const CMatrix b = random_matrix(3, rng), d = random_matrix(3, rng);
    const double err = (kron(a, b) * kron(c, d) - kron(a * c, b * d)).cwiseAbs().maxCoeff();
    rec.check(err <= 1e-12, [&] { return ordered_json{{"trial", t}, {"error", err}}; });
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// observables

InvariantOutcome killing_pairing(const Context& ctx) {
  Recorder rec("observables.killing_pairing");
  Rng rng = ctx.rng_for(5);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto& shape = property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()];
    const auto psi = random_pure(shape, rng);
    const OperatorBasis basis(shape, kTraceOrthonormal);
    const auto x_psi = mean_operator(psi, basis);
    // random element of the local algebra; embedded generators on site A
    // satisfy Tr(X_a X_b) = (D / d_A) delta_ab on the full space
    const auto n = static_cast<Eigen::Index>(shape.total_dim());
    CMatrix x = CMatrix::Zero(n, n);
    CMatrix weighted = CMatrix::Zero(n, n);
    for (std::size_t site = 0; site < shape.parties(); ++site) {
      const double fold = static_cast<double>(shape.dim(site)) / static_cast<double>(n);
      for (const auto& g : basis.local(site)) {
        const double c = rng.normal();
        const CMatrix e = embed_local(g, site, shape);
        x += c * e;
        weighted += c * fold * e;
      }
    }
    const double pairing = (x_psi.matrix * weighted).trace().real();
    const double direct = expectation(psi, x);
    rec.check(std::abs(pairing - direct) <= 1e-10, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"pairing", pairing}, {"expectation", direct}};
    });
  }
  return rec.finish();
}

InvariantOutcome mean_operator_basis_independence(const Context& ctx) {
  Recorder rec("observables.mean_operator_basis_independence");
  Rng rng = ctx.rng_for(6);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto& shape = property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()];
    const auto psi = random_pure(shape, rng);
    const OperatorBasis standard(shape, kTraceOrthonormal);
    std::vector<std::vector<CMatrix>> rotated;
    for (std::size_t site = 0; site < shape.parties(); ++site) {
      const CMatrix u = random_unitary(shape.dim(site), rng);
      std::vector<CMatrix> ops;
      for (const auto& g : standard.local(site)) ops.push_back(u * g * u.adjoint());
      rotated.push_back(std::move(ops));
    }
    const OperatorBasis other(shape, kTraceOrthonormal, std::move(rotated));
    const double err =
        (mean_operator(psi, standard).matrix - mean_operator(psi, other).matrix).cwiseAbs().maxCoeff();
    rec.check(err <= 1e-9, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"error", err}};
    });
  }
  return rec.finish();
}

InvariantOutcome casimir_identity(const Context&) {
  Recorder rec("observables.casimir_identity");
  for (const auto& shape : property_shapes()) {
    for (auto conv : conventions_for(shape)) {
      for (std::size_t site = 0; site < shape.parties(); ++site) {
        const auto n = static_cast<Eigen::Index>(shape.total_dim());
        CMatrix sum = CMatrix::Zero(n, n);
        for (const auto& g : gell_mann_basis(shape.dim(site), conv)) {
          const CMatrix e = embed_local(g, site, shape);
          sum += e * e;
        }
        const double c = casimir_constant(shape.dim(site), conv);
        const double err = (sum - c * CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
        rec.check(err <= 1e-10, [&] {
          return ordered_json{{"dims", shape.dims()}, {"site", site},
                              {"convention", std::string(conv.name())}, {"error", err}};
        });
      }
    }
  }
  return rec.finish();
}

InvariantOutcome mean_length_bounds(const Context& ctx) {
  Recorder rec("observables.mean_length_bounds");
  Rng rng = ctx.rng_for(7);
  const OperatorBasis qubit(SystemShape({2}), kSpin);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto psi = random_pure(SystemShape({2}), rng);
    const double len = mean_operator_expectation(psi, qubit);
    rec.check(len >= 0.0 && len <= 0.25 + 1e-10, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"mean_length", len}};
    });
    const auto& shape = property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()];
    const auto phi = random_pure(shape, rng);
    const double multi = mean_operator_expectation(phi, OperatorBasis(shape, kTraceOrthonormal));
    rec.check(multi >= 0.0, [&] {
      return ordered_json{{"state", describe_state(phi)}, {"mean_length", multi}};
    });
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// measures

InvariantOutcome route_equivalence(const Context& ctx) {
  Recorder rec("measures.route_equivalence");
  Rng rng = ctx.rng_for(8);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto& shape = property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()];
    const auto psi = random_pure(shape, rng);
    for (auto conv : conventions_for(shape)) {
      const double direct = total_variance_direct(psi, OperatorBasis(shape, conv));
      const double closed = total_variance_closed(psi, shape, conv) + ctx.options.closed_variance_offset;
      rec.check(std::abs(direct - closed) <= 1e-9, [&] {
        return ordered_json{{"state", describe_state(psi)}, {"convention", std::string(conv.name())},
                            {"direct", direct}, {"closed", closed}};
      });
    }
  }
  return rec.finish();
}

InvariantOutcome casimir_decomposition(const Context& ctx) {
  Recorder rec("measures.casimir_decomposition");
  Rng rng = ctx.rng_for(9);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto& shape = property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()];
    const auto psi = random_pure(shape, rng);
    for (auto conv : conventions_for(shape)) {
      const OperatorBasis basis(shape, conv);
      double squares = 0.0;
      for (double e : local_expectations(psi, basis)) squares += e * e;
      const double direct = total_variance_direct(psi, basis);
      const double decomposed = casimir_sum(shape, conv) - squares;
      rec.check(std::abs(direct - decomposed) <= 1e-9, [&] {
        return ordered_json{{"state", describe_state(psi)}, {"convention", std::string(conv.name())},
                            {"direct", direct}, {"casimir_form", decomposed}};
      });
    }
  }
  return rec.finish();
}

InvariantOutcome recast_form(const Context& ctx) {
  Recorder rec("measures.recast_form");
  Rng rng = ctx.rng_for(10);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto& shape = property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()];
    const auto psi = random_pure(shape, rng);
    for (auto conv : conventions_for(shape)) {
      const OperatorBasis basis(shape, conv);
      const double center = expectation(psi, mean_operator(psi, basis).matrix);
      const double direct = total_variance_direct(psi, basis);
      const double recast = casimir_sum(shape, conv) - center;
      rec.check(std::abs(direct - recast) <= 1e-9, [&] {
        return ordered_json{{"state", describe_state(psi)}, {"convention", std::string(conv.name())},
                            {"direct", direct}, {"recast", recast}};
      });
    }
  }
  return rec.finish();
}

InvariantOutcome variance_bound(const Context& ctx) {
  Recorder rec("measures.variance_bound_and_equality");
  Rng rng = ctx.rng_for(11);
  std::vector<PureState> states{ghz3(1.0 / std::sqrt(2.0)), ghz4(1.0 / std::sqrt(2.0)),
                                bell_pair_product(), w3()};
  for (int t = 0; t < ctx.options.trials; ++t) {
    states.push_back(random_pure(property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()], rng));
  }
  for (const auto& psi : states) {
    const auto& shape = psi.shape();
    for (auto conv : conventions_for(shape)) {
      const double v = total_variance_direct(psi, OperatorBasis(shape, conv));
      const double cap = casimir_sum(shape, conv);
      const bool equal = std::abs(v - cap) <= 1e-9;
      const bool complete = entanglement_residual(psi, shape).max_abs <= 1e-9;
      rec.check(v <= cap + 1e-10 && equal == complete, [&] {
        return ordered_json{{"state", describe_state(psi)}, {"convention", std::string(conv.name())},
                            {"variance", v}, {"casimir_sum", cap}};
      });
    }
  }
  return rec.finish();
}

InvariantOutcome mu_range(const Context& ctx) {
  Recorder rec("measures.mu_range_and_extremes");
  Rng rng = ctx.rng_for(12);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto& shape = property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()];
    const auto psi = random_pure(shape, rng);
    const double m = mu_value(psi);
    rec.check(m >= 0.0 && m <= 1.0, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"mu", m}};
    });
    const auto prod = random_product(shape, rng);
    const double mp = mu_value(prod);
    // the square root lifts roundoff of order 1e-16 in mu^2 to 1e-8
    rec.check(mp <= 1e-7, [&] {
      return ordered_json{{"product_state", describe_state(prod)}, {"mu", mp}};
    });
  }
  for (const auto& psi : {ghz3(1.0 / std::sqrt(2.0)), ghz4(1.0 / std::sqrt(2.0)), bell_pair_product(), bell()}) {
    const double m = mu_value(psi);
    rec.check(std::abs(m - 1.0) <= 1e-9, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"mu", m}};
    });
  }
  return rec.finish();
}

InvariantOutcome local_unitary_invariance(const Context& ctx) {
  Recorder rec("measures.local_unitary_invariance");
  Rng rng = ctx.rng_for(13);
  for (int t = 0; t < ctx.options.trials; ++t) {
    for (const auto& shape : {SystemShape({2, 2, 2}), SystemShape({3, 3})}) {
      const auto psi = random_pure(shape, rng);
      const auto dressed = random_local_unitary(psi, rng);
      const double dmu = std::abs(mu_value(psi) - mu_value(dressed));
      double dother = 0.0;
      if (shape.parties() == 3) {
        dother = std::abs(three_tangle(psi) - three_tangle(dressed));
      } else {
        dother = std::abs(concurrence_bipartite(psi, shape) - concurrence_bipartite(dressed, shape));
      }
      rec.check(dmu <= 1e-9 && dother <= 1e-9, [&] {
        return ordered_json{{"state", describe_state(psi)}, {"dressed", describe_state(dressed)},
                            {"mu_change", dmu}, {"invariant_change", dother}};
      });
    }
  }
  return rec.finish();
}

InvariantOutcome convention_invariance(const Context& ctx) {
  Recorder rec("measures.convention_invariance");
  Rng rng = ctx.rng_for(14);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const SystemShape shape = t % 2 ? SystemShape({2, 2}) : SystemShape({2, 2, 2});
    const auto psi = random_pure(shape, rng);
    auto mu_under = [&](BasisConvention conv) {
      const auto ext = variance_extremes(shape, conv);
      const double v = total_variance_direct(psi, OperatorBasis(shape, conv));
      return std::sqrt(std::max(0.0, (v - ext.v_coh) / (ext.v_ent - ext.v_coh)));
    };
    const double pauli_mu = mu_under(kPauli);
    const double trace_mu = mu_under(kTraceOrthonormal);
    rec.check(std::abs(pauli_mu - trace_mu) <= 1e-10, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"pauli", pauli_mu}, {"trace_orthonormal", trace_mu}};
    });
  }
  return rec.finish();
}

InvariantOutcome complete_entanglement_characterization(const Context& ctx) {
  Recorder rec("measures.complete_entanglement_characterization");
  Rng rng = ctx.rng_for(15);
  std::vector<PureState> states{ghz3(1.0 / std::sqrt(2.0)), ghz4(1.0 / std::sqrt(2.0)),
                                bell_pair_product(), bell()};
  for (int t = 0; t < ctx.options.trials; ++t) {
    states.push_back(random_pure(property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()], rng));
  }
  for (const auto& psi : states) {
    const bool residual_zero = entanglement_residual(psi, psi.shape()).max_abs <= 1e-9;
    const auto purities = single_party_purities(psi.shape(), psi.amplitudes());
    bool mixed = true;
    for (std::size_t a = 0; a < purities.size(); ++a) {
      mixed = mixed && std::abs(purities[a] - 1.0 / psi.shape().dim(a)) <= 1e-9;
    }
    rec.check(residual_zero == mixed, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"residual_zero", residual_zero},
                          {"maximally_mixed", mixed}};
    });
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// states

InvariantOutcome constructors_normalized(const Context& ctx) {
  Recorder rec("states.constructors_normalized");
  Rng rng = ctx.rng_for(16);
  std::vector<PureState> states{w3(), w3_paper_variant(), bell(), bell_pair_product(),
                                biseparable3(BiseparablePair::AB), biseparable3(BiseparablePair::AC),
                                biseparable3(BiseparablePair::BC)};
  for (int t = 0; t < ctx.options.trials; ++t) {
    const double x = rng.uniform();
    states.push_back(ghz3(x));
    states.push_back(ghz4(x, t % 2 ? GhzSign::Minus : GhzSign::Plus));
    states.push_back(random_pure(property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()], rng));
  }
  for (const auto& psi : states) {
    const double err = std::abs(psi.amplitudes().squaredNorm() - 1.0);
    rec.check(err <= 1e-12, [&] { return ordered_json{{"state", describe_state(psi)}, {"error", err}}; });
  }
  return rec.finish();
}

InvariantOutcome ghz3_purities(const Context& ctx) {
  Recorder rec("states.ghz3_reduction_purity");
  Rng rng = ctx.rng_for(17);
  for (int t = 0; t < ctx.options.trials; ++t) {
    const double x = rng.uniform();
    const auto psi = ghz3(x);
    const double expected = std::pow(x, 4) + std::pow(1.0 - x * x, 2);
    for (std::size_t site = 0; site < 3; ++site) {
      const std::array<std::size_t, 1> keep{site};
      const double p = purity(reduced_density(psi, keep));
      rec.check(std::abs(p - expected) <= 1e-12, [&] {
        return ordered_json{{"x", x}, {"site", site}, {"purity", p}, {"expected", expected}};
      });
    }
  }
  return rec.finish();
}

InvariantOutcome random_pure_unitary_invariance(const Context& ctx) {
  Recorder rec("states.random_pure_unitary_invariance");
  Rng rng = ctx.rng_for(18);
  const SystemShape shape({2, 2});
  const CMatrix fixed = random_unitary(4, rng);
  const int samples = 100 * ctx.options.trials;
  double plain = 0.0;
  double rotated = 0.0;
  const std::array<std::size_t, 1> keep{0};
  for (int s = 0; s < samples; ++s) {
    const auto psi = random_pure(shape, rng);
    plain += purity(reduced_density(psi, keep));
    const auto phi = random_pure(shape, rng);
    rotated += purity(reduced_density(PureState::normalized(shape, fixed * phi.amplitudes()), keep));
  }
  plain /= samples;
  rotated /= samples;
  // per-sample purity spread is below 0.15, so 5 sigma of the difference
  const double bound = 5.0 * 0.15 * std::sqrt(2.0 / samples);
  rec.check(std::abs(plain - rotated) <= bound, [&] {
    return ordered_json{{"samples", samples}, {"mean", plain}, {"mean_rotated", rotated}};
  });
  return rec.finish();
}

// ---------------------------------------------------------------------------
// mixed-roof

InvariantOutcome roof_properties(const Context& ctx) {
  Recorder rec("mixed_roof.bound_validity_monotonicity");
  const SystemShape shape({2, 2});
  const int instances = std::max(1, ctx.options.trials / 4);
  for (int t = 0; t < instances; ++t) {
    const auto seed = derive_seed(ctx.options.seed, 1900 + static_cast<std::uint64_t>(t));
    const auto rho = random_density(shape, 2 + t % 2, seed);
    RoofOptions few;
    few.restarts = 1;
    few.seed = seed;
    RoofOptions more = few;
    more.restarts = 3;
    const auto r1 = convex_roof_mu(rho, shape, few);
    const auto r3 = convex_roof_mu(rho, shape, more);
    const double bound = mu_upper_bound(rho, shape);
    const double recon = (r3.best_ensemble.reconstruct() - rho.matrix()).cwiseAbs().maxCoeff();
    double weights = 0.0;
    double weighted = 0.0;
    for (const auto& m : r3.best_ensemble.members) {
      weights += m.weight;
      weighted += m.weight * mu_value(m.state);
    }
    // values are recomputed from the normalized ensemble, so allow roundoff
    const bool ok = r3.value <= bound + 1e-8 && recon <= 1e-8 && std::abs(weights - 1.0) <= 1e-10 &&
                    std::abs(weighted - r3.value) <= 1e-10 &&
                    r3.value <= r1.value + 1e-12;
    rec.check(ok, [&] {
      return ordered_json{{"density_seed", seed}, {"rank", 2 + t % 2}, {"value", r3.value},
                          {"value_one_restart", r1.value}, {"upper_bound", bound},
                          {"reconstruction_error", recon}, {"weight_sum", weights}};
    });
  }
  return rec.finish();
}

InvariantOutcome wootters_consistency(const Context& ctx) {
  Recorder rec("mixed_roof.wootters_pure_consistency");
  Rng rng = ctx.rng_for(20);
  const SystemShape shape({2, 2});
  for (int t = 0; t < ctx.options.trials; ++t) {
    const auto psi = random_pure(shape, rng);
    const double w = wootters_concurrence(DensityMatrix::from_pure(psi));
    const double c = concurrence_bipartite(psi, shape);
    rec.check(std::abs(w - c) <= 1e-10, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"wootters", w}, {"concurrence", c}};
    });
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// cli surface

InvariantOutcome state_file_round_trip(const Context& ctx) {
  Recorder rec("cli.state_file_round_trip");
  Rng rng = ctx.rng_for(21);
  std::vector<PureState> states{w3(), ghz4(0.3, GhzSign::Minus), bell_pair_product()};
  for (int t = 0; t < ctx.options.trials; ++t) {
    states.push_back(random_pure(property_shapes()[static_cast<std::size_t>(t) % property_shapes().size()], rng));
  }
  for (const auto& psi : states) {
    const auto loaded = parse_state_file(state_to_json(psi));
    const double err = (loaded.state.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff();
    rec.check(loaded.state.shape() == psi.shape() && err <= 1e-15, [&] {
      return ordered_json{{"state", describe_state(psi)}, {"error", err}};
    });
  }
  return rec.finish();
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
}

std::string VerifyReport::render() const {
  std::ostringstream out;
  int passed = 0;
  for (const auto& o : outcomes) {
    if (o.passed) {
      ++passed;
      out << "PASS " << o.name << " (" << o.cases << " cases)\n";
    } else {
      out << "FAIL " << o.name << " (" << o.cases << " cases) counterexample: " << o.counterexample << "\n";
    }
  }
  out << passed << "/" << outcomes.size() << " invariants passed\n";
  return out.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
  const Context ctx{options};
  using Suite = InvariantOutcome (*)(const Context&);
  const Suite suites[] = {
      partial_trace_composition,
      bipartite_isospectral,
      eig_trace_and_projectors,
      kron_mixed_product,
      killing_pairing,
      mean_operator_basis_independence,
      casimir_identity,
      mean_length_bounds,
      route_equivalence,
      casimir_decomposition,
      recast_form,
      variance_bound,
      mu_range,
      local_unitary_invariance,
      convention_invariance,
      complete_entanglement_characterization,
      constructors_normalized,
      ghz3_purities,
      random_pure_unitary_invariance,
      roof_properties,
      wootters_consistency,
      state_file_round_trip,
  };
  VerifyReport report;
  for (auto suite : suites) report.outcomes.push_back(suite(ctx));
  return report;
}

}  // namespace entmeter
