#include "entmeter/mixed_roof.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "entmeter/errors.hpp"
#include "entmeter/measures.hpp"
#include "entmeter/nelder_mead.hpp"
#include "entmeter/observables.hpp"
#include "entmeter/random.hpp"

namespace entmeter {

namespace {

void check_shape(const DensityMatrix& rho, const SystemShape& shape) {
  if (!(rho.shape() == shape)) {
    throw ArgumentError("density matrix shape does not match the requested shape");
  }
}

constexpr int kMaxPolishCycles = 60;
constexpr double kPolishStep = 0.3;
constexpr double kPolishImprovement = 1e-12;

std::size_t isometry_parameter_count(int m, int r) {
  std::size_t rotations = 0;
  for (int j = 0; j < r; ++j) rotations += static_cast<std::size_t>(m - 1 - j);
  return 2 * rotations + static_cast<std::size_t>(r);
}

// m x r isometry: diagonal phases on the top r x r block, then complex Givens
// rotations on rows (j, k), j < r, j < k < m.
CMatrix build_isometry(const Eigen::VectorXd& params, int m, int r) {
  CMatrix u = CMatrix::Zero(m, r);
  Eigen::Index p = static_cast<Eigen::Index>(params.size()) - r;
  for (int j = 0; j < r; ++j) u(j, j) = std::polar(1.0, params(p + j));

  p = 0;
  for (int j = r - 1; j >= 0; --j) {
    for (int k = j + 1; k < m; ++k) {
      const double theta = params(p++);
      const Complex phase = std::polar(1.0, params(p++));
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      for (int col = 0; col < r; ++col) {
        const Complex uj = u(j, col);
        const Complex uk = u(k, col);
        u(j, col) = c * uj - std::conj(phase) * s * uk;
        u(k, col) = phase * s * uj + c * uk;
      }
    }
  }
  return u;
}

struct EigenEnsemble {
  int rank = 0;
  CMatrix scaled_vectors;  // D x r, columns sqrt(lambda_j) e_j
};

EigenEnsemble eigen_ensemble(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  EigenEnsemble out;
  while (out.rank < eig.eigenvalues.size() && eig.eigenvalues(out.rank) > kRankCutoff) ++out.rank;
  out.scaled_vectors = eig.eigenvectors.leftCols(out.rank);
  for (int j = 0; j < out.rank; ++j) out.scaled_vectors.col(j) *= std::sqrt(eig.eigenvalues(j));
  return out;
}

}  // namespace

CMatrix Ensemble::reconstruct() const {
  const auto n = static_cast<Eigen::Index>(shape.total_dim());
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& member : members) {
    out += member.weight * member.state.amplitudes() * member.state.amplitudes().adjoint();
  }
  return out;
}

int numerical_rank(const DensityMatrix& rho) {
  return eigen_ensemble(rho).rank;
}

double mu_upper_bound(const DensityMatrix& rho, const SystemShape& shape) {
  check_shape(rho, shape);
  const auto extremes = variance_extremes(shape, kTraceOrthonormal);
  double total = 0.0;
  for (std::size_t site = 0; site < shape.parties(); ++site) {
    const std::array<std::size_t, 1> keep{site};
    const auto reduced = partial_trace(rho, keep);
    for (const auto& x : gell_mann_basis(shape.dim(site), kTraceOrthonormal)) {
      total += variance(reduced, x);
    }
  }
  const double ratio = (total - extremes.v_coh) / (extremes.v_ent - extremes.v_coh);
  return std::sqrt(std::clamp(ratio, 0.0, 1.0));
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (!(rho.shape() == SystemShape({2, 2}))) {
    throw ArgumentError("wootters_concurrence requires a two-qubit density matrix");
  }
  // The nonzero spectrum of rho * rho~ equals that of W^dag rho~ W with
  // W = E sqrt(Lambda) restricted to the numerical support of rho.
  const auto base = eigen_ensemble(rho);
  const CMatrix yy = kron(pauli(Axis::Y), pauli(Axis::Y));
  const CMatrix flipped = yy * rho.matrix().conjugate() * yy;
  CMatrix r = base.scaled_vectors.adjoint() * flipped * base.scaled_vectors;
  r = 0.5 * (r + r.adjoint());
  const auto eig = hermitian_eig(r);
  std::array<double, 4> l{};
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    l[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, eig.eigenvalues(i)));
  }
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

RoofResult convex_roof_mu(const DensityMatrix& rho, const SystemShape& shape,
                          const RoofOptions& options) {
  check_shape(rho, shape);
  if (options.restarts < 1) {
    throw ArgumentError("convex_roof_mu: at least one restart is required");
  }
  const auto base = eigen_ensemble(rho);
  const int r = base.rank;
  if (r == 0) {
    throw ArgumentError("convex_roof_mu: density matrix has no eigenvalue above the rank cutoff");
  }
  const int m = options.ensemble_size.value_or(r * r);
  if (m < r) {
    throw ArgumentError("convex_roof_mu: ensemble size " + std::to_string(m) +
                        " is below rank " + std::to_string(r));
  }

  const CMatrix basis_t = base.scaled_vectors.transpose();  // r x D
  auto members = [&](const Eigen::VectorXd& params) -> CMatrix {
    return build_isometry(params, m, r) * basis_t;  // row i is |t_i>
  };
  const Objective objective = [&](const Eigen::VectorXd& params) {
    const CMatrix t = members(params);
    double total = 0.0;
    for (Eigen::Index i = 0; i < t.rows(); ++i) total += mu_value(shape, t.row(i).transpose());
    return total;
  };

  const auto n_params = static_cast<Eigen::Index>(isometry_parameter_count(m, r));
  NelderMeadOptions nm;
  nm.max_iterations = options.max_iterations;
  nm.tolerance = options.tolerance;

  // Re-seeds the simplex around the incumbent until a cycle stops improving.
  auto polish = [&](NelderMeadResult run) {
    bool stalled = false;
    for (int cycle = 0; cycle < kMaxPolishCycles && !stalled; ++cycle) {
      NelderMeadOptions again = nm;
      again.initial_step = kPolishStep;
      auto next = nelder_mead(objective, run.x, again);
      stalled = !(next.value < run.value - kPolishImprovement);
      if (next.value <= run.value) {
        run.history.insert(run.history.end(), next.history.begin(), next.history.end());
        run.x = std::move(next.x);
        run.value = next.value;
        run.iterations += next.iterations;
        run.evaluations += next.evaluations;
      }
    }
    run.converged = run.converged || stalled;
    return run;
  };

  std::vector<double> restart_values;
  NelderMeadResult best;
  for (int k = 0; k < options.restarts; ++k) {
    Eigen::VectorXd start = Eigen::VectorXd::Zero(n_params);
    if (k > 0) {
      Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(k)));
      for (Eigen::Index i = 0; i < n_params; ++i) start(i) = 2.0 * std::numbers::pi * rng.uniform();
    }
    auto run = nelder_mead(objective, start, nm);
    restart_values.push_back(run.value);
    // strict improvement keeps ties at the lowest restart index
    if (k == 0 || run.value < best.value) best = polish(std::move(run));
  }

  const CMatrix t = members(best.x);
  double weight_sum = 0.0;
  for (Eigen::Index i = 0; i < t.rows(); ++i) weight_sum += t.row(i).squaredNorm();
  Ensemble ensemble{shape, {}};
  double value = 0.0;
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    const double p = t.row(i).squaredNorm();
    if (p <= kRankCutoff * kRankCutoff) continue;
    auto state = PureState::normalized(shape, t.row(i).transpose());
    const double w = p / weight_sum;
    value += w * mu_value(state);
    ensemble.members.push_back({w, std::move(state)});
  }
  return RoofResult{std::clamp(value, 0.0, 1.0), std::move(ensemble), options.restarts,
                    best.converged, options.seed, std::move(restart_values),
                    std::move(best.history)};
}

DensityMatrix random_density(const SystemShape& shape, int rank, std::uint64_t seed) {
  const auto n = static_cast<int>(shape.total_dim());
  if (rank < 1 || rank > n) {
    throw ArgumentError("random_density: rank must lie in [1, " + std::to_string(n) + "]");
  }
  Rng rng(seed);
  CMatrix g(rank, n);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  CMatrix rho = g.adjoint() * g;
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(shape, std::move(rho));
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError("werner: p must lie in [0, 1]");
  }
  CVector phi = CVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  CMatrix rho = p * phi * phi.adjoint() + (1.0 - p) * 0.25 * CMatrix::Identity(4, 4);
  return DensityMatrix(SystemShape({2, 2}), std::move(rho));
}

}  // namespace entmeter
