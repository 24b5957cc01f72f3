#pragma once

// Mixed-state estimates of mu.
//
// mu_upper_bound evaluates the pure-state formula on the mixed total variance,
// which overestimates entanglement. convex_roof_mu searches decompositions
// rho = sum_i |t_i><t_i| for the smallest sum_i p_i mu(t_i / sqrt p_i),
// p_i = <t_i|t_i>. Every decomposition with m members has the form
// |t_i> = sum_j U_ij sqrt(lambda_j) |e_j> for an m x r isometry U, where
// (lambda_j, e_j) are the r non-zero eigenpairs of rho.

#include <cstdint>
#include <optional>
#include <vector>

#include "entmeter/tensor.hpp"

namespace entmeter {

/// Eigenvalues of rho below this count as zero when determining rank.
inline constexpr double kRankCutoff = 1e-12;

struct EnsembleMember {
  double weight;
  PureState state;
};

struct Ensemble {
  SystemShape shape;
  std::vector<EnsembleMember> members;

  /// sum_i w_i |psi_i><psi_i|
  CMatrix reconstruct() const;
};

struct RoofOptions {
  /// Defaults to rank^2.
  std::optional<int> ensemble_size;
  int restarts = 32;
  int max_iterations = 2000;
  double tolerance = 1e-8;
  std::uint64_t seed = 20240601;
};

struct RoofResult {
  double value = 0.0;
  Ensemble best_ensemble;
  int restarts_used = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  /// Best objective of each restart, in restart order.
  std::vector<double> restart_values;
  /// Best-so-far objective per optimizer iteration of the winning restart.
  std::vector<double> history;
};

double mu_upper_bound(const DensityMatrix& rho, const SystemShape& shape);

/// max(0, l1 - l2 - l3 - l4), l_i the descending square roots of the
/// eigenvalues of sqrt(rho) rho~ sqrt(rho), rho~ = (sy ⊗ sy) rho* (sy ⊗ sy).
double wootters_concurrence(const DensityMatrix& rho);

RoofResult convex_roof_mu(const DensityMatrix& rho, const SystemShape& shape,
                          const RoofOptions& options = {});

/// G^dagger G / Tr(G^dagger G) with G a rank x total_dim complex Gaussian matrix.
DensityMatrix random_density(const SystemShape& shape, int rank, std::uint64_t seed);

/// p |Phi+><Phi+| + (1 - p) I/4.
DensityMatrix werner(double p);

/// Number of eigenvalues above kRankCutoff.
int numerical_rank(const DensityMatrix& rho);

}  // namespace entmeter
