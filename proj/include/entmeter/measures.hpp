#pragma once

// Entanglement functionals of pure states built from total variance of the
// local generators.
//
// For a shape with local dimensions d_A and convention scale s,
//   V(psi)  = sum_A s^2 (d_A - Tr rho_A^2)
//   V_coh   = sum_A s^2 (d_A - 1)         (product states)
//   V_ent   = sum_A s^2 (d_A - 1/d_A)     (all reductions maximally mixed)
//   mu^2    = (V - V_coh) / (V_ent - V_coh)
// so mu does not depend on the convention.

#include <optional>
#include <vector>

#include "entmeter/observables.hpp"
#include "entmeter/tensor.hpp"

namespace entmeter {

/// Tolerance on the largest |<X_a>| for calling a state completely entangled.
inline constexpr double kCompleteEntanglementTolerance = 1e-9;

struct VarianceExtremes {
  double v_coh = 0.0;
  double v_ent = 0.0;
  BasisConvention convention;
};

struct EntanglementReport {
  double mu = 0.0;
  double total_variance = 0.0;
  VarianceExtremes extremes;
  std::vector<double> purities;
  double residual_max = 0.0;
  BasisConvention convention;
};

struct ResidualResult {
  std::vector<double> expectations;
  double max_abs = 0.0;
  double l2 = 0.0;
};

enum class Axis { X = 0, Y = 1, Z = 2 };

struct UncertaintyCheckResult {
  double lhs = 0.0;  // V(S_j) V(S_k) - Cov(S_j, S_k)^2
  double rhs = 0.0;  // |<[S_j, S_k]>|^2 / 4
  bool holds = false;
  double mean_length = 0.0;  // sum_i <S_i>^2
};

/// Sum over all embedded generators of <X^2> - <X>^2, evaluated by applying
/// each generator to the state vector.
double total_variance_direct(const PureState& psi, const OperatorBasis& basis);

/// sum_A s^2 (d_A - Tr rho_A^2).
double total_variance_closed(const PureState& psi, const SystemShape& shape,
                             BasisConvention convention);

VarianceExtremes variance_extremes(const SystemShape& shape, BasisConvention convention);

/// Full report. The convention affects only total_variance and extremes.
EntanglementReport mu(const PureState& psi, const SystemShape& shape,
                      std::optional<BasisConvention> convention = std::nullopt);

/// mu alone, from single-party purities. Accepts unnormalized amplitudes and
/// returns |psi|^2 * mu(psi / |psi|); zero vectors give 0.
double mu_value(const SystemShape& shape, const CVector& amplitudes);
double mu_value(const PureState& psi);

/// sqrt(d/(d-1) (1 - Tr rho_A^2)) for a d x d bipartite state.
double concurrence_bipartite(const PureState& psi, const SystemShape& shape);

/// Degree-4 hyperdeterminant polynomial of a three-qubit state.
double three_tangle(const PureState& psi);

/// Sum over i in {x,y,z} and pairs of parties J < J' of
/// <s_i^J s_i^J'> - <s_i^J><s_i^J'>, with Pauli matrices s. Each pair is
/// counted once; for W this equals V - V_coh in the Pauli convention.
double total_covariance(const PureState& psi, const SystemShape& shape);

/// <X_a> for every local generator (Pauli for all-qubit shapes, trace-orthonormal
/// otherwise). For four qubits the entries are the twelve expectations
/// sigma_x^(A..D), sigma_y^(A..D), sigma_z^(A..D) in site-major order.
ResidualResult entanglement_residual(const PureState& psi, const SystemShape& shape);

bool is_completely_entangled(const PureState& psi,
                             double tolerance = kCompleteEntanglementTolerance);

/// Schrodinger relation for spin-1/2 operators S = sigma/2 on one qubit.
UncertaintyCheckResult uncertainty_check(const DensityMatrix& rho, Axis j, Axis k);
UncertaintyCheckResult uncertainty_check(const PureState& psi, Axis j, Axis k);

/// sigma_x, sigma_y, sigma_z.
const CMatrix& pauli(Axis axis);

}  // namespace entmeter
