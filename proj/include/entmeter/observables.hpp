#pragma once

// Local operator bases of L = su(H_1) + ... + su(H_n) and the mean operator
// X_psi = sum_a <psi|X_a|psi> X_a built from them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entmeter/tensor.hpp"

namespace entmeter {

enum class ConventionKind { TraceOrthonormal, Pauli, Spin };

/// Normalization of the local generators. All three are rescalings of the
/// trace-orthonormal generalized Gell-Mann basis:
///   TraceOrthonormal  Tr(X_a X_b) = delta_ab
///   Pauli             sigma_x, sigma_y, sigma_z (qubits only, scale sqrt 2)
///   Spin              sigma / 2 (qubits only, scale 1/sqrt 2)
struct BasisConvention {
  ConventionKind kind = ConventionKind::TraceOrthonormal;

  double scale() const;
  bool supports(int d) const { return kind == ConventionKind::TraceOrthonormal || d == 2; }
  std::string_view name() const;

  /// Pauli for all-qubit shapes, TraceOrthonormal otherwise.
  static BasisConvention default_for(const SystemShape& shape);
  /// Accepts "pauli", "spin", "trace-orthonormal".
  static std::optional<BasisConvention> parse(std::string_view name);

  bool operator==(const BasisConvention&) const = default;
};

inline constexpr BasisConvention kTraceOrthonormal{ConventionKind::TraceOrthonormal};
inline constexpr BasisConvention kPauli{ConventionKind::Pauli};
inline constexpr BasisConvention kSpin{ConventionKind::Spin};

/// d^2 - 1 generators ordered as: symmetric E_jk + E_kj (j < k), then
/// antisymmetric i(E_kj - E_jk) (j < k), then the d - 1 diagonal ones.
std::vector<CMatrix> gell_mann_basis(int d, BasisConvention convention);

/// Value of sum_a X_a^2 on C^d: scale^2 (d - 1/d).
double casimir_constant(int d, BasisConvention convention);

CMatrix embed_local(const CMatrix& op, std::size_t site, const SystemShape& shape);

class OperatorBasis {
 public:
  /// Standard generalized Gell-Mann generators on every site.
  OperatorBasis(SystemShape shape, BasisConvention convention);

  /// Custom local generators. Each site must carry d^2 - 1 traceless Hermitian
  /// matrices with Tr(X_a X_b) = scale^2 delta_ab.
  OperatorBasis(SystemShape shape, BasisConvention convention,
                std::vector<std::vector<CMatrix>> local);

  const SystemShape& shape() const noexcept { return shape_; }
  BasisConvention convention() const noexcept { return convention_; }
  const std::vector<CMatrix>& local(std::size_t site) const { return local_.at(site); }
  std::size_t size() const;

 private:
  SystemShape shape_;
  BasisConvention convention_;
  std::vector<std::vector<CMatrix>> local_;
};

struct MeanOperator {
  SystemShape shape;
  CMatrix matrix;
  BasisConvention convention;
};

/// <X_a> for every generator, site-major, in basis order.
std::vector<double> local_expectations(const PureState& psi, const OperatorBasis& basis);

MeanOperator mean_operator(const PureState& psi, const OperatorBasis& basis);

/// <psi|X_psi|psi> = sum_a <X_a>^2.
double mean_operator_expectation(const PureState& psi, const OperatorBasis& basis);

}  // namespace entmeter
