#pragma once

// Dense complex linear algebra over tensor-product Hilbert spaces.
//
// Basis order is lexicographic with subsystem 0 as the most significant
// factor: for dims [2,2,2] the index of |l m n> is 4*l + 2*m + n.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace entmeter {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Upper bound on any matrix order handled by the library.
inline constexpr std::size_t kMaxTotalOrder = 4096;

class SystemShape {
 public:
  explicit SystemShape(std::vector<int> dims);

  const std::vector<int>& dims() const noexcept { return dims_; }
  int dim(std::size_t site) const { return dims_.at(site); }
  std::size_t parties() const noexcept { return dims_.size(); }
  std::size_t total_dim() const noexcept { return total_; }
  bool all_qubits() const noexcept;

  /// Dims of the kept subsystems, in original order. `keep` must be sorted.
  SystemShape restrict_to(std::span<const std::size_t> keep) const;
  SystemShape concat(const SystemShape& other) const;

  bool operator==(const SystemShape& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::size_t total_ = 1;
};

class PureState {
 public:
  /// Requires unit norm within 1e-12.
  PureState(SystemShape shape, CVector amplitudes);

  /// Rescales a non-zero vector to unit norm.
  static PureState normalized(SystemShape shape, CVector amplitudes);

  const SystemShape& shape() const noexcept { return shape_; }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

 private:
  SystemShape shape_;
  CVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates hermiticity and unit trace (1e-10) and eigenvalues >= -1e-10.
  DensityMatrix(SystemShape shape, CMatrix entries);

  /// Skips validation. Only for matrices that hold the invariants by construction.
  static DensityMatrix trusted(SystemShape shape, CMatrix entries);

  static DensityMatrix from_pure(const PureState& psi);

  const SystemShape& shape() const noexcept { return shape_; }
  const CMatrix& matrix() const noexcept { return entries_; }

 private:
  struct TrustedTag {};
  DensityMatrix(TrustedTag, SystemShape shape, CMatrix entries);

  SystemShape shape_;
  CMatrix entries_;
};

struct HermitianEigenResult {
  RVector eigenvalues;   // descending
  CMatrix eigenvectors;  // columns, unitary
};

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t max_order = kMaxTotalOrder);

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

/// Reduced state of |psi><psi| without forming the full projector.
DensityMatrix reduced_density(const PureState& psi, std::span<const std::size_t> keep);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Tr(rho_A^2) for every single-party reduction, from raw (possibly unnormalized) amplitudes.
std::vector<double> single_party_purities(const SystemShape& shape, const CVector& amplitudes);

/// Cyclic complex Jacobi. Throws ArgumentError on non-Hermitian input and
/// NumericError when 100 sweeps do not reach the off-diagonal threshold.
HermitianEigenResult hermitian_eig(const CMatrix& m);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [-1e-8, 0) are clamped to zero; anything more negative is rejected.
CMatrix matrix_sqrt_psd(const CMatrix& m);

/// (I ⊗ ... ⊗ op ⊗ ... ⊗ I) applied to a state vector, op acting on `site`.
CVector apply_local(const CMatrix& op, std::size_t site, const SystemShape& shape,
                    const CVector& amplitudes);

double expectation(const PureState& psi, const CMatrix& op);
double expectation(const DensityMatrix& rho, const CMatrix& op);

double variance(const PureState& psi, const CMatrix& op);
double variance(const DensityMatrix& rho, const CMatrix& op);

double hermiticity_defect(const CMatrix& m);

}  // namespace entmeter
