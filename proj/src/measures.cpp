#include "entmeter/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "entmeter/errors.hpp"

namespace entmeter {

namespace {

void check_shape(const PureState& psi, const SystemShape& shape) {
  if (!(psi.shape() == shape)) {
    throw ArgumentError("state shape does not match the requested shape");
  }
}

void check_convention(const SystemShape& shape, BasisConvention convention) {
  for (int d : shape.dims()) {
    if (!convention.supports(d)) {
      throw ArgumentError(std::string(convention.name()) +
                          " convention requires qubit subsystems");
    }
  }
}

double mu_denominator(const SystemShape& shape) {
  double den = 0.0;
  for (int d : shape.dims()) den += 1.0 - 1.0 / d;
  return den;
}

CMatrix spin(Axis axis) {
  return 0.5 * pauli(axis);
}

}  // namespace

const CMatrix& pauli(Axis axis) {
  static const std::array<CMatrix, 3> matrices = [] {
    const Complex i(0.0, 1.0);
    CMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    y << 0.0, -i, i, 0.0;
    z << 1.0, 0.0, 0.0, -1.0;
    return std::array<CMatrix, 3>{x, y, z};
  }();
  return matrices[static_cast<std::size_t>(axis)];
}

double total_variance_direct(const PureState& psi, const OperatorBasis& basis) {
  if (!(psi.shape() == basis.shape())) {
    throw ArgumentError("state shape does not match operator basis shape");
  }
  const CVector& amps = psi.amplitudes();
  double total = 0.0;
  for (std::size_t site = 0; site < psi.shape().parties(); ++site) {
    for (const auto& x : basis.local(site)) {
      const CVector x_psi = apply_local(x, site, psi.shape(), amps);
      const double mean = amps.dot(x_psi).real();
      total += x_psi.squaredNorm() - mean * mean;
    }
  }
  return total;
}

double total_variance_closed(const PureState& psi, const SystemShape& shape,
                             BasisConvention convention) {
  check_shape(psi, shape);
  check_convention(shape, convention);
  const double s2 = convention.scale() * convention.scale();
  const auto purities = single_party_purities(shape, psi.amplitudes());
  double total = 0.0;
  for (std::size_t a = 0; a < shape.parties(); ++a) {
    total += s2 * (shape.dim(a) - purities[a]);
  }
  return total;
}

VarianceExtremes variance_extremes(const SystemShape& shape, BasisConvention convention) {
  check_convention(shape, convention);
  const double s2 = convention.scale() * convention.scale();
  VarianceExtremes out{0.0, 0.0, convention};
  for (int d : shape.dims()) {
    out.v_coh += s2 * (d - 1.0);
    out.v_ent += s2 * (d - 1.0 / d);
  }
  return out;
}

double mu_value(const SystemShape& shape, const CVector& amplitudes) {
  const double weight = amplitudes.squaredNorm();
  if (weight == 0.0) return 0.0;
  const auto purities = single_party_purities(shape, amplitudes);
  double num = 0.0;
  for (double p : purities) num += weight * weight - p;
  return std::sqrt(std::max(0.0, num / mu_denominator(shape)));
}

double mu_value(const PureState& psi) {
  return std::min(1.0, mu_value(psi.shape(), psi.amplitudes()));
}

EntanglementReport mu(const PureState& psi, const SystemShape& shape,
                      std::optional<BasisConvention> convention) {
  check_shape(psi, shape);
  const BasisConvention conv = convention.value_or(BasisConvention::default_for(shape));
  check_convention(shape, conv);

  EntanglementReport report;
  report.convention = conv;
  report.purities = single_party_purities(shape, psi.amplitudes());
  double num = 0.0;
  for (double p : report.purities) num += 1.0 - p;
  report.mu = std::clamp(std::sqrt(std::max(0.0, num / mu_denominator(shape))), 0.0, 1.0);
  report.extremes = variance_extremes(shape, conv);
  report.total_variance = total_variance_closed(psi, shape, conv);
  report.residual_max = entanglement_residual(psi, shape).max_abs;
  return report;
}

double concurrence_bipartite(const PureState& psi, const SystemShape& shape) {
  check_shape(psi, shape);
  if (shape.parties() != 2 || shape.dim(0) != shape.dim(1)) {
    throw ArgumentError("concurrence requires a bipartite d x d shape");
  }
  const double d = shape.dim(0);
  const double purity_a = single_party_purities(shape, psi.amplitudes())[0];
  return std::clamp(std::sqrt(std::max(0.0, d / (d - 1.0) * (1.0 - purity_a))), 0.0, 1.0);
}

double three_tangle(const PureState& psi) {
  if (!(psi.shape() == SystemShape({2, 2, 2}))) {
    throw ArgumentError("three_tangle requires a three-qubit state");
  }
  auto a = [&psi](int l, int m, int n) { return psi[static_cast<std::size_t>(4 * l + 2 * m + n)]; };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1) +
                     a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1) +
                     a(0, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) +
                     a(0, 0, 1) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 0) +
                     a(0, 1, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) +
                     a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0) * a(1, 1, 1);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double total_covariance(const PureState& psi, const SystemShape& shape) {
  check_shape(psi, shape);
  if (!shape.all_qubits()) {
    throw ArgumentError("total_covariance requires qubit subsystems");
  }
  const CVector& amps = psi.amplitudes();
  const std::size_t n = shape.parties();
  double total = 0.0;
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    const CMatrix& s = pauli(axis);
    std::vector<CVector> applied;
    std::vector<double> means;
    applied.reserve(n);
    for (std::size_t site = 0; site < n; ++site) {
      applied.push_back(apply_local(s, site, shape, amps));
      means.push_back(amps.dot(applied.back()).real());
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        // <s^j s^k> = <s^j psi | s^k psi>
        total += applied[j].dot(applied[k]).real() - means[j] * means[k];
      }
    }
  }
  return total;
}

ResidualResult entanglement_residual(const PureState& psi, const SystemShape& shape) {
  check_shape(psi, shape);
  const OperatorBasis basis(shape, BasisConvention::default_for(shape));
  ResidualResult out;
  out.expectations = local_expectations(psi, basis);
  double sum2 = 0.0;
  for (double e : out.expectations) {
    out.max_abs = std::max(out.max_abs, std::abs(e));
    sum2 += e * e;
  }
  out.l2 = std::sqrt(sum2);
  return out;
}

bool is_completely_entangled(const PureState& psi, double tolerance) {
  return entanglement_residual(psi, psi.shape()).max_abs <= tolerance;
}

UncertaintyCheckResult uncertainty_check(const DensityMatrix& rho, Axis j, Axis k) {
  if (j == k) {
    throw ArgumentError("uncertainty_check requires two distinct axes");
  }
  if (!(rho.shape() == SystemShape({2}))) {
    throw ArgumentError("uncertainty_check requires a single-qubit state");
  }
  const CMatrix& m = rho.matrix();
  auto mean = [&m](const CMatrix& op) { return (m * op).trace(); };

  const CMatrix sj = spin(j);
  const CMatrix sk = spin(k);
  const double ej = mean(sj).real();
  const double ek = mean(sk).real();
  const double vj = mean(sj * sj).real() - ej * ej;
  const double vk = mean(sk * sk).real() - ek * ek;
  const double cov = 0.5 * mean(sj * sk + sk * sj).real() - ej * ek;
  const Complex commutator = mean(sj * sk - sk * sj);

  UncertaintyCheckResult out;
  out.lhs = vj * vk - cov * cov;
  out.rhs = 0.25 * std::norm(commutator);
  out.holds = out.lhs >= out.rhs - 1e-10;
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    const double e = mean(spin(axis)).real();
    out.mean_length += e * e;
  }
  return out;
}

UncertaintyCheckResult uncertainty_check(const PureState& psi, Axis j, Axis k) {
  return uncertainty_check(DensityMatrix::from_pure(psi), j, k);
}

}  // namespace entmeter
