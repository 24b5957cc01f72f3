#include "entmeter/observables.hpp"

#include <array>
#include <cmath>

#include "entmeter/errors.hpp"

namespace entmeter {

namespace {

void check_shape(const SystemShape& a, const SystemShape& b) {
  if (!(a == b)) {
    throw ArgumentError("state shape does not match operator basis shape");
  }
}

}  // namespace

double BasisConvention::scale() const {
  switch (kind) {
    case ConventionKind::Pauli:
      return std::sqrt(2.0);
    case ConventionKind::Spin:
      return 1.0 / std::sqrt(2.0);
    case ConventionKind::TraceOrthonormal:
      break;
  }
  return 1.0;
}

std::string_view BasisConvention::name() const {
  switch (kind) {
    case ConventionKind::Pauli:
      return "pauli";
    case ConventionKind::Spin:
      return "spin";
    case ConventionKind::TraceOrthonormal:
      break;
  }
  return "trace-orthonormal";
}

BasisConvention BasisConvention::default_for(const SystemShape& shape) {
  return shape.all_qubits() ? kPauli : kTraceOrthonormal;
}

std::optional<BasisConvention> BasisConvention::parse(std::string_view name) {
  for (auto c : {kTraceOrthonormal, kPauli, kSpin}) {
    if (c.name() == name) return c;
  }
  return std::nullopt;
}

std::vector<CMatrix> gell_mann_basis(int d, BasisConvention convention) {
  if (d < 2) {
    throw ArgumentError("gell_mann_basis: dimension must be at least 2");
  }
  if (!convention.supports(d)) {
    throw ArgumentError("gell_mann_basis: " + std::string(convention.name()) +
                        " convention is defined only for d = 2");
  }
  // the unscaled matrices below all have Tr(X^2) = 2
  const double factor = convention.scale() / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(d * d - 1));

  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      CMatrix m = CMatrix::Zero(d, d);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      out.push_back(factor * m);
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      CMatrix m = CMatrix::Zero(d, d);
      m(k, j) = i_unit;
      m(j, k) = -i_unit;
      out.push_back(factor * m);
    }
  }
  for (int l = 1; l < d; ++l) {
    CMatrix m = CMatrix::Zero(d, d);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) m(j, j) = norm;
    m(l, l) = -l * norm;
    out.push_back(factor * m);
  }
  return out;
}

double casimir_constant(int d, BasisConvention convention) {
  if (d < 2) {
    throw ArgumentError("casimir_constant: dimension must be at least 2");
  }
  const double s = convention.scale();
  return s * s * (d - 1.0 / d);
}

CMatrix embed_local(const CMatrix& op, std::size_t site, const SystemShape& shape) {
  if (site >= shape.parties()) {
    throw ArgumentError("embed_local: site index out of range");
  }
  const int d = shape.dim(site);
  if (op.rows() != d || op.cols() != d) {
    throw ArgumentError("embed_local: operator order does not match subsystem dimension");
  }
  Eigen::Index left = 1;
  for (std::size_t s = 0; s < site; ++s) left *= shape.dim(s);
  const auto right = static_cast<Eigen::Index>(shape.total_dim()) / (left * d);
  return kron(kron(CMatrix::Identity(left, left), op), CMatrix::Identity(right, right));
}

OperatorBasis::OperatorBasis(SystemShape shape, BasisConvention convention)
    : shape_(std::move(shape)), convention_(convention) {
  local_.reserve(shape_.parties());
  for (int d : shape_.dims()) local_.push_back(gell_mann_basis(d, convention_));
}

OperatorBasis::OperatorBasis(SystemShape shape, BasisConvention convention,
                             std::vector<std::vector<CMatrix>> local)
    : shape_(std::move(shape)), convention_(convention), local_(std::move(local)) {
  if (local_.size() != shape_.parties()) {
    throw ArgumentError("operator basis: one generator list per subsystem required");
  }
  const double norm2 = convention_.scale() * convention_.scale();
  for (std::size_t site = 0; site < local_.size(); ++site) {
    const int d = shape_.dim(site);
    if (!convention_.supports(d)) {
      throw ArgumentError("operator basis: convention incompatible with subsystem dimension");
    }
    const auto& ops = local_[site];
    if (ops.size() != static_cast<std::size_t>(d * d - 1)) {
      throw ArgumentError("operator basis: expected d^2 - 1 generators per subsystem");
    }
    for (std::size_t a = 0; a < ops.size(); ++a) {
      if (ops[a].rows() != d || ops[a].cols() != d) {
        throw ArgumentError("operator basis: generator order does not match subsystem");
      }
      if (hermiticity_defect(ops[a]) > 1e-10 || std::abs(ops[a].trace()) > 1e-10) {
        throw ArgumentError("operator basis: generators must be traceless Hermitian");
      }
      for (std::size_t b = a; b < ops.size(); ++b) {
        const Complex g = (ops[a] * ops[b]).trace();
        const double expected = (a == b) ? norm2 : 0.0;
        if (std::abs(g - expected) > 1e-10) {
          throw ArgumentError("operator basis: generators are not orthonormal under the convention");
        }
      }
    }
  }
}

std::size_t OperatorBasis::size() const {
  std::size_t n = 0;
  for (const auto& ops : local_) n += ops.size();
  return n;
}

std::vector<double> local_expectations(const PureState& psi, const OperatorBasis& basis) {
  check_shape(psi.shape(), basis.shape());
  std::vector<double> out;
  out.reserve(basis.size());
  for (std::size_t site = 0; site < psi.shape().parties(); ++site) {
    const std::array<std::size_t, 1> keep{site};
    const auto rho = reduced_density(psi, keep);
    for (const auto& x : basis.local(site)) out.push_back(expectation(rho, x));
  }
  return out;
}

MeanOperator mean_operator(const PureState& psi, const OperatorBasis& basis) {
  const auto means = local_expectations(psi, basis);
  const auto n = static_cast<Eigen::Index>(psi.shape().total_dim());
  CMatrix total = CMatrix::Zero(n, n);
  std::size_t idx = 0;
  for (std::size_t site = 0; site < psi.shape().parties(); ++site) {
    const int d = psi.shape().dim(site);
    CMatrix local = CMatrix::Zero(d, d);
    for (const auto& x : basis.local(site)) local += means[idx++] * x;
    total += embed_local(local, site, psi.shape());
  }
  return MeanOperator{psi.shape(), std::move(total), basis.convention()};
}

double mean_operator_expectation(const PureState& psi, const OperatorBasis& basis) {
  double acc = 0.0;
  for (double m : local_expectations(psi, basis)) acc += m * m;
  return acc;
}

}  // namespace entmeter
