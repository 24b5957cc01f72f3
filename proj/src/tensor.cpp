#include "entmeter/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entmeter/errors.hpp"

namespace entmeter {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kDensityTolerance = 1e-10;
constexpr double kJacobiThreshold = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

bool all_finite(const CMatrix& m) {
  return m.allFinite();
}

void require_sorted_keep(std::span<const std::size_t> keep, std::size_t parties) {
  if (keep.empty()) {
    throw ArgumentError("partial trace: keep set is empty");
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= parties) {
      throw ArgumentError("partial trace: subsystem index " + std::to_string(keep[i]) +
                          " out of range");
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw ArgumentError("partial trace: keep set must be strictly increasing");
    }
  }
}

// Maps every full basis index to (kept index, traced index).
struct IndexSplit {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
};

IndexSplit split_indices(const SystemShape& shape, std::span<const std::size_t> keep) {
  const std::size_t n = shape.parties();
  std::vector<bool> is_kept(n, false);
  for (auto k : keep) is_kept[k] = true;

  IndexSplit split;
  for (std::size_t s = 0; s < n; ++s) {
    (is_kept[s] ? split.kept_dim : split.traced_dim) *= static_cast<std::size_t>(shape.dim(s));
  }
  const std::size_t total = shape.total_dim();
  split.kept.resize(total);
  split.traced.resize(total);
  std::vector<int> digits(n, 0);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t k = 0;
    std::size_t t = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (is_kept[s]) {
        k = k * static_cast<std::size_t>(shape.dim(s)) + static_cast<std::size_t>(digits[s]);
      } else {
        t = t * static_cast<std::size_t>(shape.dim(s)) + static_cast<std::size_t>(digits[s]);
      }
    }
    split.kept[i] = k;
    split.traced[i] = t;
    for (std::size_t s = n; s-- > 0;) {
      if (++digits[s] < shape.dim(s)) break;
      digits[s] = 0;
    }
  }
  return split;
}

std::vector<std::size_t> sorted_unique(std::span<const std::size_t> keep) {
  std::vector<std::size_t> out(keep.begin(), keep.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_operator(const CMatrix& op, std::size_t order) {
  if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != order) {
    throw ArgumentError("operator order " + std::to_string(op.rows()) + "x" +
                        std::to_string(op.cols()) + " does not match state dimension " +
                        std::to_string(order));
  }
}

double real_checked(Complex value) {
  if (std::abs(value.imag()) > 1e-8) {
    throw NumericError("expectation has imaginary part " + std::to_string(value.imag()) +
                       "; operator is not Hermitian");
  }
  return value.real();
}

}  // namespace

// ---------------------------------------------------------------------------
// SystemShape

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw ArgumentError("system shape must have at least one subsystem");
  }
  for (int d : dims_) {
    if (d < 2) {
      throw ArgumentError("subsystem dimension " + std::to_string(d) + " is below 2");
    }
    total_ *= static_cast<std::size_t>(d);
    if (total_ > kMaxTotalOrder) {
      throw CapacityError("total dimension exceeds " + std::to_string(kMaxTotalOrder));
    }
  }
}

bool SystemShape::all_qubits() const noexcept {
  return std::all_of(dims_.begin(), dims_.end(), [](int d) { return d == 2; });
}

SystemShape SystemShape::restrict_to(std::span<const std::size_t> keep) const {
  std::vector<int> out;
  out.reserve(keep.size());
  for (auto k : keep) out.push_back(dims_.at(k));
  return SystemShape(std::move(out));
}

SystemShape SystemShape::concat(const SystemShape& other) const {
  std::vector<int> out = dims_;
  out.insert(out.end(), other.dims_.begin(), other.dims_.end());
  return SystemShape(std::move(out));
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(SystemShape shape, CVector amplitudes)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != shape_.total_dim()) {
    throw ArgumentError("amplitude count " + std::to_string(amplitudes_.size()) +
                        " does not match total dimension " +
                        std::to_string(shape_.total_dim()));
  }
  if (!amplitudes_.allFinite()) {
    throw ArgumentError("amplitudes must be finite");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw ArgumentError("state is not normalized: squared norm " + std::to_string(norm2));
  }
}

PureState PureState::normalized(SystemShape shape, CVector amplitudes) {
  if (!amplitudes.allFinite()) {
    throw ArgumentError("amplitudes must be finite");
  }
  const double norm = amplitudes.norm();
  if (norm == 0.0) {
    throw ArgumentError("cannot normalize the zero vector");
  }
  amplitudes /= norm;
  return PureState(std::move(shape), std::move(amplitudes));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(TrustedTag, SystemShape shape, CMatrix entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {}

DensityMatrix::DensityMatrix(SystemShape shape, CMatrix entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(shape_.total_dim());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw ArgumentError("density matrix order does not match total dimension");
  }
  if (!all_finite(entries_)) {
    throw ArgumentError("density matrix entries must be finite");
  }
  if ((entries_ - entries_.adjoint()).norm() > kDensityTolerance) {
    throw ArgumentError("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - Complex(1.0, 0.0)) > kDensityTolerance) {
    throw ArgumentError("density matrix trace is not 1");
  }
  const auto eig = hermitian_eig(entries_);
  if (eig.eigenvalues(n - 1) < -kDensityTolerance) {
    throw ArgumentError("density matrix has negative eigenvalue " +
                        std::to_string(eig.eigenvalues(n - 1)));
  }
}

DensityMatrix DensityMatrix::trusted(SystemShape shape, CMatrix entries) {
  return DensityMatrix(TrustedTag{}, std::move(shape), std::move(entries));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const CVector& a = psi.amplitudes();
  return trusted(psi.shape(), a * a.adjoint());
}

// ---------------------------------------------------------------------------
// Products and traces

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t max_order) {
  const auto rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
  const auto cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
  if (rows > max_order || cols > max_order) {
    throw CapacityError("kron result " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds maximum order " + std::to_string(max_order));
  }
  CMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep_in) {
  const auto keep = sorted_unique(keep_in);
  if (keep.size() != keep_in.size()) {
    throw ArgumentError("partial trace: keep set has duplicate indices");
  }
  require_sorted_keep(keep, rho.shape().parties());
  const auto split = split_indices(rho.shape(), keep);

  // full index for (kept, traced)
  std::vector<std::size_t> full(split.kept_dim * split.traced_dim);
  for (std::size_t i = 0; i < full.size(); ++i) {
    full[split.kept[i] * split.traced_dim + split.traced[i]] = i;
  }

  const CMatrix& m = rho.matrix();
  const auto kd = static_cast<Eigen::Index>(split.kept_dim);
  CMatrix out = CMatrix::Zero(kd, kd);
  for (std::size_t k1 = 0; k1 < split.kept_dim; ++k1) {
    for (std::size_t k2 = 0; k2 < split.kept_dim; ++k2) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < split.traced_dim; ++t) {
        acc += m(static_cast<Eigen::Index>(full[k1 * split.traced_dim + t]),
                 static_cast<Eigen::Index>(full[k2 * split.traced_dim + t]));
      }
      out(static_cast<Eigen::Index>(k1), static_cast<Eigen::Index>(k2)) = acc;
    }
  }
  return DensityMatrix::trusted(rho.shape().restrict_to(keep), std::move(out));
}

DensityMatrix reduced_density(const PureState& psi, std::span<const std::size_t> keep_in) {
  const auto keep = sorted_unique(keep_in);
  if (keep.size() != keep_in.size()) {
    throw ArgumentError("partial trace: keep set has duplicate indices");
  }
  require_sorted_keep(keep, psi.shape().parties());
  const auto split = split_indices(psi.shape(), keep);

  // rho_keep = M M^dagger with M(k, t) = psi(k, t)
  CMatrix reshaped(static_cast<Eigen::Index>(split.kept_dim),
                   static_cast<Eigen::Index>(split.traced_dim));
  for (std::size_t i = 0; i < psi.shape().total_dim(); ++i) {
    reshaped(static_cast<Eigen::Index>(split.kept[i]), static_cast<Eigen::Index>(split.traced[i])) =
        psi[i];
  }
  CMatrix out = reshaped * reshaped.adjoint();
  return DensityMatrix::trusted(psi.shape().restrict_to(keep), std::move(out));
}

double purity(const DensityMatrix& rho) {
  return rho.matrix().squaredNorm();
}

std::vector<double> single_party_purities(const SystemShape& shape, const CVector& amplitudes) {
  std::vector<double> out;
  out.reserve(shape.parties());
  std::size_t left = 1;
  for (std::size_t site = 0; site < shape.parties(); ++site) {
    const auto d = static_cast<std::size_t>(shape.dim(site));
    const std::size_t right = shape.total_dim() / (left * d);
    double acc = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        Complex rho_ab = 0.0;
        for (std::size_t l = 0; l < left; ++l) {
          const std::size_t base = l * d * right;
          for (std::size_t r = 0; r < right; ++r) {
            rho_ab += amplitudes(static_cast<Eigen::Index>(base + a * right + r)) *
                      std::conj(amplitudes(static_cast<Eigen::Index>(base + b * right + r)));
          }
        }
        acc += std::norm(rho_ab);
      }
    }
    out.push_back(acc);
    left *= d;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eigensolver

double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).norm();
}

HermitianEigenResult hermitian_eig(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ArgumentError("hermitian_eig: matrix is not square");
  }
  const double scale = m.norm();
  if (!std::isfinite(scale)) {
    throw ArgumentError("hermitian_eig: matrix entries must be finite");
  }
  if (hermiticity_defect(m) > 1e-8 * scale) {
    throw ArgumentError("hermitian_eig: matrix is not Hermitian");
  }

  const Eigen::Index n = m.rows();
  CMatrix a = 0.5 * (m + m.adjoint());
  CMatrix v = CMatrix::Identity(n, n);

  auto off_norm = [&a, n] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return std::sqrt(s);
  };

  const double threshold = kJacobiThreshold * scale;
  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > kJacobiMaxSweeps) {
      throw NumericError("hermitian_eig: Jacobi did not converge in " +
                         std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq_abs = std::abs(a(p, q));
        if (apq_abs == 0.0) continue;
        // phase that makes the (p,q) element real, then a real Jacobi rotation
        const Complex phase = a(p, q) / apq_abs;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * apq_abs);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex cp = std::conj(phase);
        // U restricted to (p,q): [[c, s], [-s*conj(phase), c*conj(phase)]]
        const Complex u_pp = c;
        const Complex u_pq = s;
        const Complex u_qp = -s * cp;
        const Complex u_qq = c * cp;

        for (Eigen::Index k = 0; k < n; ++k) {  // A <- A U
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // A <- U^dagger A
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {  // V <- V U
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * u_pp + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * u_qq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() > a(j, j).real();
  });
  HermitianEigenResult out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

CMatrix matrix_sqrt_psd(const CMatrix& m) {
  const auto eig = hermitian_eig(m);
  const Eigen::Index n = m.rows();
  RVector roots(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues(k);
    if (lambda < -1e-8) {
      throw ArgumentError("matrix_sqrt_psd: eigenvalue " + std::to_string(lambda) +
                          " is significantly negative");
    }
    roots(k) = std::sqrt(std::max(lambda, 0.0));
  }
  return eig.eigenvectors * roots.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
}

// ---------------------------------------------------------------------------
// Observables on states

CVector apply_local(const CMatrix& op, std::size_t site, const SystemShape& shape,
                    const CVector& amplitudes) {
  if (site >= shape.parties()) {
    throw ArgumentError("site index " + std::to_string(site) + " out of range");
  }
  const auto d = static_cast<std::size_t>(shape.dim(site));
  check_operator(op, d);
  std::size_t left = 1;
  for (std::size_t s = 0; s < site; ++s) left *= static_cast<std::size_t>(shape.dim(s));
  const std::size_t right = shape.total_dim() / (left * d);

  CVector out = CVector::Zero(amplitudes.size());
  for (std::size_t l = 0; l < left; ++l) {
    const std::size_t base = l * d * right;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        const Complex coef = op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        if (coef == Complex(0.0, 0.0)) continue;
        for (std::size_t r = 0; r < right; ++r) {
          out(static_cast<Eigen::Index>(base + a * right + r)) +=
              coef * amplitudes(static_cast<Eigen::Index>(base + b * right + r));
        }
      }
    }
  }
  return out;
}

double expectation(const PureState& psi, const CMatrix& op) {
  check_operator(op, psi.shape().total_dim());
  return real_checked(psi.amplitudes().dot(op * psi.amplitudes()));
}

double expectation(const DensityMatrix& rho, const CMatrix& op) {
  check_operator(op, rho.shape().total_dim());
  return real_checked((rho.matrix() * op).trace());
}

double variance(const PureState& psi, const CMatrix& op) {
  check_operator(op, psi.shape().total_dim());
  const CVector x_psi = op * psi.amplitudes();
  const double mean = real_checked(psi.amplitudes().dot(x_psi));
  return std::max(0.0, x_psi.squaredNorm() - mean * mean);
}

double variance(const DensityMatrix& rho, const CMatrix& op) {
  check_operator(op, rho.shape().total_dim());
  const double mean = expectation(rho, op);
  const double second = real_checked((rho.matrix() * op * op).trace());
  return std::max(0.0, second - mean * mean);
}

}  // namespace entmeter
