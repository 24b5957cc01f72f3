#include <gtest/gtest.h>

#include <array>

#include "entmeter/errors.hpp"
#include "entmeter/tensor.hpp"
#include "oracles.hpp"

using namespace entmeter;

namespace {

DensityMatrix random_rho(const SystemShape& shape, std::mt19937_64& gen, int rank) {
  const auto n = static_cast<int>(shape.total_dim());
  CMatrix m = CMatrix::Zero(n, n);
  for (int k = 0; k < rank; ++k) {
    const CVector v = oracle::random_vector(n, gen);
    m += (k + 1.0) * v * v.adjoint();
  }
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(shape, m);
}

}  // namespace

TEST(SystemShape, RejectsBadDims) {
  EXPECT_THROW(SystemShape({}), ArgumentError);
  EXPECT_THROW(SystemShape({2, 1}), ArgumentError);
  EXPECT_THROW(SystemShape({64, 65}), CapacityError);
  EXPECT_NO_THROW(SystemShape({64, 64}));
}

TEST(SystemShape, RestrictAndConcat) {
  const SystemShape s({2, 3, 4});
  const std::array<std::size_t, 2> keep{0, 2};
  EXPECT_EQ(s.restrict_to(keep).dims(), (std::vector<int>{2, 4}));
  EXPECT_EQ(s.concat(SystemShape({5})).total_dim(), 120u);
  EXPECT_FALSE(s.all_qubits());
  EXPECT_TRUE(SystemShape({2, 2}).all_qubits());
}

TEST(PureState, NormalizationContract) {
  const SystemShape s({2});
  CVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(PureState(s, v), ArgumentError);
  const auto psi = PureState::normalized(s, v);
  EXPECT_NEAR(psi.amplitudes().norm(), 1.0, 1e-15);
  EXPECT_THROW(PureState::normalized(s, CVector::Zero(2)), ArgumentError);
  EXPECT_THROW(PureState(s, CVector::Zero(3)), ArgumentError);
}

TEST(DensityMatrix, Validation) {
  const SystemShape s({2});
  CMatrix m = CMatrix::Identity(2, 2) * 0.5;
  EXPECT_NO_THROW(DensityMatrix(s, m));
  CMatrix bad_trace = CMatrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix(s, bad_trace), ArgumentError);
  CMatrix non_hermitian = m;
  non_hermitian(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(s, non_hermitian), ArgumentError);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(s, negative), ArgumentError);
}

TEST(PartialTrace, MatchesBruteForceOracle) {
  std::mt19937_64 gen(11);
  const std::vector<int> dims{2, 3, 2};
  const SystemShape shape(dims);
  const std::vector<std::vector<std::size_t>> keeps{{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1}};
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = random_rho(shape, gen, 3);
    for (const auto& keep : keeps) {
      const auto got = partial_trace(rho, keep);
      const CMatrix want = oracle::partial_trace(rho.matrix(), dims, keep);
      EXPECT_LT((got.matrix() - want).cwiseAbs().maxCoeff(), 1e-14);
      EXPECT_EQ(got.shape(), shape.restrict_to(keep));
    }
  }
}

TEST(PartialTrace, KeepAllIsIdentityMap) {
  std::mt19937_64 gen(12);
  const SystemShape shape({2, 2});
  const auto rho = random_rho(shape, gen, 2);
  const std::array<std::size_t, 2> keep{0, 1};
  EXPECT_LT((partial_trace(rho, keep).matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PartialTrace, RejectsBadKeepSets) {
  const auto rho = DensityMatrix(SystemShape({2, 2}), CMatrix::Identity(4, 4) * 0.25);
  EXPECT_THROW(partial_trace(rho, std::vector<std::size_t>{}), ArgumentError);
  EXPECT_THROW(partial_trace(rho, std::vector<std::size_t>{2}), ArgumentError);
  EXPECT_THROW(partial_trace(rho, std::vector<std::size_t>{1, 1}), ArgumentError);
}

TEST(ReducedDensity, AgreesWithPartialTraceOfProjector) {
  std::mt19937_64 gen(13);
  const std::vector<int> dims{3, 2, 2};
  const SystemShape shape(dims);
  const PureState psi(shape, oracle::random_vector(12, gen));
  for (const std::vector<std::size_t> keep : {std::vector<std::size_t>{0}, {1, 2}, {0, 2}}) {
    const CMatrix want = oracle::partial_trace(psi.amplitudes() * psi.amplitudes().adjoint(), dims, keep);
    EXPECT_LT((reduced_density(psi, keep).matrix() - want).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Purity, SinglePartyPuritiesMatchOracle) {
  std::mt19937_64 gen(14);
  const std::vector<int> dims{2, 3, 4};
  const CVector v = oracle::random_vector(24, gen);
  const auto got = single_party_purities(SystemShape(dims), v);
  const auto want = oracle::purities(v, dims);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-14);
}

TEST(HermitianEig, MatchesEigenSolver) {
  std::mt19937_64 gen(15);
  for (int n : {1, 2, 3, 5, 8, 16}) {
    const CMatrix h = oracle::random_hermitian(n, gen);
    const auto got = hermitian_eig(h);
    Eigen::SelfAdjointEigenSolver<CMatrix> reference(h);
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(got.eigenvalues(i), reference.eigenvalues()(n - 1 - i), 1e-12 * (1 + h.norm()));
    }
    const CMatrix v = got.eigenvectors;
    EXPECT_LT((v.adjoint() * v - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((h * v - v * got.eigenvalues.asDiagonal()).cwiseAbs().maxCoeff(), 1e-11);
    for (int i = 1; i < n; ++i) EXPECT_GE(got.eigenvalues(i - 1), got.eigenvalues(i));
  }
}

TEST(HermitianEig, DegenerateSpectrum) {
  CMatrix h = CMatrix::Identity(4, 4);
  h(3, 3) = 2.0;
  const auto got = hermitian_eig(h);
  EXPECT_NEAR(got.eigenvalues(0), 2.0, 1e-15);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(got.eigenvalues(i), 1.0, 1e-15);
  EXPECT_LT((got.eigenvectors.adjoint() * got.eigenvectors - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(),
            1e-14);
}

TEST(HermitianEig, RejectsNonHermitian) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eig(m), ArgumentError);
}

TEST(Kron, BlockStructureAndCapacity) {
  CMatrix a(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  const CMatrix b = CMatrix::Identity(3, 3);
  const CMatrix k = kron(a, b);
  EXPECT_EQ(k.rows(), 6);
  EXPECT_EQ(k(4, 1), Complex(3.0, 0.0));
  EXPECT_EQ(k(4, 2), Complex(0.0, 0.0));
  EXPECT_THROW(kron(CMatrix::Identity(3, 3), CMatrix::Identity(3, 3), 8), CapacityError);
}

TEST(MatrixSqrt, SquaresBack) {
  std::mt19937_64 gen(16);
  const auto rho = random_rho(SystemShape({2, 2}), gen, 4);
  const CMatrix root = matrix_sqrt_psd(rho.matrix());
  EXPECT_LT((root * root - rho.matrix()).cwiseAbs().maxCoeff(), 1e-13);
  CMatrix negative = CMatrix::Identity(2, 2);
  negative(1, 1) = -1.0;
  EXPECT_THROW(matrix_sqrt_psd(negative), ArgumentError);
}

TEST(ApplyLocal, MatchesFullOperator) {
  std::mt19937_64 gen(17);
  const std::vector<int> dims{2, 2, 2};
  const CVector v = oracle::random_vector(8, gen);
  for (std::size_t site = 0; site < 3; ++site) {
    for (int axis = 0; axis < 3; ++axis) {
      const CVector got = apply_local(oracle::sigma(axis), site, SystemShape(dims), v);
      const CVector want = oracle::on_site(oracle::sigma(axis), site, dims) * v;
      EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-15);
    }
  }
  EXPECT_THROW(apply_local(oracle::sigma(0), 3, SystemShape(dims), v), ArgumentError);
}

TEST(Expectation, PureAndMixedAgree) {
  std::mt19937_64 gen(18);
  const SystemShape shape({2, 3});
  const PureState psi(shape, oracle::random_vector(6, gen));
  const auto rho = DensityMatrix::from_pure(psi);
  const CMatrix h = oracle::random_hermitian(6, gen);
  EXPECT_NEAR(expectation(psi, h), expectation(rho, h), 1e-13);
  EXPECT_NEAR(variance(psi, h), variance(rho, h), 1e-12);
  EXPECT_GE(variance(psi, h), 0.0);
}
