#include <gtest/gtest.h>

#include "entmeter/errors.hpp"
#include "entmeter/observables.hpp"
#include "entmeter/states.hpp"
#include "oracles.hpp"

using namespace entmeter;

TEST(Convention, ParseAndDefaults) {
  EXPECT_EQ(BasisConvention::parse("pauli"), kPauli);
  EXPECT_EQ(BasisConvention::parse("spin"), kSpin);
  EXPECT_EQ(BasisConvention::parse("trace-orthonormal"), kTraceOrthonormal);
  EXPECT_FALSE(BasisConvention::parse("gellmann"));
  EXPECT_EQ(BasisConvention::default_for(SystemShape({2, 2, 2})), kPauli);
  EXPECT_EQ(BasisConvention::default_for(SystemShape({2, 3})), kTraceOrthonormal);
  EXPECT_FALSE(kPauli.supports(3));
}

TEST(GellMann, QubitPauliConventionIsSigma) {
  const auto basis = gell_mann_basis(2, kPauli);
  ASSERT_EQ(basis.size(), 3u);
  for (int axis = 0; axis < 3; ++axis) {
    EXPECT_LT((basis[static_cast<std::size_t>(axis)] - oracle::sigma(axis)).cwiseAbs().maxCoeff(), 1e-15);
  }
  const auto spin = gell_mann_basis(2, kSpin);
  EXPECT_LT((spin[2] - 0.5 * oracle::sigma(2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GellMann, TracelessHermitianOrthonormal) {
  for (int d = 2; d <= 6; ++d) {
    const auto basis = gell_mann_basis(d, kTraceOrthonormal);
    ASSERT_EQ(basis.size(), static_cast<std::size_t>(d * d - 1));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      EXPECT_LT(std::abs(basis[a].trace()), 1e-15);
      EXPECT_LT((basis[a] - basis[a].adjoint()).cwiseAbs().maxCoeff(), 1e-15);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Complex g = (basis[a] * basis[b]).trace();
        EXPECT_NEAR(g.real(), a == b ? 1.0 : 0.0, 1e-14);
        EXPECT_NEAR(g.imag(), 0.0, 1e-14);
      }
    }
  }
}

TEST(GellMann, QutritStandardMatrices) {
  // lambda_8 / sqrt 2 in the trace-orthonormal normalization
  const auto basis = gell_mann_basis(3, kTraceOrthonormal);
  const CMatrix& last = basis.back();
  const double c = 1.0 / std::sqrt(6.0);
  EXPECT_NEAR(last(0, 0).real(), c, 1e-15);
  EXPECT_NEAR(last(1, 1).real(), c, 1e-15);
  EXPECT_NEAR(last(2, 2).real(), -2.0 * c, 1e-15);
}

TEST(GellMann, RejectsUnsupported) {
  EXPECT_THROW(gell_mann_basis(1, kTraceOrthonormal), ArgumentError);
  EXPECT_THROW(gell_mann_basis(3, kPauli), ArgumentError);
  EXPECT_THROW(OperatorBasis(SystemShape({2, 3}), kSpin), ArgumentError);
}

TEST(Casimir, ConstantsAndOperatorSum) {
  EXPECT_NEAR(casimir_constant(2, kPauli), 3.0, 1e-15);
  EXPECT_NEAR(casimir_constant(2, kSpin), 0.75, 1e-15);
  EXPECT_NEAR(casimir_constant(3, kTraceOrthonormal), 3.0 - 1.0 / 3.0, 1e-15);
  for (int d = 2; d <= 5; ++d) {
    CMatrix sum = CMatrix::Zero(d, d);
    for (const auto& x : gell_mann_basis(d, kTraceOrthonormal)) sum += x * x;
    EXPECT_LT((sum - casimir_constant(d, kTraceOrthonormal) * CMatrix::Identity(d, d)).cwiseAbs().maxCoeff(),
              1e-14);
  }
}

TEST(EmbedLocal, MatchesKroneckerOracle) {
  const std::vector<int> dims{2, 2, 2};
  for (std::size_t site = 0; site < 3; ++site) {
    const CMatrix got = embed_local(oracle::sigma(1), site, SystemShape(dims));
    EXPECT_LT((got - oracle::on_site(oracle::sigma(1), site, dims)).cwiseAbs().maxCoeff(), 1e-15);
  }
  EXPECT_THROW(embed_local(oracle::sigma(0), 0, SystemShape({3, 2})), ArgumentError);
}

TEST(OperatorBasis, CustomBasisValidation) {
  const SystemShape shape({2});
  std::vector<CMatrix> ops{oracle::sigma(0), oracle::sigma(1), oracle::sigma(2)};
  EXPECT_NO_THROW(OperatorBasis(shape, kPauli, {ops}));
  EXPECT_THROW(OperatorBasis(shape, kTraceOrthonormal, {ops}), ArgumentError);
  auto skewed = ops;
  skewed[1] = oracle::sigma(0);
  EXPECT_THROW(OperatorBasis(shape, kPauli, {skewed}), ArgumentError);
  auto short_list = ops;
  short_list.pop_back();
  EXPECT_THROW(OperatorBasis(shape, kPauli, {short_list}), ArgumentError);
}

TEST(MeanOperator, BasisStateOfQubit) {
  const auto up = basis_state(SystemShape({2}), {0});
  const OperatorBasis basis(SystemShape({2}), kPauli);
  const auto e = local_expectations(up, basis);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_NEAR(e[0], 0.0, 1e-15);
  EXPECT_NEAR(e[1], 0.0, 1e-15);
  EXPECT_NEAR(e[2], 1.0, 1e-15);
  const auto x = mean_operator(up, basis);
  EXPECT_LT((x.matrix - oracle::sigma(2)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(mean_operator_expectation(up, basis), 1.0, 1e-15);
}

TEST(MeanOperator, ExpectationsMatchOracle) {
  std::mt19937_64 gen(21);
  const std::vector<int> dims{2, 2, 2};
  const PureState psi(SystemShape(dims), oracle::random_vector(8, gen));
  const OperatorBasis basis(SystemShape(dims), kPauli);
  const auto e = local_expectations(psi, basis);
  ASSERT_EQ(e.size(), 9u);
  for (std::size_t site = 0; site < 3; ++site) {
    for (int axis = 0; axis < 3; ++axis) {
      const CMatrix x = oracle::on_site(oracle::sigma(axis), site, dims);
      EXPECT_NEAR(e[site * 3 + static_cast<std::size_t>(axis)], psi.amplitudes().dot(x * psi.amplitudes()).real(),
                  1e-14);
    }
  }
}

TEST(MeanOperator, CompletelyEntangledStateHasZeroMean) {
  const auto ghz = ghz3(1.0 / std::sqrt(2.0));
  const OperatorBasis basis(ghz.shape(), kPauli);
  EXPECT_LT(mean_operator(ghz, basis).matrix.cwiseAbs().maxCoeff(), 1e-15);
}
