#include <gtest/gtest.h>

#include "entmeter/errors.hpp"
#include "entmeter/measures.hpp"
#include "entmeter/mixed_roof.hpp"
#include "entmeter/random.hpp"
#include "entmeter/states.hpp"
#include "oracles.hpp"

using namespace entmeter;

namespace {

double mu_from_purities(const std::vector<double>& p, const std::vector<int>& dims) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    num += 1.0 - p[i];
    den += 1.0 - 1.0 / dims[i];
  }
  return std::sqrt(std::max(0.0, num / den));
}

/// Coffman-Kundu-Wootters: tau = 4 det(rho_A) - C_AB^2 - C_AC^2.
double tangle_from_monogamy(const CVector& psi) {
  const std::vector<int> dims{2, 2, 2};
  const CMatrix rho = psi * psi.adjoint();
  const CMatrix ra = oracle::partial_trace(rho, dims, {0});
  const double c_ab = oracle::wootters(oracle::partial_trace(rho, dims, {0, 1}));
  const double c_ac = oracle::wootters(oracle::partial_trace(rho, dims, {0, 2}));
  return 4.0 * ra.determinant().real() - c_ab * c_ab - c_ac * c_ac;
}

}  // namespace

TEST(TotalVariance, WStateValues) {
  const auto w = w3();
  const OperatorBasis basis(w.shape(), kPauli);
  EXPECT_NEAR(total_variance_direct(w, basis), 26.0 / 3.0, 1e-12);
  EXPECT_NEAR(total_variance_closed(w, w.shape(), kPauli), 26.0 / 3.0, 1e-12);
  EXPECT_NEAR(oracle::pauli_total_variance(w.amplitudes(), {2, 2, 2}), 26.0 / 3.0, 1e-12);

  const auto wp = w3_paper_variant();
  EXPECT_NEAR(total_variance_direct(wp, OperatorBasis(wp.shape(), kPauli)), 62.0 / 9.0, 1e-12);
  EXPECT_NEAR(mu_value(wp), std::sqrt(8.0 / 27.0), 1e-12);
}

TEST(TotalVariance, DirectRouteMatchesOracle) {
  std::mt19937_64 gen(31);
  for (const std::vector<int>& dims : {std::vector<int>{2, 2}, {2, 2, 2}, {2, 2, 2, 2}}) {
    int n = 1;
    for (int d : dims) n *= d;
    const CVector v = oracle::random_vector(n, gen);
    const SystemShape shape(dims);
    const PureState psi(shape, v);
    EXPECT_NEAR(total_variance_direct(psi, OperatorBasis(shape, kPauli)),
                oracle::pauli_total_variance(v, dims), 1e-12);
  }
}

TEST(TotalVariance, Extremes) {
  const auto e = variance_extremes(SystemShape({2, 2, 2}), kPauli);
  EXPECT_NEAR(e.v_coh, 6.0, 1e-14);
  EXPECT_NEAR(e.v_ent, 9.0, 1e-14);
  const auto q = variance_extremes(SystemShape({3, 3}), kTraceOrthonormal);
  EXPECT_NEAR(q.v_coh, 4.0, 1e-14);
  EXPECT_NEAR(q.v_ent, 2.0 * (3.0 - 1.0 / 3.0), 1e-14);
  EXPECT_THROW(variance_extremes(SystemShape({3, 3}), kPauli), ArgumentError);
}

TEST(Mu, MatchesPurityOracle) {
  std::mt19937_64 gen(32);
  for (const std::vector<int>& dims : {std::vector<int>{2, 3}, {3, 3}, {2, 3, 4}, {2, 2, 2}}) {
    int n = 1;
    for (int d : dims) n *= d;
    const CVector v = oracle::random_vector(n, gen);
    const PureState psi(SystemShape(dims), v);
    EXPECT_NEAR(mu_value(psi), mu_from_purities(oracle::purities(v, dims), dims), 1e-12);
  }
}

TEST(Mu, ReportFields) {
  const auto w = w3();
  const auto report = mu(w, w.shape());
  EXPECT_NEAR(report.mu, 2.0 * std::sqrt(2.0) / 3.0, 1e-12);
  EXPECT_EQ(report.convention, kPauli);
  EXPECT_NEAR(report.extremes.v_coh, 6.0, 1e-14);
  ASSERT_EQ(report.purities.size(), 3u);
  for (double p : report.purities) EXPECT_NEAR(p, 5.0 / 9.0, 1e-12);
  EXPECT_NEAR(report.residual_max, 1.0 / 3.0, 1e-12);
  const auto to = mu(w, w.shape(), kTraceOrthonormal);
  EXPECT_NEAR(to.mu, report.mu, 1e-12);
  EXPECT_NEAR(to.total_variance, report.total_variance / 2.0, 1e-12);
  EXPECT_THROW(mu(w, SystemShape({2, 4})), ArgumentError);
}

TEST(Mu, UnnormalizedWeightedForm) {
  const auto w = w3();
  const CVector scaled = 0.5 * w.amplitudes();
  // weight p = 1/4 times mu
  EXPECT_NEAR(mu_value(w.shape(), scaled), 0.25 * mu_value(w), 1e-12);
}

TEST(Concurrence, TwoQubitDeterminantOracle) {
  std::mt19937_64 gen(33);
  for (int t = 0; t < 10; ++t) {
    const CVector v = oracle::random_vector(4, gen);
    const double want = 2.0 * std::abs(v(0) * v(3) - v(1) * v(2));
    EXPECT_NEAR(concurrence_bipartite(PureState(SystemShape({2, 2}), v), SystemShape({2, 2})), want, 1e-12);
  }
  EXPECT_THROW(concurrence_bipartite(w3(), w3().shape()), ArgumentError);
  const PureState q(SystemShape({2, 3}), oracle::random_vector(6, gen));
  EXPECT_THROW(concurrence_bipartite(q, q.shape()), ArgumentError);
}

TEST(ThreeTangle, MatchesMonogamyOracle) {
  std::mt19937_64 gen(34);
  for (int t = 0; t < 10; ++t) {
    const CVector v = oracle::random_vector(8, gen);
    // the oracle takes square roots of near-zero eigenvalues of rank-2 products
    EXPECT_NEAR(three_tangle(PureState(SystemShape({2, 2, 2}), v)), tangle_from_monogamy(v), 1e-7);
  }
  EXPECT_NEAR(three_tangle(ghz3(1.0 / std::sqrt(2.0))), 1.0, 1e-14);
  EXPECT_THROW(three_tangle(bell()), ArgumentError);
}

TEST(Covariance, NamedStates) {
  EXPECT_NEAR(total_covariance(w3(), w3().shape()), 8.0 / 3.0, 1e-12);
  // only the entangled pair contributes: <XX> + <YY> + <ZZ> = 1 + 1 - 1
  for (auto pair : {BiseparablePair::AB, BiseparablePair::AC, BiseparablePair::BC}) {
    const auto b = biseparable3(pair);
    EXPECT_NEAR(total_covariance(b, b.shape()), 1.0, 1e-12);
  }
  // <Z_j Z_k> = 1 on each of the three pairs; XX and YY vanish
  const auto ghz = ghz3(1.0 / std::sqrt(2.0));
  EXPECT_NEAR(total_covariance(ghz, ghz.shape()), 3.0, 1e-12);
  const auto prod = basis_state(SystemShape({2, 2, 2}), {0, 1, 0});
  EXPECT_NEAR(total_covariance(prod, prod.shape()), 0.0, 1e-14);
  const auto q = random_pure(SystemShape({2, 3}), 1);
  EXPECT_THROW(total_covariance(q, q.shape()), ArgumentError);
}

TEST(Residual, CompleteEntanglement) {
  EXPECT_TRUE(is_completely_entangled(ghz3(1.0 / std::sqrt(2.0))));
  EXPECT_TRUE(is_completely_entangled(bell_pair_product()));
  EXPECT_FALSE(is_completely_entangled(w3()));
  EXPECT_FALSE(is_completely_entangled(ghz3(0.6)));
  const auto r = entanglement_residual(w3(), w3().shape());
  EXPECT_EQ(r.expectations.size(), 9u);
  EXPECT_NEAR(r.l2, std::sqrt(3.0) / 3.0, 1e-12);
}

TEST(Uncertainty, PureStatesSaturate) {
  Rng rng(35);
  for (int t = 0; t < 50; ++t) {
    const auto psi = random_pure(SystemShape({2}), rng);
    for (auto [j, k] : {std::pair{Axis::X, Axis::Y}, {Axis::Y, Axis::Z}, {Axis::X, Axis::Z}}) {
      const auto r = uncertainty_check(psi, j, k);
      EXPECT_TRUE(r.holds);
      EXPECT_NEAR(r.lhs, r.rhs, 1e-14);
      EXPECT_NEAR(r.mean_length, 0.25, 1e-14);
    }
  }
}

TEST(Uncertainty, MaximallyMixedQubit) {
  const DensityMatrix rho(SystemShape({2}), CMatrix::Identity(2, 2) * 0.5);
  const auto r = uncertainty_check(rho, Axis::X, Axis::Y);
  EXPECT_NEAR(r.lhs, 1.0 / 16.0, 1e-15);
  EXPECT_NEAR(r.rhs, 0.0, 1e-15);
  EXPECT_NEAR(r.mean_length, 0.0, 1e-15);
  EXPECT_THROW(uncertainty_check(rho, Axis::Z, Axis::Z), ArgumentError);
  EXPECT_THROW(uncertainty_check(bell(), Axis::X, Axis::Y), ArgumentError);
}
