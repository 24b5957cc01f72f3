#include <gtest/gtest.h>

#include <cmath>

#include "entmeter/nelder_mead.hpp"

using namespace entmeter;

TEST(NelderMead, Quadratic) {
  const Objective f = [](const Eigen::VectorXd& x) {
    return (x - Eigen::Vector3d(1.0, -2.0, 0.5)).squaredNorm();
  };
  const auto r = nelder_mead(f, Eigen::VectorXd::Zero(3), {});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x(0), 1.0, 1e-6);
  EXPECT_NEAR(r.x(1), -2.0, 1e-6);
  EXPECT_NEAR(r.x(2), 0.5, 1e-6);
  EXPECT_LT(r.value, 1e-12);
}

TEST(NelderMead, Rosenbrock) {
  const Objective f = [](const Eigen::VectorXd& x) {
    return 100.0 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1.0 - x(0), 2);
  };
  NelderMeadOptions opts;
  opts.max_iterations = 5000;
  opts.tolerance = 1e-10;
  const auto r = nelder_mead(f, Eigen::Vector2d(-1.2, 1.0), opts);
  EXPECT_NEAR(r.x(0), 1.0, 1e-5);
  EXPECT_NEAR(r.x(1), 1.0, 1e-5);
}

TEST(NelderMead, HistoryNonIncreasing) {
  const Objective f = [](const Eigen::VectorXd& x) { return std::abs(x(0)) + std::cos(x(1)); };
  const auto r = nelder_mead(f, Eigen::Vector2d(2.0, 0.1), {});
  ASSERT_FALSE(r.history.empty());
  for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i], r.history[i - 1]);
  EXPECT_DOUBLE_EQ(r.history.back(), r.value);
  EXPECT_GT(r.evaluations, r.iterations);
}

TEST(NelderMead, IterationCapReportsNonConvergence) {
  const Objective f = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
  NelderMeadOptions opts;
  opts.max_iterations = 3;
  const auto r = nelder_mead(f, Eigen::VectorXd::Constant(6, 5.0), opts);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 3);
}

TEST(NelderMead, ZeroDimensional) {
  const Objective f = [](const Eigen::VectorXd&) { return 4.0; };
  const auto r = nelder_mead(f, Eigen::VectorXd(0), {});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.value, 4.0);
}
