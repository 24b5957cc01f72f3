#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace entmeter {

struct NelderMeadOptions {
  int max_iterations = 2000;
  /// Converged once every vertex lies within this distance of the best one.
  double tolerance = 1e-8;
  double initial_step = 0.5;
  /// Dimension-dependent coefficients (Gao & Han 2012); standard ones when false.
  bool adaptive = true;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  long evaluations = 0;
  bool converged = false;
  /// Best value after each iteration; non-increasing.
  std::vector<double> history;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& start,
                             const NelderMeadOptions& options = {});

}  // namespace entmeter
