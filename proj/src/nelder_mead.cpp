#include "entmeter/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

#include "entmeter/errors.hpp"

namespace entmeter {

NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& start,
                             const NelderMeadOptions& options) {
  const auto n = start.size();
  NelderMeadResult result;
  if (n == 0) {
    result.x = start;
    result.value = f(start);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }

  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = options.adaptive ? 1.0 + 2.0 / dn : 2.0;
  const double rho = options.adaptive ? 0.75 - 1.0 / (2.0 * dn) : 0.5;
  const double sigma = options.adaptive ? 1.0 - 1.0 / dn : 0.5;

  auto eval = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    return f(x);
  };

  std::vector<Eigen::VectorXd> simplex(static_cast<std::size_t>(n + 1), start);
  std::vector<double> values(static_cast<std::size_t>(n + 1));
  for (Eigen::Index i = 0; i < n; ++i) simplex[static_cast<std::size_t>(i + 1)](i) += options.initial_step;
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Eigen::VectorXd> s2;
    std::vector<double> v2;
    s2.reserve(simplex.size());
    v2.reserve(simplex.size());
    for (auto i : order) {
      s2.push_back(std::move(simplex[i]));
      v2.push_back(values[i]);
    }
    simplex = std::move(s2);
    values = std::move(v2);
  };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      d = std::max(d, (simplex[i] - simplex[0]).lpNorm<Eigen::Infinity>());
    }
    return d;
  };

  sort_simplex();
  const auto last = static_cast<std::size_t>(n);
  while (result.iterations < options.max_iterations) {
    if (diameter() < options.tolerance) {
      result.converged = true;
      break;
    }
    ++result.iterations;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < last; ++i) centroid += simplex[i];
    centroid /= dn;

    const Eigen::VectorXd xr = centroid + alpha * (centroid - simplex[last]);
    const double fr = eval(xr);
    if (fr < values[0]) {
      const Eigen::VectorXd xe = centroid + gamma * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[last] = xe;
        values[last] = fe;
      } else {
        simplex[last] = xr;
        values[last] = fr;
      }
    } else if (fr < values[last - 1]) {
      simplex[last] = xr;
      values[last] = fr;
    } else {
      bool shrink = false;
      if (fr < values[last]) {
        const Eigen::VectorXd xc = centroid + rho * (xr - centroid);
        const double fc = eval(xc);
        if (fc <= fr) {
          simplex[last] = xc;
          values[last] = fc;
        } else {
          shrink = true;
        }
      } else {
        const Eigen::VectorXd xc = centroid + rho * (simplex[last] - centroid);
        const double fc = eval(xc);
        if (fc < values[last]) {
          simplex[last] = xc;
          values[last] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (std::size_t i = 1; i < simplex.size(); ++i) {
          simplex[i] = simplex[0] + sigma * (simplex[i] - simplex[0]);
          values[i] = eval(simplex[i]);
        }
      }
    }
    sort_simplex();
    result.history.push_back(values[0]);
  }
  if (!result.converged && diameter() < options.tolerance) result.converged = true;

  result.x = simplex[0];
  result.value = values[0];
  return result;
}

}  // namespace entmeter
