#include "nodim/caratheodory.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace nodim {

namespace {

constexpr double kZeroSumTol = 1e-14;
constexpr double kWeightSumTol = 1e-12;
constexpr double kStepSlack = 1e-9;

std::vector<double> effective_weights(const PointCloud& cloud) {
  const std::size_t n = cloud.points.size();
  if (cloud.weights.empty())
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  return cloud.weights;
}

// Number of k-multisets from n points, saturating at the given cap.
double multiset_count(int n, int k, double cap) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c *= static_cast<double>(n + i - 1) / static_cast<double>(i);
    if (c > cap) return cap + 1.0;
  }
  return c;
}

}  // namespace

void validate_cloud(const PointCloud& cloud) {
  if (cloud.points.empty()) throw std::invalid_argument("point cloud is empty");
  for (const Point& p : cloud.points)
    if (!point_matches(cloud.space, p))
      throw std::invalid_argument("point cloud: dimension mismatch");
  if (!cloud.weights.empty()) {
    if (cloud.weights.size() != cloud.points.size())
      throw std::invalid_argument("point cloud: weight count mismatch");
    double s = 0.0;
    for (double w : cloud.weights) {
      if (w < 0.0) throw std::invalid_argument("point cloud: negative weight");
      s += w;
    }
    if (std::abs(s - 1.0) > kWeightSumTol)
      throw std::invalid_argument("point cloud: weights must sum to 1");
  }
}

Point cloud_barycenter(const PointCloud& cloud) {
  validate_cloud(cloud);
  const std::vector<double> w = effective_weights(cloud);
  Point bary = zero_point(cloud.space);
  for (std::size_t i = 0; i < cloud.points.size(); ++i)
    axpy_inplace(w[i], cloud.points[i], bary);
  return bary;
}

PointCloud center(const PointCloud& cloud) {
  const Point bary = cloud_barycenter(cloud);
  PointCloud out;
  out.space = cloud.space;
  out.weights = cloud.weights;
  out.points.reserve(cloud.points.size());
  double radius = 0.0;
  for (const Point& p : cloud.points) {
    Point c = point_sub(p, bary);
    radius = std::max(radius, norm(cloud.space, c));
    out.points.push_back(std::move(c));
  }
  out.radius_bound = radius;
  out.centered = true;
  return out;
}

GreedySolution greedy_approximate_caratheodory(const PointCloud& cloud, int k) {
  validate_cloud(cloud);
  if (!cloud.centered)
    throw std::invalid_argument("greedy solver requires a centered cloud");
  if (cloud.space.p < 2.0)
    throw std::invalid_argument("greedy solver requires p >= 2");
  if (k < 1) throw std::invalid_argument("greedy solver: k must be >= 1");

  const int n = static_cast<int>(cloud.points.size());
  GreedySolution out;
  out.chosen_indices.reserve(k);
  out.residual_history.reserve(k);
  out.bound_history.reserve(k);

  Point sum = zero_point(cloud.space);
  for (int step = 1; step <= k; ++step) {
    int best = 0;
    if (norm(cloud.space, sum) >= kZeroSumTol) {
      const Point functional = duality_map(cloud.space, sum);
      double best_value = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        const double value = pairing(functional, cloud.points[i]);
        if (value < best_value) {
          best_value = value;
          best = i;
        }
      }
    }
    axpy_inplace(1.0, cloud.points[best], sum);
    out.chosen_indices.push_back(best);
    out.residual_history.push_back(
        norm(cloud.space, scaled(sum, 1.0 / static_cast<double>(step))));
    out.bound_history.push_back(caratheodory_rate(cloud.space, step) *
                                cloud.radius_bound);
  }
  out.final_residual = out.residual_history.back();
  return out;
}

BruteForceResult brute_force_best_average(const PointCloud& cloud, int k) {
  validate_cloud(cloud);
  if (k < 1) throw std::invalid_argument("brute force: k must be >= 1");
  const int n = static_cast<int>(cloud.points.size());
  if (multiset_count(n, k, 1e6) > 1e6)
    throw std::invalid_argument("brute force: combinatorial budget exceeded");

  BruteForceResult best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<int> stack(k, 0);

  // Depth-first over nondecreasing index tuples, running sums on the path.
  std::vector<Point> partial;
  partial.reserve(k + 1);
  partial.push_back(zero_point(cloud.space));

  std::function<void(int, int)> recurse = [&](int depth, int from) {
    if (depth == k) {
      const double value =
          norm(cloud.space, scaled(partial.back(), 1.0 / static_cast<double>(k)));
      if (value < best.value) {
        best.value = value;
        best.indices = stack;
      }
      return;
    }
    for (int i = from; i < n; ++i) {
      stack[depth] = i;
      Point next = partial.back();
      axpy_inplace(1.0, cloud.points[i], next);
      partial.push_back(std::move(next));
      recurse(depth + 1, i);
      partial.pop_back();
    }
  };
  recurse(0, 0);
  return best;
}

VerificationReport verify_caratheodory(const PointCloud& cloud,
                                       const GreedySolution& solution) {
  validate_cloud(cloud);
  VerificationReport report;
  const int k = static_cast<int>(solution.chosen_indices.size());
  const int n = static_cast<int>(cloud.points.size());
  Point sum = zero_point(cloud.space);
  bool ok = k > 0;
  int first_bad_step = -1;
  double achieved = 0.0;
  double bound = 0.0;
  for (int step = 1; step <= k; ++step) {
    const int idx = solution.chosen_indices[step - 1];
    if (idx < 0 || idx >= n)
      throw std::invalid_argument("verify: index out of range");
    axpy_inplace(1.0, cloud.points[idx], sum);
    achieved = norm(cloud.space, scaled(sum, 1.0 / static_cast<double>(step)));
    bound = caratheodory_rate(cloud.space, step) * cloud.radius_bound;
    if (achieved > bound + kStepSlack && ok) {
      ok = false;
      first_bad_step = step;
    }
  }
  report.pass = ok;
  report.achieved = achieved;
  report.bound = bound;
  report.witness = solution.chosen_indices;
  report.diagnostics["steps"] = k;
  if (!ok) report.diagnostics["first_violated_step"] = first_bad_step;
  return report;
}

}  // namespace nodim
