#pragma once

#include <vector>

#include "nodim/report.hpp"
#include "nodim/spaces.hpp"

namespace nodim {

// Finite weighted point set. Weights are barycentric (sum to 1); an empty
// weight vector means uniform. After center() the weighted barycenter is at
// the origin and radius_bound holds the largest point norm.
struct PointCloud {
  SpaceSpec space;
  std::vector<Point> points;
  std::vector<double> weights;  // empty => uniform
  double radius_bound = 0.0;
  bool centered = false;
};

void validate_cloud(const PointCloud& cloud);
Point cloud_barycenter(const PointCloud& cloud);
PointCloud center(const PointCloud& cloud);

struct GreedySolution {
  std::vector<int> chosen_indices;       // repetition allowed
  std::vector<double> residual_history;  // norm of the running average
  std::vector<double> bound_history;     // rate(step) * radius_bound
  double final_residual = 0.0;
};

// Greedy sparse averaging: at each step pick the point with the most
// negative pairing against the norming functional of the running sum
// (lowest index when the sum is numerically zero or on ties). Requires a
// centered cloud and p >= 2.
GreedySolution greedy_approximate_caratheodory(const PointCloud& cloud, int k);

struct BruteForceResult {
  std::vector<int> indices;
  double value = 0.0;
};

// Exhaustive minimum of ||average of k points|| over all k-multisets.
// Refuses instances with more than 10^6 multisets.
BruteForceResult brute_force_best_average(const PointCloud& cloud, int k);

// Recomputes the running averages of `solution` from scratch and checks the
// per-step rate bound. On failure, diagnostics carry the first bad step.
VerificationReport verify_caratheodory(const PointCloud& cloud,
                                       const GreedySolution& solution);

}  // namespace nodim
