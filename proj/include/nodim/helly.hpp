#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "nodim/report.hpp"
#include "nodim/spaces.hpp"

namespace nodim {

// Two-sided linear constraint system over the l1 ball: slabs
// K_i = {x : |<a_i, x> - b_i| <= r} with a_i in [-1,1]^d, witnesses sought
// in R * B_1, locality parameter k.
struct SlabSystem {
  std::vector<std::vector<double>> a;  // m rows of d entries, |a_ij| <= 1
  std::vector<double> b;
  double R = 1.0;  // >= 1
  double r = 0.0;  // >= 0
  int k = 1;       // in [1, m]
  int d = 3;       // >= 3
};

void validate_system(const SlabSystem& system);

struct Slab {
  std::vector<double> a;
  double b = 0.0;
  double r = 0.0;
};

struct L1Ball {
  double radius = 1.0;
};

using ConvexSet = std::variant<Slab, L1Ball>;

double set_violation(const ConvexSet& set, const std::vector<double>& x);
std::vector<double> project_onto(const ConvexSet& set, std::vector<double> x);

struct FeasibilityReport {
  std::vector<int> subset;
  bool feasible = false;
  std::optional<Point> witness;
  double residual = 0.0;  // max constraint violation at the final iterate
  int iterations = 0;     // full projection cycles
};

// Dykstra's cyclic corrected-projection scheme. Declares success once every
// violation is <= tol; exhausting max_iter means "not verified", never a
// proof of emptiness.
FeasibilityReport dykstra_intersect(const std::vector<ConvexSet>& sets,
                                    std::vector<double> start, double tol,
                                    int max_iter);

struct SubsetPolicy {
  enum class Mode { Enumerate, Sample };
  Mode mode = Mode::Enumerate;
  int sample_count = 200;
  std::uint64_t seed = 0;

  static SubsetPolicy enumerate_all() { return SubsetPolicy{}; }
  static SubsetPolicy sample(int count, std::uint64_t seed) {
    return SubsetPolicy{Mode::Sample, count, seed};
  }
};

// The k-subsets a policy selects from [0, m), sorted lexicographically.
// Enumeration refuses instances with more than 1e5 subsets.
std::vector<std::vector<int>> choose_subsets(int m, int k,
                                             const SubsetPolicy& policy);

// One Dykstra run per selected subset J, over {R B_1} and the slabs of J.
std::vector<FeasibilityReport> check_kwise_feasibility(
    const SlabSystem& system, const SubsetPolicy& policy, double tol = 1e-8);

struct SolveOptions {
  int max_iters = 10000;
  // Early exit once the best objective value drops to `target` (disabled by
  // default; the full iteration budget is spent).
  double target = -1.0;
  bool use_target = false;
  std::function<void(const std::vector<double>&)> on_iterate;
};

// Minimizes max_i |<a_i, x> - b_i| over e R B_1 by projected subgradient
// descent with step eR/sqrt(t), keeping the best iterate.
std::vector<double> solve_global_chebyshev(const SlabSystem& system,
                                           const SolveOptions& options = {});

// Checks the local-to-global conclusion: ||x||_1 <= eR and worst residual
// <= r + 21 R sqrt(ln d / k). Requires every k-wise report feasible;
// otherwise the report flags the hypothesis as unconfirmed and fails.
VerificationReport verify_local_to_global(
    const SlabSystem& system, const std::vector<double>& x,
    const std::vector<FeasibilityReport>& kwise_reports);

}  // namespace nodim
