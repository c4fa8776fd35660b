#include "nodim/helly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "nodim/numkernel.hpp"
#include "nodim/parallel.hpp"
#include "nodim/rng.hpp"

namespace nodim {

namespace {

constexpr double kEnumerationBudget = 1e5;

double binomial_capped(int m, int k, double cap) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c *= static_cast<double>(m - k + i) / static_cast<double>(i);
    if (c > cap) return cap + 1.0;
  }
  return c;
}

double dot(const std::vector<double>& a, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace

void validate_system(const SlabSystem& system) {
  const int m = static_cast<int>(system.a.size());
  if (m < 1) throw std::invalid_argument("slab system: no constraints");
  if (system.d < 3) throw std::invalid_argument("slab system: d must be >= 3");
  if (system.b.size() != system.a.size())
    throw std::invalid_argument("slab system: b size mismatch");
  if (!(system.R >= 1.0)) throw std::invalid_argument("slab system: R must be >= 1");
  if (system.r < 0.0) throw std::invalid_argument("slab system: r must be >= 0");
  if (system.k < 1 || system.k > m)
    throw std::invalid_argument("slab system: k must lie in [1, m]");
  for (const auto& row : system.a) {
    if (static_cast<int>(row.size()) != system.d)
      throw std::invalid_argument("slab system: row length mismatch");
    for (double v : row)
      if (std::abs(v) > 1.0)
        throw std::invalid_argument("slab system: entries of a must be in [-1, 1]");
  }
}

double set_violation(const ConvexSet& set, const std::vector<double>& x) {
  if (const auto* slab = std::get_if<Slab>(&set)) {
    return std::max(std::abs(dot(slab->a, x) - slab->b) - slab->r, 0.0);
  }
  const auto& ball = std::get<L1Ball>(set);
  return std::max(l1_norm(x) - ball.radius, 0.0);
}

std::vector<double> project_onto(const ConvexSet& set, std::vector<double> x) {
  if (const auto* slab = std::get_if<Slab>(&set)) {
    double a2 = 0.0;
    for (double v : slab->a) a2 += v * v;
    const double t = dot(slab->a, x) - slab->b;
    if (a2 == 0.0) {
      if (std::abs(t) <= slab->r) return x;
      throw std::invalid_argument("slab projection: zero normal, empty slab");
    }
    const double excess = std::max(std::abs(t) - slab->r, 0.0);
    if (excess == 0.0) return x;
    const double shift = (t < 0.0 ? -excess : excess) / a2;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= shift * slab->a[i];
    return x;
  }
  const auto& ball = std::get<L1Ball>(set);
  return project_l1_ball(x, ball.radius);
}

FeasibilityReport dykstra_intersect(const std::vector<ConvexSet>& sets,
                                    std::vector<double> start, double tol,
                                    int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("dykstra: tol must be > 0");
  if (sets.empty()) throw std::invalid_argument("dykstra: no sets");
  const std::size_t dim = start.size();
  std::vector<std::vector<double>> corrections(
      sets.size(), std::vector<double>(dim, 0.0));

  FeasibilityReport report;
  std::vector<double> x = std::move(start);
  for (int cycle = 1; cycle <= max_iter; ++cycle) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::vector<double> z(dim);
      for (std::size_t j = 0; j < dim; ++j) z[j] = x[j] + corrections[i][j];
      std::vector<double> projected = project_onto(sets[i], z);
      for (std::size_t j = 0; j < dim; ++j)
        corrections[i][j] = z[j] - projected[j];
      x = std::move(projected);
    }
    double worst = 0.0;
    for (const ConvexSet& s : sets) worst = std::max(worst, set_violation(s, x));
    report.residual = worst;
    report.iterations = cycle;
    if (worst <= tol) {
      report.feasible = true;
      report.witness = Point(std::move(x));
      return report;
    }
  }
  report.feasible = false;
  report.witness = Point(std::move(x));
  return report;
}

std::vector<std::vector<int>> choose_subsets(int m, int k,
                                             const SubsetPolicy& policy) {
  if (k < 1 || k > m) throw std::invalid_argument("choose_subsets: bad k");
  std::vector<std::vector<int>> subsets;
  if (policy.mode == SubsetPolicy::Mode::Enumerate) {
    if (binomial_capped(m, k, kEnumerationBudget) > kEnumerationBudget)
      throw std::invalid_argument(
          "subset enumeration budget exceeded; use the Sample policy");
    std::vector<int> current(k);
    for (int i = 0; i < k; ++i) current[i] = i;
    for (;;) {
      subsets.push_back(current);
      int i = k - 1;
      while (i >= 0 && current[i] == m - k + i) --i;
      if (i < 0) break;
      ++current[i];
      for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
    }
    return subsets;
  }

  SplitMix64 rng(policy.seed);
  std::set<std::vector<int>> unique;
  std::vector<int> pool(m);
  for (int draw = 0; draw < policy.sample_count; ++draw) {
    for (int i = 0; i < m; ++i) pool[i] = i;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) {
      const int pick = i + rng.uniform_int(m - i);
      std::swap(pool[i], pool[pick]);
      subset[i] = pool[i];
    }
    std::sort(subset.begin(), subset.end());
    unique.insert(std::move(subset));
  }
  subsets.assign(unique.begin(), unique.end());
  return subsets;
}

std::vector<FeasibilityReport> check_kwise_feasibility(const SlabSystem& system,
                                                       const SubsetPolicy& policy,
                                                       double tol) {
  validate_system(system);
  const std::vector<std::vector<int>> subsets =
      choose_subsets(static_cast<int>(system.a.size()), system.k, policy);
  std::vector<FeasibilityReport> reports(subsets.size());
  parallel_for(static_cast<int>(subsets.size()), [&](int idx) {
    const std::vector<int>& subset = subsets[idx];
    std::vector<ConvexSet> sets;
    sets.reserve(subset.size() + 1);
    sets.push_back(L1Ball{system.R});
    for (int j : subset) sets.push_back(Slab{system.a[j], system.b[j], system.r});
    FeasibilityReport rep = dykstra_intersect(
        sets, std::vector<double>(system.d, 0.0), tol, 10000);
    rep.subset = subset;
    reports[idx] = std::move(rep);
  });
  return reports;
}

std::vector<double> solve_global_chebyshev(const SlabSystem& system,
                                           const SolveOptions& options) {
  validate_system(system);
  const int m = static_cast<int>(system.a.size());
  const double radius = std::exp(1.0) * system.R;
  const double step_scale = radius;

  std::vector<double> x(system.d, 0.0);
  std::vector<double> best = x;
  double best_value = std::numeric_limits<double>::infinity();

  for (int t = 1; t <= options.max_iters; ++t) {
    int active = 0;
    double active_residual = 0.0;
    double worst = -1.0;
    for (int i = 0; i < m; ++i) {
      const double resid = dot(system.a[i], x) - system.b[i];
      if (std::abs(resid) > worst) {
        worst = std::abs(resid);
        active = i;
        active_residual = resid;
      }
    }
    if (worst < best_value) {
      best_value = worst;
      best = x;
    }
    if (options.use_target && best_value <= options.target) break;
    const double eta = step_scale / std::sqrt(static_cast<double>(t));
    const double sign = active_residual < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < system.d; ++j) x[j] -= eta * sign * system.a[active][j];
    x = project_l1_ball(x, radius);
    if (options.on_iterate) options.on_iterate(x);
  }
  return best;
}

VerificationReport verify_local_to_global(
    const SlabSystem& system, const std::vector<double>& x,
    const std::vector<FeasibilityReport>& kwise_reports) {
  validate_system(system);
  if (static_cast<int>(x.size()) != system.d)
    throw std::invalid_argument("verify: witness dimension mismatch");

  bool hypothesis = !kwise_reports.empty();
  for (const FeasibilityReport& rep : kwise_reports)
    if (!rep.feasible) hypothesis = false;

  double worst = 0.0;
  for (std::size_t i = 0; i < system.a.size(); ++i)
    worst = std::max(worst, std::abs(dot(system.a[i], x) - system.b[i]));

  const double ball_radius = std::exp(1.0) * system.R;
  const double bound =
      system.r + 21.0 * system.R *
                     std::sqrt(std::log(static_cast<double>(system.d)) /
                               static_cast<double>(system.k));

  VerificationReport report;
  report.achieved = worst;
  report.bound = bound;
  const bool in_ball = l1_norm(x) <= ball_radius + 1e-9;
  report.pass = hypothesis && in_ball && worst <= bound + 1e-9;
  report.witness = x;
  report.diagnostics["hypothesis_confirmed"] = hypothesis;
  report.diagnostics["kwise_reports"] = kwise_reports.size();
  report.diagnostics["l1_norm"] = l1_norm(x);
  report.diagnostics["ball_radius"] = ball_radius;
  return report;
}

}  // namespace nodim
