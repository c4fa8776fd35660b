#include "nodim/sketch.hpp"

#include <cmath>
#include <stdexcept>

namespace nodim {

namespace {

constexpr int kMaxSignals = 256;
constexpr int kMaxAtoms = 100000;
constexpr double kMuSumTol = 1e-12;

}  // namespace

void validate_ensemble(const FiniteSignalEnsemble& ensemble) {
  if (ensemble.n < 3)
    throw std::invalid_argument("ensemble: need n >= 3 signals");
  if (ensemble.n > kMaxSignals)
    throw std::invalid_argument("ensemble: n exceeds the 256-signal cap");
  if (ensemble.omega_size < 1)
    throw std::invalid_argument("ensemble: need at least one atom");
  if (ensemble.omega_size > kMaxAtoms)
    throw std::invalid_argument("ensemble: N exceeds the 1e5-atom cap");
  if (static_cast<int>(ensemble.mu.size()) != ensemble.omega_size)
    throw std::invalid_argument("ensemble: mu size mismatch");
  double s = 0.0;
  for (double m : ensemble.mu) {
    if (m < 0.0) throw std::invalid_argument("ensemble: negative mu");
    s += m;
  }
  if (std::abs(s - 1.0) > kMuSumTol)
    throw std::invalid_argument("ensemble: mu must sum to 1");
  if (static_cast<int>(ensemble.values.size()) != ensemble.n)
    throw std::invalid_argument("ensemble: values row count mismatch");
  for (const auto& row : ensemble.values) {
    if (static_cast<int>(row.size()) != ensemble.omega_size)
      throw std::invalid_argument("ensemble: values column count mismatch");
    for (double v : row)
      if (std::abs(v) > 1.0)
        throw std::invalid_argument("ensemble: values must lie in [-1, 1]");
  }
}

int pair_index(int n, int i, int j) {
  if (i < 0 || j <= i || j >= n)
    throw std::invalid_argument("pair_index: need 0 <= i < j < n");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<double> pairwise_sq_distances(const FiniteSignalEnsemble& ensemble) {
  validate_ensemble(ensemble);
  const int n = ensemble.n;
  std::vector<double> out(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
  for (int w = 0; w < ensemble.omega_size; ++w) {
    const double m = ensemble.mu[w];
    if (m == 0.0) continue;
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      const double fi = ensemble.values[i][w];
      for (int j = i + 1; j < n; ++j, ++idx) {
        const double diff = fi - ensemble.values[j][w];
        out[idx] += m * diff * diff;
      }
    }
  }
  return out;
}

PointCloud build_distance_cloud(const FiniteSignalEnsemble& ensemble) {
  validate_ensemble(ensemble);
  const int n = ensemble.n;
  const int dim = n * (n - 1) / 2;
  if (dim < 3)
    throw std::invalid_argument("distance cloud: need n(n-1)/2 >= 3");
  PointCloud cloud;
  cloud.space =
      substitute_dimension_back(ExtremeNorm::SupNorm, SpaceKind::VectorLp, dim);
  cloud.weights = ensemble.mu;
  cloud.points.reserve(ensemble.omega_size);
  for (int w = 0; w < ensemble.omega_size; ++w) {
    std::vector<double> v(dim);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      const double fi = ensemble.values[i][w];
      for (int j = i + 1; j < n; ++j, ++idx) {
        const double diff = fi - ensemble.values[j][w];
        v[idx] = diff * diff;
      }
    }
    cloud.points.push_back(std::move(v));
  }
  return cloud;
}

Sketch greedy_sketch(const FiniteSignalEnsemble& ensemble, int k) {
  if (k < 1) throw std::invalid_argument("greedy_sketch: k must be >= 1");
  const PointCloud cloud = center(build_distance_cloud(ensemble));
  const GreedySolution greedy = greedy_approximate_caratheodory(cloud, k);
  Sketch sketch;
  sketch.sample_atoms = greedy.chosen_indices;
  sketch.k = k;
  sketch.dimension = ensemble.n * (ensemble.n - 1) / 2;
  const double p = cloud.space.p;
  sketch.derived_bound = 4.0 * std::exp(1.0) * 21.0 *
                         std::sqrt((p - 1.0) / static_cast<double>(k));
  return sketch;
}

std::vector<double> encode(const FiniteSignalEnsemble& ensemble,
                           const Sketch& sketch, int signal_index) {
  if (signal_index < 0 || signal_index >= ensemble.n)
    throw std::out_of_range("encode: signal index out of range");
  const double scale = 1.0 / std::sqrt(static_cast<double>(sketch.k));
  std::vector<double> out(sketch.sample_atoms.size());
  for (std::size_t s = 0; s < sketch.sample_atoms.size(); ++s)
    out[s] = ensemble.values[signal_index][sketch.sample_atoms[s]] * scale;
  return out;
}

double decode(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("decode: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    s += d * d;
  }
  return s;
}

VerificationReport verify_sketch(const FiniteSignalEnsemble& ensemble,
                                 const Sketch& sketch) {
  validate_ensemble(ensemble);
  for (int a : sketch.sample_atoms)
    if (a < 0 || a >= ensemble.omega_size)
      throw std::invalid_argument("verify_sketch: atom index out of range");
  const std::vector<double> target = pairwise_sq_distances(ensemble);
  std::vector<std::vector<double>> enc(ensemble.n);
  for (int i = 0; i < ensemble.n; ++i) enc[i] = encode(ensemble, sketch, i);

  double worst = 0.0;
  int worst_i = 0, worst_j = 1;
  for (int i = 0; i < ensemble.n; ++i) {
    for (int j = i + 1; j < ensemble.n; ++j) {
      const double err =
          std::abs(decode(enc[i], enc[j]) - target[pair_index(ensemble.n, i, j)]);
      if (err > worst) {
        worst = err;
        worst_i = i;
        worst_j = j;
      }
    }
  }
  VerificationReport report;
  report.achieved = worst;
  report.bound = sketch.derived_bound;
  report.pass = worst <= sketch.derived_bound + 1e-9;
  report.witness = sketch.sample_atoms;
  report.diagnostics["k"] = sketch.k;
  report.diagnostics["worst_pair"] = {worst_i, worst_j};
  return report;
}

}  // namespace nodim
