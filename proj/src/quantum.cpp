#include "nodim/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nodim/caratheodory.hpp"
#include "nodim/parallel.hpp"
#include "nodim/spaces.hpp"

namespace nodim {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kSpectralNormSlack = 1e-12;

DenseMatrix hermitize(const DenseMatrix& m) {
  DenseMatrix out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      out.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
  return out;
}

double min_eigenvalue(const DenseMatrix& m) {
  const SpectralDecomposition es = eigh(m);
  return es.eigenvalues.back();
}

}  // namespace

void validate_system(const MeasurementSystem& system) {
  const int m = static_cast<int>(system.A.size());
  if (m < 1) throw std::invalid_argument("measurement system: no operators");
  if (system.d < 3)
    throw std::invalid_argument("measurement system: d must be >= 3");
  if (system.b.size() != system.A.size())
    throw std::invalid_argument("measurement system: b size mismatch");
  if (system.t < 0.0)
    throw std::invalid_argument("measurement system: t must be >= 0");
  if (system.k < 1 || system.k > m)
    throw std::invalid_argument("measurement system: k must lie in [1, m]");
  for (const DenseMatrix& a : system.A) {
    if (a.rows != system.d || a.cols != system.d)
      throw std::invalid_argument("measurement system: operator shape mismatch");
    if (!a.is_hermitian(kHermitianTol))
      throw std::invalid_argument("measurement system: operator not hermitian");
    const SpectralDecomposition es = eigh(a);
    const double spectral =
        std::max(std::abs(es.eigenvalues.front()), std::abs(es.eigenvalues.back()));
    // Rejected rather than rescaled: scaling A_i would silently change the
    // meaning of b_i.
    if (spectral > 1.0 + kSpectralNormSlack)
      throw std::invalid_argument(
          "measurement system: operator spectral norm exceeds 1");
  }
}

bool is_valid_density(const DenseMatrix& m, double tol) {
  if (!m.is_hermitian(kHermitianTol)) return false;
  if (std::abs(m.trace_real() - 1.0) > tol) return false;
  return min_eigenvalue(m) >= -tol;
}

DensityMatrix project_density(const DenseMatrix& m) {
  if (!m.is_hermitian(kHermitianTol))
    throw std::invalid_argument("project_density: input not hermitian");
  const SpectralDecomposition es = eigh(m);
  const std::vector<double> w = project_simplex(es.eigenvalues, 1.0);
  const int d = m.rows;
  DenseMatrix diag(d, d);
  for (int i = 0; i < d; ++i) diag.at(i, i) = w[i];
  DenseMatrix rho =
      matmul(matmul(es.eigenvectors, diag), es.eigenvectors.adjoint());
  return DensityMatrix{hermitize(rho)};
}

DenseMatrix project_measurement_slab(const DenseMatrix& m, const DenseMatrix& A,
                                     double b, double t) {
  const double a2 = A.frobenius_norm() * A.frobenius_norm();
  if (a2 == 0.0)
    throw std::invalid_argument("project_measurement_slab: zero operator");
  const double resid = frobenius_inner(A, m) - b;
  const double excess = std::max(std::abs(resid) - t, 0.0);
  if (excess == 0.0) return m;
  const double shift = (resid < 0.0 ? -excess : excess) / a2;
  DenseMatrix out = m;
  for (std::size_t i = 0; i < out.data.size(); ++i)
    out.data[i] -= shift * A.data[i];
  return out;
}

std::vector<FeasibilityReport> check_kwise_consistency(
    const MeasurementSystem& system, const SubsetPolicy& policy, double tol) {
  validate_system(system);
  if (!(tol > 0.0)) throw std::invalid_argument("check_kwise: tol must be > 0");
  const std::vector<std::vector<int>> subsets =
      choose_subsets(static_cast<int>(system.A.size()), system.k, policy);

  std::vector<FeasibilityReport> reports(subsets.size());
  parallel_for(static_cast<int>(subsets.size()), [&](int idx) {
    const std::vector<int>& subset = subsets[idx];
    const int d = system.d;
    const std::size_t nsets = subset.size() + 1;

    DenseMatrix x(d, d);
    for (int i = 0; i < d; ++i) x.at(i, i) = 1.0 / static_cast<double>(d);
    std::vector<DenseMatrix> corrections(nsets, DenseMatrix(d, d));

    FeasibilityReport rep;
    rep.subset = subset;
    const int max_iter = 10000;
    for (int cycle = 1; cycle <= max_iter; ++cycle) {
      for (std::size_t s = 0; s < nsets; ++s) {
        DenseMatrix z = x + corrections[s];
        DenseMatrix projected =
            (s == 0) ? project_density(z).matrix
                     : project_measurement_slab(z, system.A[subset[s - 1]],
                                                system.b[subset[s - 1]], system.t);
        corrections[s] = z - projected;
        x = std::move(projected);
      }
      double worst = std::abs(x.trace_real() - 1.0);
      worst = std::max(worst, std::max(-min_eigenvalue(hermitize(x)), 0.0));
      for (int j : subset)
        worst = std::max(
            worst,
            std::max(std::abs(frobenius_inner(system.A[j], x) - system.b[j]) -
                         system.t,
                     0.0));
      rep.residual = worst;
      rep.iterations = cycle;
      if (worst <= tol) {
        rep.feasible = true;
        rep.witness = Point(hermitize(x));
        break;
      }
    }
    if (!rep.feasible) rep.witness = Point(hermitize(x));
    reports[idx] = std::move(rep);
  });
  return reports;
}

DensityMatrix solve_global_state(const MeasurementSystem& system,
                                 const MatrixSolveOptions& options) {
  validate_system(system);
  const int m = static_cast<int>(system.A.size());
  const int d = system.d;
  const double step_scale = std::exp(1.0);

  DenseMatrix x(d, d);
  for (int i = 0; i < d; ++i) x.at(i, i) = 1.0 / static_cast<double>(d);
  DenseMatrix best = x;
  double best_value = std::numeric_limits<double>::infinity();

  for (int t = 1; t <= options.max_iters; ++t) {
    int active = 0;
    double active_residual = 0.0;
    double worst = -1.0;
    for (int i = 0; i < m; ++i) {
      const double resid = frobenius_inner(system.A[i], x) - system.b[i];
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
    for (std::size_t i = 0; i < x.data.size(); ++i)
      x.data[i] -= eta * sign * system.A[active].data[i];
    x = project_density(hermitize(x)).matrix;
    if (options.on_iterate) options.on_iterate(x);
  }
  return DensityMatrix{best};
}

VerificationReport verify_quantum_bound(
    const MeasurementSystem& system, const DensityMatrix& rho,
    const std::vector<FeasibilityReport>& kwise_reports) {
  validate_system(system);
  bool hypothesis = !kwise_reports.empty();
  for (const FeasibilityReport& rep : kwise_reports)
    if (!rep.feasible) hypothesis = false;

  double worst = 0.0;
  for (std::size_t i = 0; i < system.A.size(); ++i)
    worst = std::max(worst,
                     std::abs(frobenius_inner(system.A[i], rho.matrix) -
                              system.b[i]));

  const double bound =
      system.t + 21.0 * std::sqrt(std::log(static_cast<double>(system.d)) /
                                  static_cast<double>(system.k));
  const bool valid_state = is_valid_density(rho.matrix);

  VerificationReport report;
  report.achieved = worst;
  report.bound = bound;
  report.pass = hypothesis && valid_state && worst <= bound + 1e-9;
  report.diagnostics["hypothesis_confirmed"] = hypothesis;
  report.diagnostics["kwise_reports"] = kwise_reports.size();
  report.diagnostics["valid_density"] = valid_state;
  report.diagnostics["trace"] = rho.matrix.trace_real();
  report.diagnostics["min_eigenvalue"] = min_eigenvalue(hermitize(rho.matrix));
  return report;
}

SparsifyResult sparsify_psd_decomposition(const std::vector<DenseMatrix>& A,
                                          const std::vector<double>& lambda,
                                          int k, double operator_norm_cap) {
  if (A.empty()) throw std::invalid_argument("sparsify: no matrices");
  if (lambda.size() != A.size())
    throw std::invalid_argument("sparsify: weight count mismatch");
  if (k < 1) throw std::invalid_argument("sparsify: k must be >= 1");
  const int d = A.front().rows;

  PointCloud cloud;
  cloud.space = make_schatten(
      std::max(std::log(static_cast<double>(d)), 2.0), d);
  cloud.weights = lambda;
  for (const DenseMatrix& a : A) {
    if (a.rows != d || a.cols != d)
      throw std::invalid_argument("sparsify: matrix shape mismatch");
    cloud.points.push_back(a);
  }
  // The decomposition identity sum lambda_i A_i = Id is exactly the claim
  // that Id is the cloud barycenter.
  const Point bary = cloud_barycenter(cloud);
  const DenseMatrix gap = std::get<DenseMatrix>(bary) - DenseMatrix::identity(d);
  if (gap.frobenius_norm() > 1e-9)
    throw std::invalid_argument("sparsify: weights do not reproduce the identity");

  const PointCloud centered = center(cloud);
  const GreedySolution greedy = greedy_approximate_caratheodory(centered, k);

  DenseMatrix average(d, d);
  for (int idx : greedy.chosen_indices)
    average = average + (1.0 / static_cast<double>(k)) * A[idx];

  SparsifyResult out;
  out.indices = greedy.chosen_indices;
  out.beta.assign(greedy.chosen_indices.size(), 1.0 / static_cast<double>(k));
  out.achieved_error = schatten_inf_norm(average - DenseMatrix::identity(d));
  out.heuristic_bound = std::exp(1.0) * (operator_norm_cap + 1.0) * 21.0 *
                        std::sqrt((cloud.space.p - 1.0) / static_cast<double>(k));
  return out;
}

}  // namespace nodim
