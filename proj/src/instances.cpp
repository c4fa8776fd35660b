#include "nodim/instances.hpp"

#include <cmath>
#include <stdexcept>

namespace nodim {

namespace {

DenseMatrix matrix_sqrt_inverse(const DenseMatrix& m) {
  const SpectralDecomposition es = eigh(m);
  const int d = m.rows;
  DenseMatrix diag(d, d);
  for (int i = 0; i < d; ++i) {
    if (es.eigenvalues[i] <= 0.0)
      throw std::invalid_argument("matrix_sqrt_inverse: matrix not positive");
    diag.at(i, i) = 1.0 / std::sqrt(es.eigenvalues[i]);
  }
  return matmul(matmul(es.eigenvectors, diag), es.eigenvectors.adjoint());
}

}  // namespace

DenseMatrix random_hermitian(SplitMix64& rng, int d, bool complex_entries) {
  DenseMatrix g(d, d);
  for (cplx& z : g.data)
    z = complex_entries ? cplx(rng.gaussian(), rng.gaussian())
                        : cplx(rng.gaussian(), 0.0);
  DenseMatrix h(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      h.at(i, j) = 0.5 * (g.at(i, j) + std::conj(g.at(j, i)));
  return h;
}

DenseMatrix random_unitary(SplitMix64& rng, int d, bool complex_entries) {
  DenseMatrix g(d, d);
  for (cplx& z : g.data)
    z = complex_entries ? cplx(rng.gaussian(), rng.gaussian())
                        : cplx(rng.gaussian(), 0.0);
  // Modified Gram-Schmidt on columns, two passes.
  for (int j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int jj = 0; jj < j; ++jj) {
        cplx dot = 0.0;
        for (int i = 0; i < d; ++i) dot += std::conj(g.at(i, jj)) * g.at(i, j);
        for (int i = 0; i < d; ++i) g.at(i, j) -= dot * g.at(i, jj);
      }
    }
    double n2 = 0.0;
    for (int i = 0; i < d; ++i) n2 += std::norm(g.at(i, j));
    const double n = std::sqrt(n2);
    if (n < 1e-8)
      throw std::runtime_error("random_unitary: degenerate sample");
    for (int i = 0; i < d; ++i) g.at(i, j) /= n;
  }
  return g;
}

PointCloud gen_caratheodory_instance(std::uint64_t seed, const SpaceSpec& space,
                                     int n, bool centered) {
  if (n < 2) throw std::invalid_argument("gen_caratheodory_instance: n >= 2");
  SplitMix64 rng(seed);
  PointCloud cloud;
  cloud.space = space;
  cloud.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (space.kind == SpaceKind::VectorLp) {
      std::vector<double> v(space.d);
      for (double& x : v) x = rng.gaussian();
      const double target = rng.uniform();
      const double nrm = lp_norm(v, space.p);
      const double scale = nrm > 0.0 ? target / nrm : 0.0;
      for (double& x : v) x *= scale;
      cloud.points.push_back(std::move(v));
    } else {
      DenseMatrix m(space.d, space.d);
      for (cplx& z : m.data) z = cplx(rng.gaussian(), rng.gaussian());
      const double target = rng.uniform();
      const double nrm = schatten_norm(m, space.p);
      const double scale = nrm > 0.0 ? target / nrm : 0.0;
      for (cplx& z : m.data) z *= scale;
      cloud.points.push_back(std::move(m));
    }
  }
  return centered ? center(cloud) : cloud;
}

RegressionInstance gen_regression_instance(std::uint64_t seed, int d, int m,
                                           double R, double r, double noise,
                                           int k) {
  if (noise > r)
    throw std::invalid_argument("gen_regression_instance: noise must be <= r");
  if (d < 3) throw std::invalid_argument("gen_regression_instance: d >= 3");
  SplitMix64 rng(seed);

  std::vector<double> x0(d);
  for (double& v : x0) v = rng.gaussian();
  const double l1 = l1_norm(x0);
  const double scale = l1 > 0.0 ? 0.9 * R / l1 : 0.0;
  for (double& v : x0) v *= scale;

  RegressionInstance out;
  out.system.d = d;
  out.system.R = R;
  out.system.r = r;
  out.system.k = k;
  out.system.a.reserve(m);
  out.system.b.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(d);
    for (double& v : row) v = rng.uniform_symmetric();
    double dot = 0.0;
    for (int j = 0; j < d; ++j) dot += row[j] * x0[j];
    out.system.b.push_back(dot + noise * rng.uniform_symmetric());
    out.system.a.push_back(std::move(row));
  }
  out.hidden_point = std::move(x0);
  validate_system(out.system);
  return out;
}

QuantumInstance gen_quantum_instance(std::uint64_t seed, int d, int m, double t,
                                     double noise, int k, bool complex_entries) {
  if (noise > t)
    throw std::invalid_argument("gen_quantum_instance: noise must be <= t");
  if (d < 3) throw std::invalid_argument("gen_quantum_instance: d >= 3");
  SplitMix64 rng(seed);

  QuantumInstance out;
  out.system.d = d;
  out.system.t = t;
  out.system.k = k;

  out.hidden_state = project_density(random_hermitian(rng, d, complex_entries)).matrix;

  out.system.A.reserve(m);
  out.system.b.reserve(m);
  for (int i = 0; i < m; ++i) {
    DenseMatrix a = random_hermitian(rng, d, complex_entries);
    const SpectralDecomposition es = eigh(a);
    const double spectral = std::max(std::abs(es.eigenvalues.front()),
                                     std::abs(es.eigenvalues.back()));
    if (spectral == 0.0)
      throw std::runtime_error("gen_quantum_instance: degenerate operator");
    for (cplx& z : a.data) z /= spectral;
    out.system.b.push_back(frobenius_inner(a, out.hidden_state) +
                           noise * rng.uniform_symmetric());
    out.system.A.push_back(std::move(a));
  }
  validate_system(out.system);
  return out;
}

PsdDecomposition gen_psd_decomposition(std::uint64_t seed, int d, int n) {
  if (n < d) throw std::invalid_argument("gen_psd_decomposition: need n >= d");
  SplitMix64 rng(seed);
  std::vector<std::vector<double>> g(n, std::vector<double>(d));
  DenseMatrix gram(d, d);
  for (auto& v : g) {
    for (double& x : v) x = rng.gaussian();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) gram.at(i, j) += v[i] * v[j];
  }
  const DenseMatrix whiten = matrix_sqrt_inverse(gram);

  PsdDecomposition out;
  out.A.reserve(n);
  out.lambda.reserve(n);
  out.operator_norm = static_cast<double>(d);
  for (const auto& v : g) {
    std::vector<double> u(d, 0.0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) u[i] += whiten.at(i, j).real() * v[j];
    double s = 0.0;
    for (double x : u) s += x * x;
    // A_i = (d / ||u||^2) u u^T has spectral norm exactly d and weight
    // lambda_i = ||u||^2 / d; together they resolve the identity.
    DenseMatrix a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        a.at(i, j) = (static_cast<double>(d) / s) * u[i] * u[j];
    out.A.push_back(std::move(a));
    out.lambda.push_back(s / static_cast<double>(d));
  }
  return out;
}

}  // namespace nodim
