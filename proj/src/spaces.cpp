#include "nodim/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nodim/rng.hpp"

namespace nodim {

namespace {

constexpr double kZeroNormTol = 1e-14;

const std::vector<double>& as_vector(const Point& x) {
  if (const auto* v = std::get_if<std::vector<double>>(&x)) return *v;
  throw std::invalid_argument("expected a vector point");
}

const DenseMatrix& as_matrix(const Point& x) {
  if (const auto* m = std::get_if<DenseMatrix>(&x)) return *m;
  throw std::invalid_argument("expected a matrix point");
}

double clamped_log_exponent(int d) {
  if (d < 3) throw std::invalid_argument("substitution requires d >= 3");
  return std::log(static_cast<double>(d));
}

Point random_unit_point(const SpaceSpec& space, SplitMix64& rng) {
  if (space.kind == SpaceKind::VectorLp) {
    std::vector<double> v(space.d);
    for (double& x : v) x = rng.gaussian();
    double n = lp_norm(v, space.p);
    if (n == 0.0) {
      v[0] = 1.0;
      n = 1.0;
    }
    for (double& x : v) x /= n;
    return v;
  }
  DenseMatrix m(space.d, space.d);
  for (cplx& z : m.data) z = cplx(rng.gaussian(), rng.gaussian());
  double n = schatten_norm(m, space.p);
  if (n == 0.0) {
    m.at(0, 0) = 1.0;
    n = 1.0;
  }
  for (cplx& z : m.data) z /= n;
  return m;
}

}  // namespace

SpaceSpec make_lp(double p, int d) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("SpaceSpec: p must be finite and > 1");
  if (d < 1) throw std::invalid_argument("SpaceSpec: d must be >= 1");
  return SpaceSpec{SpaceKind::VectorLp, p, d};
}

SpaceSpec make_schatten(double p, int d) {
  SpaceSpec s = make_lp(p, d);
  s.kind = SpaceKind::SchattenSp;
  return s;
}

bool point_matches(const SpaceSpec& space, const Point& x) {
  if (space.kind == SpaceKind::VectorLp) {
    const auto* v = std::get_if<std::vector<double>>(&x);
    return v && static_cast<int>(v->size()) == space.d;
  }
  const auto* m = std::get_if<DenseMatrix>(&x);
  return m && m->rows == space.d && m->cols == space.d;
}

Point zero_point(const SpaceSpec& space) {
  if (space.kind == SpaceKind::VectorLp)
    return std::vector<double>(space.d, 0.0);
  return DenseMatrix(space.d, space.d);
}

void axpy_inplace(double alpha, const Point& x, Point& y) {
  if (auto* vy = std::get_if<std::vector<double>>(&y)) {
    const auto& vx = as_vector(x);
    if (vx.size() != vy->size()) throw std::invalid_argument("axpy: size mismatch");
    for (std::size_t i = 0; i < vx.size(); ++i) (*vy)[i] += alpha * vx[i];
    return;
  }
  auto& my = std::get<DenseMatrix>(y);
  const auto& mx = as_matrix(x);
  if (mx.rows != my.rows || mx.cols != my.cols)
    throw std::invalid_argument("axpy: shape mismatch");
  for (std::size_t i = 0; i < mx.data.size(); ++i) my.data[i] += alpha * mx.data[i];
}

Point scaled(const Point& x, double alpha) {
  Point out = x;
  if (auto* v = std::get_if<std::vector<double>>(&out)) {
    for (double& e : *v) e *= alpha;
  } else {
    for (cplx& e : std::get<DenseMatrix>(out).data) e *= alpha;
  }
  return out;
}

Point point_sub(const Point& a, const Point& b) {
  Point out = a;
  axpy_inplace(-1.0, b, out);
  return out;
}

double pairing(const Point& f, const Point& x) {
  if (const auto* vf = std::get_if<std::vector<double>>(&f)) {
    const auto& vx = as_vector(x);
    double s = 0.0;
    for (std::size_t i = 0; i < vf->size(); ++i) s += (*vf)[i] * vx[i];
    return s;
  }
  return frobenius_inner(as_matrix(f), as_matrix(x));
}

double lp_norm(std::span<const double> v, double p) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double l1_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double schatten_norm(const DenseMatrix& a, double p) {
  const SvdResult f = svd(a);
  return lp_norm(f.singular_values, p);
}

double schatten_inf_norm(const DenseMatrix& a) {
  const SvdResult f = svd(a);
  return f.singular_values.empty() ? 0.0 : f.singular_values.front();
}

double schatten_one_norm(const DenseMatrix& a) {
  const SvdResult f = svd(a);
  return l1_norm(f.singular_values);
}

double norm(const SpaceSpec& space, const Point& x) {
  if (!point_matches(space, x))
    throw std::invalid_argument("norm: point does not match the space");
  if (space.kind == SpaceKind::VectorLp) return lp_norm(as_vector(x), space.p);
  return schatten_norm(as_matrix(x), space.p);
}

Point duality_map(const SpaceSpec& space, const Point& x) {
  const double n = norm(space, x);
  if (n < kZeroNormTol)
    throw std::invalid_argument("norming functional undefined at origin");
  const double pm1 = space.p - 1.0;
  if (space.kind == SpaceKind::VectorLp) {
    const auto& v = as_vector(x);
    std::vector<double> f(v.size());
    const double denom = std::pow(n, pm1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double mag = std::pow(std::abs(v[i]), pm1);
      f[i] = (v[i] < 0.0 ? -mag : mag) / denom;
    }
    return f;
  }
  const DenseMatrix& m = as_matrix(x);
  const SvdResult f = svd(m);
  const int d = m.rows;
  DenseMatrix scaledSigma(d, d);
  const double denom = std::pow(n, pm1);
  for (int i = 0; i < d; ++i)
    scaledSigma.at(i, i) = std::pow(f.singular_values[i], pm1) / denom;
  return matmul(matmul(f.left, scaledSigma), f.right.adjoint());
}

double caratheodory_rate(const SpaceSpec& space, int k, RateForm form) {
  if (k < 1) throw std::invalid_argument("caratheodory_rate: k must be >= 1");
  if (space.p < 2.0)
    throw std::invalid_argument("caratheodory_rate: defined for p >= 2 only");
  const double ratio = std::sqrt((space.p - 1.0) / static_cast<double>(k));
  if (form == RateForm::Constant) return 21.0 * ratio;
  // rho^{-1}(1/k) = sqrt(2/((p-1) k)) for rho(t) = (p-1) t^2 / 2.
  const double e2 = std::exp(2.0);
  return 2.0 * std::sqrt(2.0) * e2 * ratio;
}

double helly_rate(const SpaceSpec& space, int k) {
  if (k < 1) throw std::invalid_argument("helly_rate: k must be >= 1");
  if (space.p > 2.0)
    throw std::invalid_argument("helly_rate: defined for 1 < p <= 2 only");
  return (4.0 * std::sqrt(2.0) / std::sqrt(space.p - 1.0)) /
         std::sqrt(static_cast<double>(k));
}

SpaceSpec substitute_dimension_back(ExtremeNorm extreme, SpaceKind kind, int d) {
  const double lnd = clamped_log_exponent(d);
  double p;
  if (extreme == ExtremeNorm::SupNorm) {
    p = std::max(lnd, 2.0);
  } else {
    p = std::min(lnd / (lnd - 1.0), 2.0);
  }
  SpaceSpec s{kind, p, d};
  return s;
}

std::pair<double, double> sandwich_factors(ExtremeNorm, SpaceKind, int d) {
  clamped_log_exponent(d);
  return {1.0, std::exp(1.0)};
}

double modulus_convexity_lower(const SpaceSpec& space, double eps) {
  if (eps < 0.0 || eps > 2.0)
    throw std::invalid_argument("modulus_convexity_lower: eps must be in [0, 2]");
  if (!(space.p > 1.0 && space.p <= 2.0))
    throw std::invalid_argument("modulus_convexity_lower: needs 1 < p <= 2");
  return (space.p - 1.0) * eps * eps / 8.0;
}

double modulus_smoothness_upper(const SpaceSpec& space, double t) {
  if (t < 0.0)
    throw std::invalid_argument("modulus_smoothness_upper: t must be >= 0");
  if (!(space.p >= 2.0))
    throw std::invalid_argument("modulus_smoothness_upper: needs 2 <= p < inf");
  return (space.p - 1.0) * t * t / 2.0;
}

double empirical_modulus_convexity(const SpaceSpec& space, double eps,
                                   int sample_count, std::uint64_t seed) {
  if (eps < 0.0 || eps > 2.0)
    throw std::invalid_argument("empirical_modulus_convexity: eps in [0, 2]");
  if (sample_count < 1)
    throw std::invalid_argument("empirical_modulus_convexity: need samples");
  SplitMix64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < sample_count; ++s) {
    Point x = random_unit_point(space, rng);
    Point y = random_unit_point(space, rng);
    if (norm(space, point_sub(x, y)) < eps) y = scaled(x, -1.0);
    Point mid = x;
    axpy_inplace(1.0, y, mid);
    best = std::min(best, 1.0 - 0.5 * norm(space, mid));
  }
  return best;
}

}  // namespace nodim
