#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "nodim/instances.hpp"
#include "nodim/numkernel.hpp"
#include "nodim/rng.hpp"

using namespace nodim;

namespace {

// det(A - x I) via complex LU with partial pivoting. For Hermitian A and
// real x the determinant is real; the imaginary part is rounding noise.
double det_shifted(const DenseMatrix& a, double x) {
  const int d = a.rows;
  std::vector<cplx> lu = a.data;
  auto at = [&](int i, int j) -> cplx& {
    return lu[static_cast<std::size_t>(i) * d + j];
  };
  for (int i = 0; i < d; ++i) at(i, i) -= x;
  cplx det = 1.0;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    double best = std::abs(at(c, c));
    for (int r = c + 1; r < d; ++r) {
      if (std::abs(at(r, c)) > best) {
        best = std::abs(at(r, c));
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < d; ++j) std::swap(at(piv, j), at(c, j));
      det = -det;
    }
    det *= at(c, c);
    for (int r = c + 1; r < d; ++r) {
      const cplx f = at(r, c) / at(c, c);
      for (int j = c; j < d; ++j) at(r, j) -= f * at(c, j);
    }
  }
  return det.real();
}

// Roots of the characteristic polynomial by sign-change scan plus bisection.
// Independent of the Jacobi path; adequate for seeded matrices with well
// separated spectra.
std::vector<double> charpoly_roots(const DenseMatrix& a, int grid = 20000) {
  const double radius = a.frobenius_norm() + 1.0;
  std::vector<double> roots;
  double prev_x = -radius;
  double prev_f = det_shifted(a, prev_x);
  for (int i = 1; i <= grid; ++i) {
    const double x = -radius + 2.0 * radius * i / grid;
    const double f = det_shifted(a, x);
    if ((prev_f < 0.0 && f > 0.0) || (prev_f > 0.0 && f < 0.0)) {
      double lo = prev_x, hi = x, flo = prev_f;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = det_shifted(a, mid);
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_f = f;
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

// Nearest point of the mass-simplex by exhaustive support enumeration.
std::vector<double> simplex_projection_oracle(const std::vector<double>& v,
                                              double mass) {
  const int n = static_cast<int>(v.size());
  double best_dist = std::numeric_limits<double>::infinity();
  std::vector<double> best;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sum += v[i];
        ++count;
      }
    }
    const double theta = (sum - mass) / count;
    std::vector<double> w(n, 0.0);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (mask & (1u << i)) {
        w[i] = v[i] - theta;
        if (w[i] < -1e-12) ok = false;
      }
    }
    if (!ok) continue;
    double dist = 0.0;
    for (int i = 0; i < n; ++i) dist += (v[i] - w[i]) * (v[i] - w[i]);
    if (dist < best_dist) {
      best_dist = dist;
      best = w;
    }
  }
  return best;
}

double reconstruction_error(const DenseMatrix& a, const SpectralDecomposition& es) {
  DenseMatrix lam(a.rows, a.rows);
  for (int i = 0; i < a.rows; ++i) lam.at(i, i) = es.eigenvalues[i];
  const DenseMatrix rebuilt =
      matmul(matmul(es.eigenvectors, lam), es.eigenvectors.adjoint());
  return (a - rebuilt).frobenius_norm();
}

double orthonormality_error(const DenseMatrix& u) {
  const DenseMatrix gram = matmul(u.adjoint(), u);
  return (gram - DenseMatrix::identity(u.rows)).frobenius_norm();
}

}  // namespace

TEST_CASE("eigh on diagonal and identity matrices") {
  const DenseMatrix a = DenseMatrix::diag({3.0, 1.0, 2.0});
  const SpectralDecomposition es = eigh(a);
  CHECK(es.eigenvalues == std::vector<double>{3.0, 2.0, 1.0});
  // Eigenvectors are permuted identity columns.
  CHECK(std::abs(es.eigenvectors.at(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(es.eigenvectors.at(2, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(es.eigenvectors.at(1, 2)) == doctest::Approx(1.0));

  const SpectralDecomposition id = eigh(DenseMatrix::identity(4));
  for (double ev : id.eigenvalues) CHECK(ev == doctest::Approx(1.0));
}

TEST_CASE("eigh matches characteristic-polynomial bisection on a seeded 6x6") {
  SplitMix64 rng(42);
  const DenseMatrix a = random_hermitian(rng, 6, true);
  const SpectralDecomposition es = eigh(a);
  const std::vector<double> roots = charpoly_roots(a);
  REQUIRE(roots.size() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(std::abs(es.eigenvalues[i] - roots[i]) <= 1e-8);
}

TEST_CASE("eigh rejects non-hermitian input") {
  DenseMatrix a(2, 2);
  a.at(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh(a), std::invalid_argument);
}

TEST_CASE("eigh ties broken by original diagonal order") {
  const DenseMatrix a = DenseMatrix::diag({1.0, 2.0, 1.0});
  const SpectralDecomposition es = eigh(a);
  CHECK(es.eigenvalues == std::vector<double>{2.0, 1.0, 1.0});
  CHECK(std::abs(es.eigenvectors.at(0, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(es.eigenvectors.at(2, 2)) == doctest::Approx(1.0));
}

TEST_CASE("svd of diagonal and zero matrices") {
  const SvdResult f = svd(DenseMatrix::diag({-2.0, 1.0}));
  CHECK(f.singular_values == std::vector<double>{2.0, 1.0});

  const SvdResult z = svd(DenseMatrix(3, 3));
  for (double s : z.singular_values) CHECK(s == 0.0);
  CHECK(orthonormality_error(z.left) < 1e-12);
}

TEST_CASE("svd singular values agree with eigh of A*A on a seeded 5x5") {
  SplitMix64 rng(7);
  DenseMatrix a(5, 5);
  for (cplx& z : a.data) z = cplx(rng.gaussian(), rng.gaussian());
  const SvdResult f = svd(a);
  const SpectralDecomposition es = eigh(matmul(a.adjoint(), a));
  for (int i = 0; i < 5; ++i) {
    const double expected = std::sqrt(std::max(es.eigenvalues[i], 0.0));
    CHECK(f.singular_values[i] == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("eigh and svd residuals on seeded instances") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 1 + rng.uniform_int(32);
    const bool complex_entries = (trial % 2) == 1;
    const DenseMatrix h = random_hermitian(rng, d, complex_entries);
    const SpectralDecomposition es = eigh(h);
    const double tol = 1e-9 * (1.0 + h.frobenius_norm());
    CHECK(reconstruction_error(h, es) <= tol);
    CHECK(orthonormality_error(es.eigenvectors) <= 1e-9);
    for (std::size_t i = 1; i < es.eigenvalues.size(); ++i)
      CHECK(es.eigenvalues[i - 1] >= es.eigenvalues[i]);

    if (trial % 3 == 0) {
      DenseMatrix a(d, d);
      for (cplx& z : a.data)
        z = complex_entries ? cplx(rng.gaussian(), rng.gaussian())
                            : cplx(rng.gaussian(), 0.0);
      const SvdResult f = svd(a);
      DenseMatrix sigma(d, d);
      for (int i = 0; i < d; ++i) sigma.at(i, i) = f.singular_values[i];
      const DenseMatrix rebuilt =
          matmul(matmul(f.left, sigma), f.right.adjoint());
      CHECK((a - rebuilt).frobenius_norm() <= 1e-9 * (1.0 + a.frobenius_norm()));
      CHECK(orthonormality_error(f.left) <= 1e-9);
      CHECK(orthonormality_error(f.right) <= 1e-9);
      for (int i = 1; i < d; ++i)
        CHECK(f.singular_values[i - 1] >= f.singular_values[i]);
    }
  }
}

TEST_CASE("simplex projection basics and oracle agreement") {
  CHECK(project_simplex({0.5, 0.5}, 1.0) == std::vector<double>{0.5, 0.5});
  CHECK(project_simplex({2.0, 0.0}, 1.0) == std::vector<double>{1.0, 0.0});
  CHECK_THROWS_AS(project_simplex({1.0}, 0.0), std::invalid_argument);

  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(6);
    for (double& x : v) x = 2.0 * rng.gaussian();
    const std::vector<double> got = project_simplex(v, 1.0);
    const std::vector<double> expected = simplex_projection_oracle(v, 1.0);
    REQUIRE(expected.size() == got.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(std::abs(got[i] - expected[i]) <= 1e-10);
  }
}

TEST_CASE("simplex projection is idempotent and permutation equivariant") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v(8);
    for (double& x : v) x = 3.0 * rng.gaussian();
    const std::vector<double> once = project_simplex(v, 2.5);
    const std::vector<double> twice = project_simplex(once, 2.5);
    double sum = 0.0;
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(once[i] >= 0.0);
      sum += once[i];
      CHECK(twice[i] == doctest::Approx(once[i]).epsilon(1e-12));
    }
    CHECK(sum == doctest::Approx(2.5).epsilon(1e-12));

    std::vector<double> reversed(v.rbegin(), v.rend());
    const std::vector<double> proj_reversed = project_simplex(reversed, 2.5);
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(proj_reversed[v.size() - 1 - i] ==
            doctest::Approx(once[i]).epsilon(1e-12));
  }
}

TEST_CASE("l1 ball projection basics and oracle agreement") {
  const std::vector<double> inside{0.2, -0.3};
  CHECK(project_l1_ball(inside, 1.0) == inside);
  CHECK(project_l1_ball({2.0, 0.0, 0.0}, 1.0) ==
        std::vector<double>{1.0, 0.0, 0.0});

  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(5);
    for (double& x : v) x = 2.0 * rng.gaussian();
    const std::vector<double> got = project_l1_ball(v, 1.0);

    double l1 = 0.0;
    for (double x : v) l1 += std::abs(x);
    if (l1 <= 1.0) {
      CHECK(got == v);
      continue;
    }
    std::vector<double> absv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) absv[i] = std::abs(v[i]);
    const std::vector<double> w = simplex_projection_oracle(absv, 1.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double expected = v[i] < 0.0 ? -w[i] : w[i];
      CHECK(std::abs(got[i] - expected) <= 1e-10);
    }
  }
}

TEST_CASE("l1 ball projection is a contraction onto the ball") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(6);
    for (double& x : v) x = 4.0 * rng.gaussian();
    const std::vector<double> once = project_l1_ball(v, 1.5);
    double l1 = 0.0;
    for (double x : once) l1 += std::abs(x);
    CHECK(l1 <= 1.5 + 1e-12);
    const std::vector<double> twice = project_l1_ball(once, 1.5);
    for (std::size_t i = 0; i < once.size(); ++i)
      CHECK(std::abs(twice[i] - once[i]) <= 1e-12);
  }
}
