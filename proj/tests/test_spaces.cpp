#include <doctest.h>

#include <cmath>
#include <vector>

#include "nodim/instances.hpp"
#include "nodim/spaces.hpp"

using namespace nodim;

namespace {

constexpr double kE = 2.718281828459045;

std::vector<double> finite_difference_gradient(const std::vector<double>& x,
                                               double p, double h = 1e-5) {
  std::vector<double> grad(x.size());
  std::vector<double> probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double plus = lp_norm(probe, p);
    probe[i] = x[i] - h;
    const double minus = lp_norm(probe, p);
    probe[i] = x[i];
    grad[i] = (plus - minus) / (2.0 * h);
  }
  return grad;
}

}  // namespace

TEST_CASE("norm basics") {
  CHECK(norm(make_lp(2.0, 2), Point(std::vector<double>{3.0, 4.0})) ==
        doctest::Approx(5.0));
  const int d = 5;
  CHECK(norm(make_schatten(3.0, d), Point(DenseMatrix::identity(d))) ==
        doctest::Approx(std::pow(static_cast<double>(d), 1.0 / 3.0)));
  CHECK_THROWS_AS(norm(make_lp(2.0, 3), Point(std::vector<double>{1.0})),
                  std::invalid_argument);
}

TEST_CASE("schatten norm equals lp norm of singular values on a seeded 4x4") {
  SplitMix64 rng(5);
  DenseMatrix a(4, 4);
  for (cplx& z : a.data) z = cplx(rng.gaussian(), rng.gaussian());
  const SvdResult f = svd(a);
  const double expected = lp_norm(f.singular_values, 3.0);
  CHECK(std::abs(schatten_norm(a, 3.0) - expected) <= 1e-9);
}

TEST_CASE("schatten norm is unitarily invariant") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 3 + rng.uniform_int(4);
    DenseMatrix x(d, d);
    for (cplx& z : x.data) z = cplx(rng.gaussian(), rng.gaussian());
    const DenseMatrix u = random_unitary(rng, d, true);
    const DenseMatrix v = random_unitary(rng, d, true);
    const double p = 1.5 + 3.0 * rng.uniform();
    const double base = schatten_norm(x, p);
    const double rotated = schatten_norm(matmul(matmul(u, x), v), p);
    CHECK(std::abs(base - rotated) <= 1e-9 * (1.0 + base));
  }
}

TEST_CASE("duality map closed forms") {
  const SpaceSpec l4 = make_lp(4.0, 2);
  SUBCASE("basis vector is its own norming functional") {
    for (double p : {1.5, 2.0, 4.0, 7.0}) {
      const Point f =
          duality_map(make_lp(p, 3), Point(std::vector<double>{1.0, 0.0, 0.0}));
      const auto& v = std::get<std::vector<double>>(f);
      CHECK(v[0] == doctest::Approx(1.0));
      CHECK(v[1] == 0.0);
      CHECK(v[2] == 0.0);
    }
  }
  SUBCASE("l4 at (1,1)") {
    const Point x = Point(std::vector<double>{1.0, 1.0});
    const Point fp = duality_map(l4, x);
    const auto& f = std::get<std::vector<double>>(fp);
    const double expected = std::pow(2.0, -0.75);
    CHECK(f[0] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(f[1] == doctest::Approx(expected).epsilon(1e-12));
    CHECK(pairing(duality_map(l4, x), x) ==
          doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-12));
  }
  SUBCASE("zero input is rejected") {
    CHECK_THROWS_WITH_AS(
        duality_map(l4, Point(std::vector<double>{0.0, 0.0})),
        "norming functional undefined at origin", std::invalid_argument);
  }
}

TEST_CASE("duality map matches finite-difference gradient of the norm") {
  SplitMix64 rng(31);
  const SpaceSpec l4 = make_lp(4.0, 8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(8);
    for (double& v : x) v = rng.gaussian();
    const Point fp = duality_map(l4, Point(x));
    const auto& f = std::get<std::vector<double>>(fp);
    const std::vector<double> fd = finite_difference_gradient(x, 4.0);
    for (std::size_t i = 0; i < x.size(); ++i)
      CHECK(std::abs(f[i] - fd[i]) <= 1e-6);
  }
}

TEST_CASE("duality map pairing and dual norm identities") {
  SplitMix64 rng(37);
  for (double p : {1.5, 2.0, 4.0, 6.0}) {
    const SpaceSpec space = make_lp(p, 12);
    const double q = p / (p - 1.0);
    for (int trial = 0; trial < 250; ++trial) {
      std::vector<double> x(12);
      for (double& v : x) v = rng.gaussian();
      const Point xp(x);
      const Point f = duality_map(space, xp);
      CHECK(std::abs(pairing(f, xp) - norm(space, xp)) <= 1e-8);
      CHECK(std::abs(lp_norm(std::get<std::vector<double>>(f), q) - 1.0) <=
            1e-8);
    }
  }
  for (double p : {2.0, 4.0}) {
    const SpaceSpec space = make_schatten(p, 4);
    const double q = p / (p - 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      const DenseMatrix x = random_hermitian(rng, 4, true);
      const Point xp(x);
      const Point f = duality_map(space, xp);
      CHECK(std::abs(pairing(f, xp) - norm(space, xp)) <= 1e-8);
      CHECK(std::abs(schatten_norm(std::get<DenseMatrix>(f), q) - 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("schatten duality map matches finite differences on a real 3x3") {
  SplitMix64 rng(41);
  const SpaceSpec space = make_schatten(4.0, 3);
  DenseMatrix x(3, 3);
  for (cplx& z : x.data) z = rng.gaussian();
  const Point fp = duality_map(space, Point(x));
  const auto& f = std::get<DenseMatrix>(fp);
  const double h = 1e-5;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      DenseMatrix probe = x;
      probe.at(i, j) += h;
      const double plus = schatten_norm(probe, 4.0);
      probe.at(i, j) -= 2.0 * h;
      const double minus = schatten_norm(probe, 4.0);
      CHECK(std::abs(f.at(i, j).real() - (plus - minus) / (2.0 * h)) <= 1e-6);
    }
  }
}

TEST_CASE("caratheodory rate formula") {
  CHECK(caratheodory_rate(make_lp(2.0, 10), 441) == doctest::Approx(1.0));
  CHECK(caratheodory_rate(make_lp(2.0, 10), 4 * 441) == doctest::Approx(0.5));
  CHECK(caratheodory_rate(make_lp(4.0, 10), 16) ==
        doctest::Approx(21.0 * std::sqrt(3.0) / 4.0));
  CHECK_THROWS_AS(caratheodory_rate(make_lp(1.5, 10), 4), std::invalid_argument);

  // Modulus-based form: 2 sqrt(2) e^2 sqrt((p-1)/k), about 20.9 at p=2, k=1.
  const double raw = caratheodory_rate(make_lp(2.0, 10), 1, RateForm::Modulus);
  CHECK(raw == doctest::Approx(2.0 * std::sqrt(2.0) * std::exp(2.0)));
  CHECK(raw < 21.0);
}

TEST_CASE("helly rate formula") {
  CHECK(helly_rate(make_lp(2.0, 10), 32) == doctest::Approx(1.0));
  CHECK(helly_rate(make_lp(2.0, 10), 128) == doctest::Approx(0.5));
  CHECK(helly_rate(make_lp(1.5, 10), 8) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(helly_rate(make_lp(4.0, 10), 8), std::invalid_argument);
}

TEST_CASE("rates are strictly decreasing and scale as 1/sqrt(k)") {
  const SpaceSpec smooth = make_lp(4.0, 10);
  const SpaceSpec convex = make_lp(1.5, 10);
  double prev_c = caratheodory_rate(smooth, 1);
  double prev_h = helly_rate(convex, 1);
  for (int k = 2; k <= 4096; k *= 2) {
    const double c = caratheodory_rate(smooth, k);
    const double h = helly_rate(convex, k);
    CHECK(c < prev_c);
    CHECK(h < prev_h);
    CHECK(c * std::sqrt(static_cast<double>(k)) ==
          doctest::Approx(caratheodory_rate(smooth, 1)));
    CHECK(h * std::sqrt(static_cast<double>(k)) ==
          doctest::Approx(helly_rate(convex, 1)));
    prev_c = c;
    prev_h = h;
  }
}

TEST_CASE("dimension substitution") {
  const SpaceSpec sup = substitute_dimension_back(ExtremeNorm::SupNorm,
                                                  SpaceKind::VectorLp, 1000);
  CHECK(sup.p == doctest::Approx(std::log(1000.0)).epsilon(1e-12));
  CHECK(sup.p == doctest::Approx(6.9078).epsilon(1e-4));

  const SpaceSpec sum = substitute_dimension_back(ExtremeNorm::SumNorm,
                                                  SpaceKind::VectorLp, 1000);
  CHECK(sum.p == doctest::Approx(std::log(1000.0) / (std::log(1000.0) - 1.0)));
  CHECK(sum.p == doctest::Approx(1.1693).epsilon(1e-4));

  // ln 3 < 2: clamped up on the smooth side, down on the convex side.
  CHECK(substitute_dimension_back(ExtremeNorm::SupNorm, SpaceKind::VectorLp, 3)
            .p == 2.0);
  CHECK(substitute_dimension_back(ExtremeNorm::SumNorm, SpaceKind::SchattenSp, 3)
            .p == 2.0);
  CHECK_THROWS_AS(
      substitute_dimension_back(ExtremeNorm::SupNorm, SpaceKind::VectorLp, 2),
      std::invalid_argument);
}

TEST_CASE("sandwich factors and tight cases") {
  const auto [lo, hi] =
      sandwich_factors(ExtremeNorm::SupNorm, SpaceKind::VectorLp, 50);
  CHECK(lo == 1.0);
  CHECK(hi == doctest::Approx(kE).epsilon(1e-15));
  CHECK_THROWS_AS(sandwich_factors(ExtremeNorm::SupNorm, SpaceKind::VectorLp, 2),
                  std::invalid_argument);

  // All-ones vector: ||x||_p / ||x||_inf = d^{1/ln d} = e exactly.
  for (int d : {10, 50, 100}) {
    const double p = std::log(static_cast<double>(d));
    std::vector<double> ones(d, 1.0);
    CHECK(std::abs(lp_norm(ones, p) / sup_norm(ones) - kE) <= 1e-12);
  }

  // Basis vector: lower factor tight.
  std::vector<double> e1(50, 0.0);
  e1[0] = 1.0;
  CHECK(lp_norm(e1, std::log(50.0)) == doctest::Approx(1.0));

  SplitMix64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(50);
    for (double& v : x) v = rng.gaussian();
    const double q = lp_norm(x, std::log(50.0)) / sup_norm(x);
    CHECK(q >= 1.0 - 1e-12);
    CHECK(q <= kE + 1e-12);
  }
}

TEST_CASE("moduli bounds") {
  CHECK(modulus_convexity_lower(make_lp(2.0, 4), 1.0) == doctest::Approx(0.125));
  CHECK(modulus_smoothness_upper(make_lp(2.0, 4), 0.0) == 0.0);
  CHECK(modulus_smoothness_upper(make_lp(3.0, 4), 0.1) == doctest::Approx(0.01));
  CHECK_THROWS_AS(modulus_convexity_lower(make_lp(3.0, 4), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(modulus_smoothness_upper(make_lp(1.5, 4), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(modulus_convexity_lower(make_lp(2.0, 4), 2.5),
                  std::invalid_argument);
}

TEST_CASE("empirical modulus of convexity dominates the quadratic bound") {
  // Antipodal pairs force the value 1 at eps = 2.
  CHECK(empirical_modulus_convexity(make_lp(2.0, 6), 2.0, 500, 1) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Hilbert case: exact modulus 1 - sqrt(1 - eps^2/4).
  const double emp = empirical_modulus_convexity(make_lp(2.0, 6), 1.0, 10000, 2);
  CHECK(emp >= 0.125);
  CHECK(emp >= 1.0 - std::sqrt(0.75) - 1e-9);

  const double emp15 =
      empirical_modulus_convexity(make_lp(1.5, 4), 1.0, 10000, 3);
  CHECK(emp15 >= 0.5 / 8.0);

  const double emp_schatten =
      empirical_modulus_convexity(make_schatten(1.5, 3), 1.0, 400, 4);
  CHECK(emp_schatten >= 0.5 / 8.0 - 1e-9);
}
