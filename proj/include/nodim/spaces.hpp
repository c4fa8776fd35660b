#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "nodim/numkernel.hpp"

namespace nodim {

enum class SpaceKind { VectorLp, SchattenSp };

// Ambient normed space: l_p^d on vectors, or the Schatten class S_p on
// d x d matrices. p is always finite and > 1; the l_1 / l_inf (S_1 / S_inf)
// extremes enter only through substitute_dimension_back().
struct SpaceSpec {
  SpaceKind kind = SpaceKind::VectorLp;
  double p = 2.0;
  int d = 1;
};

SpaceSpec make_lp(double p, int d);
SpaceSpec make_schatten(double p, int d);

// A point of either space family.
using Point = std::variant<std::vector<double>, DenseMatrix>;

bool point_matches(const SpaceSpec& space, const Point& x);
Point zero_point(const SpaceSpec& space);
void axpy_inplace(double alpha, const Point& x, Point& y);  // y += alpha * x
Point scaled(const Point& x, double alpha);
Point point_sub(const Point& a, const Point& b);

// Duality pairing <f, x>: the dot product for vectors, Re tr(F* X) for
// matrices.
double pairing(const Point& f, const Point& x);

double lp_norm(std::span<const double> v, double p);
double sup_norm(std::span<const double> v);
double l1_norm(std::span<const double> v);
double schatten_norm(const DenseMatrix& a, double p);
double schatten_inf_norm(const DenseMatrix& a);
double schatten_one_norm(const DenseMatrix& a);

double norm(const SpaceSpec& space, const Point& x);

// Norming functional of x: the unique dual-unit-norm functional pairing to
// norm(x). Coordinates sign(x_i)|x_i|^{p-1} / ||x||^{p-1} in the vector
// case, U diag(sigma^{p-1}) V* / ||X||^{p-1} from the SVD in the Schatten
// case. Throws for inputs with norm below 1e-14.
Point duality_map(const SpaceSpec& space, const Point& x);

enum class RateForm {
  Constant,  // 21 sqrt((p-1)/k)
  Modulus,   // 4 e^2 / (k rho^{-1}(1/k)) = 2 sqrt(2) e^2 sqrt((p-1)/k)
};

// Guaranteed norm of the best k-term average of unit-ball points whose
// convex hull contains the origin. Defined for p >= 2.
double caratheodory_rate(const SpaceSpec& space, int k,
                         RateForm form = RateForm::Constant);

// Neighborhood radius for which k-wise intersection inside the unit ball
// forces a global common point. Defined for 1 < p <= 2.
double helly_rate(const SpaceSpec& space, int k);

enum class ExtremeNorm { SupNorm, SumNorm };

// Replaces l_inf^d (resp. l_1^d) by l_p^d with p = ln d (resp. its dual
// exponent), at the price of a factor e in the norm comparison. The
// returned exponent is clamped to the side of 2 the rate formulas need:
// p = max(ln d, 2) for the sup direction, p' = min(ln d/(ln d - 1), 2) for
// the sum direction. Same for the Schatten pair S_inf / S_1.
SpaceSpec substitute_dimension_back(ExtremeNorm extreme, SpaceKind kind, int d);

// The (lower, upper) norm-comparison factors of the substitution: (1, e).
std::pair<double, double> sandwich_factors(ExtremeNorm extreme, SpaceKind kind,
                                           int d);

// (p-1) eps^2 / 8, valid for 1 < p <= 2.
double modulus_convexity_lower(const SpaceSpec& space, double eps);
// (p-1) t^2 / 2, valid for 2 <= p < inf.
double modulus_smoothness_upper(const SpaceSpec& space, double t);

// Monte-Carlo upper estimate of the modulus of convexity: minimum of
// 1 - ||(x+y)/2|| over sampled unit pairs with ||x-y|| >= eps. Pairs that
// fail the separation constraint fall back to (x, -x), so eps = 2 is
// covered and the sample is never empty.
double empirical_modulus_convexity(const SpaceSpec& space, double eps,
                                   int sample_count, std::uint64_t seed);

}  // namespace nodim
