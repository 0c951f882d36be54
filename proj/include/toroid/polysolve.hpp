#pragma once

// Real-root solvers for low-degree polynomials.
//
// solve_quartic follows the closed-form Ferrari route: monic normalisation,
// depression, one real root of the resolvent cubic, factorisation into two
// quadratics, then Newton polishing on the original polynomial. The
// isolation + bisection solver is kept independent of that route so the two
// can check each other.

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace toroid {

struct Root {
  double value;
  int multiplicity;
};

// Roots in strictly increasing order.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::vector<Root> roots) : roots_(std::move(roots)) {}

  const std::vector<Root>& roots() const { return roots_; }
  bool empty() const { return roots_.empty(); }
  std::size_t distinct() const { return roots_.size(); }
  int total_multiplicity() const;
  // Each root repeated by its multiplicity.
  std::vector<double> expanded() const;

 private:
  std::vector<Root> roots_;
};

struct QuarticCoeffs {
  double a, b, c, d, e;  // a t^4 + b t^3 + c t^2 + d t + e

  double operator()(double t) const { return (((a * t + b) * t + c) * t + d) * t + e; }
  double derivative(double t) const { return ((4.0 * a * t + 3.0 * b) * t + 2.0 * c) * t + d; }
  double max_abs() const;
};

// x^4 + p x^2 + q x + r, with t = x - shift.
struct DepressedQuartic {
  double p, q, r;
  double shift;
};

// Monic quadratic factors x^2 + b1 x + c1 and x^2 + b2 x + c2.
struct QuadraticPair {
  std::array<double, 2> first;
  std::array<double, 2> second;
};

// Relative distance below which two roots are merged.
inline constexpr double kMergeRel = 1e-7;

RootSet solve_quadratic(double a, double b, double c);
// x^3 + alpha x^2 + beta x + gamma
RootSet solve_cubic(double alpha, double beta, double gamma);
DepressedQuartic depress(const QuarticCoeffs& q);
// Resolvent root selection and the two quadratic factors.
QuadraticPair ferrari_factors(const DepressedQuartic& dq);
RootSet solve_quartic(const QuarticCoeffs& q);

// Largest deviation over the Vieta identities, each normalised by
// max(1, |expected|). Throws DomainError unless the set holds `degree` roots.
double vieta_residual(const RootSet& roots, std::span<const double> coeffs_high_first);
double vieta_residual(const RootSet& roots, const QuarticCoeffs& q);

RootSet isolate_and_bisect(const QuarticCoeffs& q, double lo, double hi, double tol);
// Interval [-B, B] containing every real root (Cauchy bound).
std::pair<double, double> root_bound(const QuarticCoeffs& q);

}  // namespace toroid
