#include "toroid/polysolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "toroid/error.hpp"

namespace toroid {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Sorts candidate roots and merges neighbours closer than kMergeRel.
RootSet merge_roots(std::vector<Root> raw) {
  std::sort(raw.begin(), raw.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  std::vector<Root> out;
  for (const Root& r : raw) {
    if (!out.empty()) {
      Root& last = out.back();
      const double gap = std::abs(r.value - last.value);
      if (gap <= kMergeRel * std::max(1.0, std::max(std::abs(r.value), std::abs(last.value)))) {
        const int m = last.multiplicity + r.multiplicity;
        last.value = (last.value * last.multiplicity + r.value * r.multiplicity) / m;
        last.multiplicity = m;
        continue;
      }
    }
    out.push_back(r);
  }
  return RootSet(std::move(out));
}

double cubic_value(double alpha, double beta, double gamma, double x) {
  return ((x + alpha) * x + beta) * x + gamma;
}

double polish_cubic(double alpha, double beta, double gamma, double x) {
  double fx = cubic_value(alpha, beta, gamma, x);
  for (int i = 0; i < 4 && fx != 0.0; ++i) {
    const double d = (3.0 * x + 2.0 * alpha) * x + beta;
    if (d == 0.0) break;
    const double nx = x - fx / d;
    const double nf = cubic_value(alpha, beta, gamma, nx);
    if (!(std::abs(nf) < std::abs(fx))) break;
    x = nx;
    fx = nf;
  }
  return x;
}

// Newton on the quartic, keeping only steps that shrink the residual.
double polish_quartic(const QuarticCoeffs& q, double t) {
  double ft = q(t);
  for (int i = 0; i < 5 && ft != 0.0; ++i) {
    const double d = q.derivative(t);
    if (d == 0.0) break;
    const double nt = t - ft / d;
    const double nf = q(nt);
    if (!(std::abs(nf) < std::abs(ft))) break;
    t = nt;
    ft = nf;
  }
  return t;
}

double residual_bound(const QuarticCoeffs& q, double t) {
  const double s = std::max(1.0, std::abs(t));
  return 1e-9 * s * s * s * s * q.max_abs();
}

// Rounding-level magnitude of a polynomial evaluation at t.
double evaluation_noise(const QuarticCoeffs& q, double t) {
  const double x = std::abs(t);
  const double mag =
      (((std::abs(q.a) * x + std::abs(q.b)) * x + std::abs(q.c)) * x + std::abs(q.d)) * x +
      std::abs(q.e);
  return 64.0 * kEps * mag;
}

struct FactorRoots {
  std::vector<double> simple;
  std::vector<double> tangent;  // near-zero discriminant, to be validated
};

void monic_quadratic_roots(double b, double c, FactorRoots& out) {
  const double disc = b * b - 4.0 * c;
  const double scale = std::max(b * b, 4.0 * std::abs(c));
  if (std::abs(disc) <= 1e-10 * scale) {
    out.tangent.push_back(-0.5 * b);
    return;
  }
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  const double big = -0.5 * (b + std::copysign(sq, b));
  out.simple.push_back(big);
  out.simple.push_back(big != 0.0 ? c / big : 0.0);
}

}  // namespace

int RootSet::total_multiplicity() const {
  int n = 0;
  for (const Root& r : roots_) n += r.multiplicity;
  return n;
}

std::vector<double> RootSet::expanded() const {
  std::vector<double> v;
  for (const Root& r : roots_)
    for (int i = 0; i < r.multiplicity; ++i) v.push_back(r.value);
  return v;
}

double QuarticCoeffs::max_abs() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), std::abs(e)});
}

RootSet solve_quadratic(double a, double b, double c) {
  if (a == 0.0) throw DomainError("solve_quadratic: leading coefficient is zero");
  const double bn = b / a;
  const double cn = c / a;
  const double disc = bn * bn - 4.0 * cn;
  const double scale = std::max(bn * bn, 4.0 * std::abs(cn));
  if (std::abs(disc) <= 8.0 * kEps * scale) return RootSet({{-0.5 * bn, 2}});
  if (disc < 0.0) return {};
  // Larger-magnitude root first, companion from the product c/a.
  const double big = -0.5 * (bn + std::copysign(std::sqrt(disc), bn));
  const double small = cn / big;
  return merge_roots({{big, 1}, {small, 1}});
}

RootSet solve_cubic(double alpha, double beta, double gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma))
    throw DomainError("solve_cubic: non-finite coefficient");
  const double shift = alpha / 3.0;
  const double p = beta - alpha * alpha / 3.0;
  const double q = 2.0 * alpha * alpha * alpha / 27.0 - alpha * beta / 3.0 + gamma;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  const double disc_scale = std::max(half_q * half_q, std::abs(third_p * third_p * third_p));

  const double coeff_scale = std::max({1.0, std::abs(alpha) * std::abs(alpha), std::abs(beta)});
  std::vector<Root> raw;
  if (std::abs(p) <= 8.0 * kEps * coeff_scale &&
      std::abs(q) <= 8.0 * kEps * coeff_scale * std::sqrt(coeff_scale)) {
    raw.push_back({-shift, 3});
  } else if (std::abs(disc) <= 1e-14 * disc_scale) {
    // One simple and one double root.
    raw.push_back({3.0 * q / p - shift, 1});
    raw.push_back({-1.5 * q / p - shift, 2});
  } else if (disc > 0.0) {
    const double a = -std::copysign(std::cbrt(std::abs(half_q) + std::sqrt(disc)), q);
    const double b = (a != 0.0) ? -third_p / a : 0.0;
    raw.push_back({a + b - shift, 1});
  } else {
    const double m = 2.0 * std::sqrt(-third_p);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      raw.push_back({m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift, 1});
    }
  }
  for (Root& r : raw)
    if (r.multiplicity == 1) r.value = polish_cubic(alpha, beta, gamma, r.value);
  return merge_roots(std::move(raw));
}

DepressedQuartic depress(const QuarticCoeffs& q) {
  if (q.a != 1.0) throw DomainError("depress: quartic must be monic");
  const double b = q.b, c = q.c, d = q.d, e = q.e;
  const double b2 = b * b;
  DepressedQuartic out;
  out.p = c - 3.0 * b2 / 8.0;
  out.q = d - b * c / 2.0 + b2 * b / 8.0;
  out.r = e - b * d / 4.0 + b2 * c / 16.0 - 3.0 * b2 * b2 / 256.0;
  out.shift = b / 4.0;
  return out;
}

QuadraticPair ferrari_factors(const DepressedQuartic& dq) {
  const double p = dq.p, q = dq.q, r = dq.r;
  const RootSet resolvent = solve_cubic(-0.5 * p, -r, (4.0 * p * r - q * q) / 8.0);
  // Largest 2*xi - p gives the best conditioned square root.
  double xi = resolvent.roots().front().value;
  for (const Root& root : resolvent.roots()) xi = std::max(xi, root.value);
  const double m = std::sqrt(std::max(0.0, 2.0 * xi - p));

  // Two algebraically equal forms for the constant offset; keep the one that
  // reproduces (q, r) better.
  const double w_sqrt = std::copysign(std::sqrt(std::max(0.0, xi * xi - r)), q);
  double w = w_sqrt;
  if (m > 0.0) {
    const double w_div = q / (2.0 * m);
    auto err = [&](double cand) {
      return std::abs(xi * xi - cand * cand - r) + std::abs(2.0 * m * cand - q);
    };
    if (err(w_div) < err(w_sqrt)) w = w_div;
  }
  return QuadraticPair{{-m, xi + w}, {m, xi - w}};
}

RootSet solve_quartic(const QuarticCoeffs& q) {
  if (!std::isfinite(q.a) || !std::isfinite(q.b) || !std::isfinite(q.c) || !std::isfinite(q.d) ||
      !std::isfinite(q.e))
    throw DomainError("solve_quartic: non-finite coefficient");
  if (q.a == 0.0) throw DomainError("solve_quartic: leading coefficient is zero");

  const QuarticCoeffs monic{1.0, q.b / q.a, q.c / q.a, q.d / q.a, q.e / q.a};
  const DepressedQuartic dq = depress(monic);
  const QuadraticPair factors = ferrari_factors(dq);

  FactorRoots xs;
  monic_quadratic_roots(factors.first[0], factors.first[1], xs);
  monic_quadratic_roots(factors.second[0], factors.second[1], xs);

  std::vector<Root> raw;
  for (double x : xs.simple) {
    const double t = polish_quartic(monic, x - dq.shift);
    raw.push_back({t, 1});
  }
  for (double x : xs.tangent) {
    const double t = polish_quartic(monic, x - dq.shift);
    if (std::abs(q(t)) <= residual_bound(q, t)) raw.push_back({t, 2});
  }
  return merge_roots(std::move(raw));
}

double vieta_residual(const RootSet& roots, std::span<const double> coeffs) {
  if (coeffs.size() < 2) throw DomainError("vieta_residual: need degree >= 1");
  const std::size_t n = coeffs.size() - 1;
  if (coeffs[0] == 0.0) throw DomainError("vieta_residual: leading coefficient is zero");
  const std::vector<double> xs = roots.expanded();
  if (xs.size() != n) throw DomainError("vieta_residual: root set is incomplete");

  // Elementary symmetric polynomials e_0..e_n of the roots.
  std::vector<double> elem(n + 1, 0.0);
  elem[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k >= 1; --k) elem[k] += elem[k - 1] * xs[i];

  double worst = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double expected = sign * coeffs[k] / coeffs[0];
    worst = std::max(worst, std::abs(elem[k] - expected) / std::max(1.0, std::abs(expected)));
  }
  return worst;
}

double vieta_residual(const RootSet& roots, const QuarticCoeffs& q) {
  const std::array<double, 5> c{q.a, q.b, q.c, q.d, q.e};
  return vieta_residual(roots, std::span<const double>(c));
}

std::pair<double, double> root_bound(const QuarticCoeffs& q) {
  if (q.a == 0.0) throw DomainError("root_bound: leading coefficient is zero");
  const double m =
      std::max({std::abs(q.b), std::abs(q.c), std::abs(q.d), std::abs(q.e)}) / std::abs(q.a);
  const double b = 1.0 + m;
  return {-b, b};
}

RootSet isolate_and_bisect(const QuarticCoeffs& q, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw DomainError("isolate_and_bisect: tolerance must be positive");
  if (!(lo < hi)) throw DomainError("isolate_and_bisect: empty interval");
  if (q.a == 0.0) throw DomainError("isolate_and_bisect: leading coefficient is zero");

  // P is monotone between consecutive real critical points.
  const double da = 4.0 * q.a;
  const RootSet crit = solve_cubic(3.0 * q.b / da, 2.0 * q.c / da, q.d / da);

  struct Breakpoint {
    double t;
    double value;
    int crit_mult;  // 0 for interval ends
  };
  std::vector<Breakpoint> pts;
  pts.push_back({lo, q(lo), 0});
  for (const Root& c : crit.roots())
    if (c.value > lo && c.value < hi) pts.push_back({c.value, q(c.value), c.multiplicity});
  pts.push_back({hi, q(hi), 0});

  std::vector<Root> raw;
  for (Breakpoint& b : pts) {
    if (std::abs(b.value) <= evaluation_noise(q, b.t)) {
      b.value = 0.0;
      raw.push_back({b.t, b.crit_mult + 1});
    }
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i].t, b = pts[i + 1].t;
    const double fa = pts[i].value, fb = pts[i + 1].value;
    if (fa == 0.0 || fb == 0.0 || (fa < 0.0) == (fb < 0.0)) continue;
    const bool rising = fa < 0.0;
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double fm = q(mid);
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if ((fm < 0.0) == rising)
        a = mid;
      else
        b = mid;
    }
    raw.push_back({0.5 * (a + b), 1});
  }
  return merge_roots(std::move(raw));
}

}  // namespace toroid
