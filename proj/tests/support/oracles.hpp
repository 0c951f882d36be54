#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's solvers; the oracles are brute force or direct algebra.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "toroid/vec3.hpp"

namespace oracle {

// Polynomials as coefficient vectors, highest degree first.
using Poly = std::vector<double>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly add(Poly a, Poly b) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t off = a.size() - b.size();
  for (std::size_t i = 0; i < b.size(); ++i) a[off + i] += b[i];
  return a;
}

inline Poly scale(Poly a, double s) {
  for (double& x : a) x *= s;
  return a;
}

inline Poly from_roots(const std::vector<double>& roots) {
  Poly p{1.0};
  for (double r : roots) p = mul(p, Poly{1.0, -r});
  return p;
}

inline double eval(const Poly& p, double t) {
  double v = 0.0;
  for (double c : p) v = v * t + c;
  return v;
}

// Quartic in t of g(ray(t)) built by polynomial arithmetic on the components
// of x(t) = anchor + dir t, not by the closed-form coefficient list.
inline Poly torus_quartic_by_expansion(const toroid::Vec3& a, const toroid::Vec3& s, double big,
                                       double small) {
  const Poly x{s.x, a.x}, y{s.y, a.y}, z{s.z, a.z};
  const Poly xx = mul(x, x), yy = mul(y, y), zz = mul(z, z);
  const Poly sum = add(add(add(xx, yy), zz), Poly{big * big - small * small});
  return add(mul(sum, sum), scale(add(xx, zz), -4.0 * big * big));
}

// Line/sphere intersection by direct substitution (non-unit direction allowed).
inline std::vector<double> line_sphere(const toroid::Vec3& a, const toroid::Vec3& s,
                                       const toroid::Vec3& c, double radius) {
  const toroid::Vec3 d = a - c;
  const double qa = toroid::dot(s, s), qb = 2.0 * toroid::dot(s, d),
               qc = toroid::dot(d, d) - radius * radius;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return {};
  const double sq = std::sqrt(disc);
  return {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)};
}

// Sign changes of f on a uniform grid, refined by bisection. Misses roots that
// pair up inside one cell, so callers pick a fine grid.
inline std::vector<double> grid_roots(const std::function<double(double)>& f, double lo, double hi,
                                      int cells) {
  std::vector<double> out;
  double pa = lo, fa = f(lo);
  for (int i = 1; i <= cells; ++i) {
    const double pb = lo + (hi - lo) * i / cells;
    const double fb = f(pb);
    if (fa == 0.0) out.push_back(pa);
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
      double l = pa, h = pb, fl = fa;
      for (int k = 0; k < 200 && h - l > 1e-14 * std::max(1.0, std::abs(l)); ++k) {
        const double m = 0.5 * (l + h);
        const double fm = f(m);
        if ((fm < 0.0) == (fl < 0.0)) {
          l = m;
          fl = fm;
        } else {
          h = m;
        }
      }
      out.push_back(0.5 * (l + h));
    }
    pa = pb;
    fa = fb;
  }
  return out;
}

inline toroid::Vec3 random_unit(std::mt19937_64& g) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const toroid::Vec3 v{n(g), n(g), n(g)};
    const double len = toroid::norm(v);
    if (len > 1e-6) return v / len;
  }
}

}  // namespace oracle
