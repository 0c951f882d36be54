#include "toroid/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "toroid/error.hpp"
#include "toroid/polysolve.hpp"

namespace toroid {

namespace {

PhiQuadratic quadratic_from_offset(const Vec3& dir, const Vec3& xi, double minor) {
  return {2.0 * dot(dir, xi), dot(xi, xi) - minor * minor};
}

double profile_slope(const PlanarRay& pr, const Torus& t, double param) {
  const double x = pr.anchor_x + pr.dir_x * param;
  const double y = pr.anchor_y + pr.dir_y * param;
  const double rho = std::hypot(x, pr.z_c);
  const double radial = rho > 0.0 ? (rho - t.major()) * x / rho : -t.major() * std::copysign(1.0, x);
  return 2.0 * (radial * pr.dir_x + y * pr.dir_y);
}

// Bisects on the sign of g between a and b until the bracket stops shrinking.
template <typename G>
double bisect_sign(G&& g, double a, double b, double ga, double tol) {
  const bool a_negative = ga < 0.0;
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == a_negative)
      a = mid;
    else
      b = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace

Vec3 sphere_center(double phi, const Torus& t) {
  return {t.major() * std::cos(phi), 0.0, t.major() * std::sin(phi)};
}

PhiQuadratic sphere_quadratic(const Ray3& ray, double phi, const Torus& t) {
  return quadratic_from_offset(ray.dir, ray.anchor - sphere_center(phi, t), t.minor());
}

PhiQuadratic sphere_quadratic(const PlanarRay& pr, double phi, const Torus& t) {
  return sphere_quadratic(pr.as_ray(), phi, t);
}

double t_extreme(const PlanarRay& pr, double phi, const Torus& t) {
  return -dot(pr.dir3(), pr.anchor3() - sphere_center(phi, t));
}

bool inside_gap_test(const PlanarRay& pr, double phi, const Torus& t) {
  const Vec3 xi = pr.anchor3() - sphere_center(phi, t);
  const double along = dot(pr.dir3(), xi);
  const double perp2 = dot(xi, xi) - along * along;
  return perp2 < t.minor() * t.minor();
}

PhiQuadratic rotating_line_quadratic(const Ray3& ray, double phi, const Torus& t) {
  if (std::abs(ray.dir.z) > 1e-12)
    throw DomainError("rotating_line_quadratic: direction must lie in a z = const plane");
  const Vec3& a = ray.anchor;
  const Vec3& s = ray.dir;
  const double c = std::cos(phi), sn = std::sin(phi);
  const double big = t.major(), small = t.minor();
  return {2.0 * (dot(s, a) - big * s.x * c),
          dot(a, a) - 2.0 * big * (a.x * c - a.z * sn) + big * big - small * small};
}

std::optional<CircleE2> planar_circle(double phi, double z_c, const Torus& t) {
  const double off = t.major() * std::sin(phi) - z_c;
  const double rho2 = t.minor() * t.minor() - off * off;
  if (rho2 < 0.0) return std::nullopt;
  return CircleE2{t.major() * std::cos(phi), std::sqrt(rho2)};
}

PhiRange phi_range(double z_c, const Torus& t) {
  const double big = t.major(), small = t.minor();
  if (!(z_c >= 0.0) || z_c >= big + small)
    throw DomainError("phi_range: plane does not cut the torus");
  auto clamped_asin = [](double v) { return std::asin(std::clamp(v, -1.0, 1.0)); };
  return {clamped_asin((z_c - small) / big), clamped_asin((z_c + small) / big),
          clamped_asin(z_c / big)};
}

double planar_profile(const PlanarRay& pr, const Torus& t, double param) {
  const double x = pr.anchor_x + pr.dir_x * param;
  const double y = pr.anchor_y + pr.dir_y * param;
  const double d = std::hypot(x, pr.z_c) - t.major();
  return d * d + y * y - t.minor() * t.minor();
}

std::vector<double> iterative_intersect(const PlanarRay& pr, const Torus& t, double tol) {
  if (!(tol > 0.0)) throw DomainError("iterative_intersect: tolerance must be positive");
  const double big = t.major(), small = t.minor();

  // Chord of the bounding sphere; the torus lies inside it.
  const Vec3 a = pr.anchor3();
  const double beta = a.x * pr.dir_x + a.y * pr.dir_y;
  const double bound = big + small;
  const double disc = beta * beta - (dot(a, a) - bound * bound);
  if (disc <= 0.0) return {};
  const double half = std::sqrt(disc);
  const double pad = 1e-9 * bound;
  const double t0 = -beta - half - pad;
  const double t1 = -beta + half + pad;

  auto f = [&](double s) { return planar_profile(pr, t, s); };
  auto df = [&](double s) { return profile_slope(pr, t, s); };

  // Coarse scan of the slope: 64 samples per tube radius of chord length.
  const int n = std::max(256, static_cast<int>(std::ceil(64.0 * (t1 - t0) / small)));
  const double h = (t1 - t0) / n;
  std::vector<double> breaks{t0};
  double prev_t = t0;
  double prev_d = df(t0);
  for (int i = 1; i <= n; ++i) {
    const double s = (i == n) ? t1 : t0 + h * i;
    const double ds = df(s);
    if (prev_d != 0.0 && ds != 0.0 && ((prev_d < 0.0) != (ds < 0.0))) {
      breaks.push_back(bisect_sign(df, prev_t, s, prev_d, 0.0));
    } else if (ds == 0.0 && i < n) {
      breaks.push_back(s);
    }
    prev_t = s;
    prev_d = ds;
  }
  breaks.push_back(t1);

  // Stationary points that touch zero are grazing (double) roots.
  const double zero_band = 64.0 * std::numeric_limits<double>::epsilon() * bound * bound;
  std::vector<Root> raw;
  std::vector<double> values(breaks.size());
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    values[i] = f(breaks[i]);
    const bool interior = i > 0 && i + 1 < breaks.size();
    if (interior && std::abs(values[i]) <= zero_band) {
      values[i] = 0.0;
      raw.push_back({breaks[i], 2});
    }
  }
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double fa = values[i], fb = values[i + 1];
    if (fa == 0.0 || fb == 0.0 || ((fa < 0.0) == (fb < 0.0))) continue;
    raw.push_back({bisect_sign(f, breaks[i], breaks[i + 1], fa, tol), 1});
  }

  std::sort(raw.begin(), raw.end(), [](const Root& x, const Root& y) { return x.value < y.value; });
  std::vector<Root> merged;
  for (const Root& r : raw) {
    if (!merged.empty() && std::abs(r.value - merged.back().value) <=
                               kMergeRel * std::max(1.0, std::abs(r.value))) {
      merged.back().multiplicity += r.multiplicity;
      continue;
    }
    merged.push_back(r);
  }
  return RootSet(std::move(merged)).expanded();
}

}  // namespace toroid
