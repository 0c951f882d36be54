#include "toroid/geom_core.hpp"

#include <algorithm>
#include <cmath>

#include "toroid/error.hpp"

namespace toroid {

namespace {

void check_radii(double major, double minor) {
  if (!(std::isfinite(major) && std::isfinite(minor)))
    throw DomainError("torus: radii must be finite");
  if (!(minor > 0.0 && minor < major))
    throw DomainError("torus: radii must satisfy 0 < r < R");
}

}  // namespace

Torus::Torus(double major, double minor)
    : Torus(major, minor, Vec3{0, 0, 0}, Vec3{0, 1, 0}, Vec3{1, 0, 0}) {}

Torus::Torus(double major, double minor, const Vec3& center, const Vec3& axis_n,
             const Vec3& axis_u)
    : major_(major), minor_(minor), center_(center), axis_n_(axis_n), axis_u_(axis_u) {
  check_radii(major, minor);
  if (!is_finite(center)) throw DomainError("torus: centre must be finite");
  if (std::abs(norm(axis_n) - 1.0) > kFrameTol || std::abs(norm(axis_u) - 1.0) > kFrameTol ||
      std::abs(dot(axis_n, axis_u)) > kFrameTol)
    throw DomainError("torus: axis frame is not orthonormal");
}

Torus Torus::with_axis(double major, double minor, const Vec3& center, const Vec3& axis) {
  const double len = norm(axis);
  if (!(len > 0.0) || !std::isfinite(len)) throw DomainError("torus: zero or non-finite axis");
  const Vec3 n = axis / len;
  const Vec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(dot(n, basis[i])) < std::abs(dot(n, basis[best]))) best = i;
  const Vec3 e = basis[best];
  const Vec3 u = normalized(e - n * dot(e, n));
  return Torus(major, minor, center, n, u);
}

Ray3 make_ray(const Vec3& anchor, const Vec3& dir) {
  if (!is_finite(anchor) || !is_finite(dir)) throw DomainError("ray: non-finite component");
  if (std::abs(norm(dir) - 1.0) > 1e-12) throw DomainError("ray: direction must be unit length");
  return Ray3{anchor, dir};
}

double torus_signed(const Vec3& p, const Torus& t) {
  const double rho = std::hypot(p.x, p.z);
  const double d = rho - t.major();
  return d * d + p.y * p.y - t.minor() * t.minor();
}

double torus_quartic_residual(const Vec3& p, const Torus& t) {
  const double big = t.major() * t.major();
  const double s = dot(p, p) + big - t.minor() * t.minor();
  return s * s - 4.0 * big * (p.x * p.x + p.z * p.z);
}

Vec3 torus_point(double phi, double theta, const Torus& t) {
  const double ring = t.major() + t.minor() * std::cos(theta);
  return {ring * std::cos(phi), t.minor() * std::sin(theta), ring * std::sin(phi)};
}

Vec3 surface_normal(const Vec3& p, const Torus& t) {
  const double scale = std::max(1.0, (t.major() + t.minor()) * (t.major() + t.minor()));
  if (std::abs(torus_signed(p, t)) > 1e-6 * scale)
    throw DomainError("surface_normal: point is not on the torus");
  const double rho = std::hypot(p.x, p.z);
  if (rho < 1e-300) throw DegenerateError("surface_normal: point on the rotational axis");
  const double k = (rho - t.major()) / rho;
  const Vec3 grad{k * p.x, p.y, k * p.z};
  const double len = norm(grad);
  if (len < 1e-12) throw DegenerateError("surface_normal: point on the spine circle");
  return grad / len;
}

Transform4 canonical_transform(const Torus& t) {
  const Vec3 u = t.axis_u();
  const Vec3 n = t.axis_n();
  const Vec3 w = cross(u, n);
  Transform4 q = Transform4::identity();
  const Vec3 rows[3] = {u, n, w};
  for (int i = 0; i < 3; ++i) {
    q.m[i][0] = rows[i].x;
    q.m[i][1] = rows[i].y;
    q.m[i][2] = rows[i].z;
    q.m[i][3] = -dot(rows[i], t.center());
  }
  return q;
}

ScaledProblem normalize_scale(const Torus& t, const Ray3& ray) {
  const double s = t.major();
  const Vec3 dir = normalized(ray.dir);
  return ScaledProblem{Torus(1.0, t.minor() / s), Ray3{ray.anchor / s, dir}, s};
}

CanonicalRay canonicalize_ray(const Ray3& ray) {
  CanonicalRay out;
  const Vec3& s = ray.dir;
  double phi = 0.0;
  if (s.x != 0.0 || s.z != 0.0) phi = std::atan2(s.z, s.x);
  const Transform4 rot = Transform4::rotation_y(phi);
  Vec3 a = rot.apply_vector(ray.anchor);
  Vec3 d = rot.apply_vector(s);
  d.z = 0.0;  // exact zero by construction, up to rounding
  const double dlen = std::hypot(d.x, d.y);
  d.x /= dlen;
  d.y /= dlen;
  out.phi_rot = phi;
  if (a.z < 0.0) {
    a.z = -a.z;
    out.mirror = true;
  }
  out.planar = PlanarRay{a.x, a.y, d.x, d.y, a.z};
  return out;
}

}  // namespace toroid
