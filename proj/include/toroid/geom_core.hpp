#pragma once

// Canonical torus model and ray reduction.
//
// Canonical position: centre at the origin, rotational axis +y, the tube
// circling in the x-z plane. Implicit forms used throughout:
//   f(x,y,z) = (sqrt(x^2 + z^2) - R)^2 + y^2 - r^2          (signed)
//   g(x,y,z) = (x.x + R^2 - r^2)^2 - 4 R^2 (x^2 + z^2)       (quartic)

#include "toroid/projective.hpp"
#include "toroid/vec3.hpp"

namespace toroid {

inline constexpr double kFrameTol = 1e-12;

// Ring torus with an arbitrary rigid frame. 0 < minor < major.
class Torus {
 public:
  // Canonical torus at the origin with axis +y.
  Torus(double major, double minor);
  // Throws DomainError on bad radii or a non-orthonormal frame.
  Torus(double major, double minor, const Vec3& center, const Vec3& axis_n, const Vec3& axis_u);

  double major() const { return major_; }
  double minor() const { return minor_; }
  const Vec3& center() const { return center_; }
  const Vec3& axis_n() const { return axis_n_; }
  const Vec3& axis_u() const { return axis_u_; }

  // Same radii, canonical frame.
  Torus canonical() const { return Torus(major_, minor_); }

  // Builds a frame from the rotational axis alone, picking a deterministic
  // in-plane reference vector.
  static Torus with_axis(double major, double minor, const Vec3& center, const Vec3& axis);

 private:
  double major_;
  double minor_;
  Vec3 center_;
  Vec3 axis_n_;
  Vec3 axis_u_;
};

struct Ray3 {
  Vec3 anchor;
  Vec3 dir;  // unit length

  Vec3 at(double t) const { return anchor + dir * t; }
};

// Throws DomainError unless |dir| is within 1e-12 of one.
Ray3 make_ray(const Vec3& anchor, const Vec3& dir);

// A ray rotated about the torus axis so that it lies in the plane z = z_c.
struct PlanarRay {
  double anchor_x = 0.0;
  double anchor_y = 0.0;
  double dir_x = 1.0;
  double dir_y = 0.0;
  double z_c = 0.0;  // >= 0

  Vec3 anchor3() const { return {anchor_x, anchor_y, z_c}; }
  Vec3 dir3() const { return {dir_x, dir_y, 0.0}; }
  Ray3 as_ray() const { return {anchor3(), dir3()}; }
};

double torus_signed(const Vec3& p, const Torus& t);
double torus_quartic_residual(const Vec3& p, const Torus& t);
Vec3 torus_point(double phi, double theta, const Torus& t);

// Outward unit normal at a canonical surface point. Throws DomainError when the
// point is off the surface (|f| > 1e-6) and DegenerateError on a vanishing gradient.
Vec3 surface_normal(const Vec3& p, const Torus& t);

// World -> canonical rigid transform: centre to origin, axis_n to +y, axis_u to +x.
Transform4 canonical_transform(const Torus& t);

struct ScaledProblem {
  Torus torus;  // major radius 1
  Ray3 ray;
  double t_scale;  // multiply scaled ray parameters by this
};

ScaledProblem normalize_scale(const Torus& t, const Ray3& ray);

struct CanonicalRay {
  PlanarRay planar;
  double phi_rot = 0.0;  // right-handed rotation about +y applied before mirroring
  bool mirror = false;   // z -> -z applied after the rotation
};

// Rotates a canonical-frame ray about +y until its direction has no z
// component, then mirrors so the plane offset is non-negative. Ray parameters
// are preserved. Directions parallel to the axis need no rotation.
CanonicalRay canonicalize_ray(const Ray3& ray);

}  // namespace toroid
