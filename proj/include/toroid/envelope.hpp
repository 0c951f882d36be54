#pragma once

// The torus as the envelope of a sphere of radius r whose centre runs along
// the spine circle. These formulations are slower than the quartic route and
// serve as independent cross-checks and as the geometry behind the hole test.

#include <optional>
#include <vector>

#include "toroid/geom_core.hpp"

namespace toroid {

// t^2 + b t + c = 0 for a unit direction.
struct PhiQuadratic {
  double b;
  double c;

  double discriminant() const { return b * b - 4.0 * c; }
};

struct PhiRange {
  double phi1;  // lowest contributing angle
  double phi2;  // highest contributing angle
  double phi0;  // angle of the largest slice circle
};

// Circle (x - center_x)^2 + y^2 = rho^2 in the plane z = z_c.
struct CircleE2 {
  double center_x;
  double rho;
};

Vec3 sphere_center(double phi, const Torus& t);

// Line against the sphere centred at sphere_center(phi).
PhiQuadratic sphere_quadratic(const Ray3& ray, double phi, const Torus& t);
PhiQuadratic sphere_quadratic(const PlanarRay& pr, double phi, const Torus& t);

// Stationary point -s.xi(phi) of the line/sphere quadratic.
double t_extreme(const PlanarRay& pr, double phi, const Torus& t);

// True iff the squared distance from the sphere centre to the line is below r^2.
bool inside_gap_test(const PlanarRay& pr, double phi, const Torus& t);

// The line rotated by -phi about y against the fixed sphere at (R, 0, 0).
// Requires a direction with zero z component (DomainError otherwise).
PhiQuadratic rotating_line_quadratic(const Ray3& ray, double phi, const Torus& t);

// Slice of the rotating sphere by the plane z = z_c, if any.
std::optional<CircleE2> planar_circle(double phi, double z_c, const Torus& t);

// Angles whose sphere reaches the plane z = z_c, principal branch (x > 0 lobe).
// Throws DomainError when z_c >= R + r or z_c < 0.
PhiRange phi_range(double z_c, const Torus& t);

// Line parameters (not clipped to t >= 0) where the planar line meets the
// torus slice, found without the quartic: the profile function is split at its
// stationary points and each monotone piece is bisected to `tol`.
std::vector<double> iterative_intersect(const PlanarRay& pr, const Torus& t, double tol);

// (sqrt(x^2 + z_c^2) - R)^2 + y^2 - r^2 along the planar line.
double planar_profile(const PlanarRay& pr, const Torus& t, double param);

}  // namespace toroid
