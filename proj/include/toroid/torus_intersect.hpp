#pragma once

#include <vector>

#include "toroid/geom_core.hpp"
#include "toroid/polysolve.hpp"

namespace toroid {

struct TorusDerived {
  double xi;     // R^2 - r^2
  double delta;  // anchor.anchor + R^2 - r^2

  static TorusDerived of(const Torus& t, const Ray3& ray);
};

enum class PlaneCase { CaseA, CaseB, CaseC, NoPlaneHit };

const char* to_string(PlaneCase c);

struct HitRecord {
  double t;
  Vec3 point;
  Vec3 normal;
  int multiplicity;
};

// Coefficients of g(ray(t)) for a canonical torus. Exact expansion of
// (a t^2 + 2 b t + delta)^2 - 4 R^2 |(x,z) part of ray(t)|^2.
QuarticCoeffs assemble_quartic(const Ray3& ray, const Torus& t);

// Real line parameters where the line meets a canonical torus, via the
// closed-form quartic solver on the radius-normalised problem.
RootSet line_roots_canonical(const Ray3& ray, const Torus& t);

// Full ray pipeline for a torus in any frame: hits with t >= 0, sorted by t,
// points and normals in world space.
std::vector<HitRecord> intersect(const Ray3& ray, const Torus& t);

PlaneCase classify_plane(double z_c, const Torus& t);

}  // namespace toroid
