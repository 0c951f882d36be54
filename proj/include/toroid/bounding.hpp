#pragma once

// Culling tests for a single torus.
//
// standard_bv: the enclosing sphere of radius R + r plus the slab |y| <= r.
// hole_bv: for a slice plane closer to the axis than R - r the slice has two
// lobes with a gap between them. A line that crosses the gap on the x axis and
// stays farther than r from both guard circles k and k' (tangent to the lobes
// at their inner extremities) cannot touch either lobe.
// bv_dispatch composes both, picking the refinement by plane case.

#include "toroid/geom_core.hpp"
#include "toroid/torus_intersect.hpp"

namespace toroid {

enum class BVDecision { RejectOutside, RejectHole, RejectSlab, Maybe };

const char* to_string(BVDecision d);
inline bool is_reject(BVDecision d) { return d != BVDecision::Maybe; }

struct HoleGeometry {
  double x_b;         // half-width of the gap on the x axis
  double k_center_x;  // centre of guard circle k; k' sits at -k_center_x
  double radius;      // guard circle radius (= r)
};

// Canonical torus, unit direction. Line semantics: a reject means the whole
// line misses.
BVDecision standard_bv(const Ray3& ray, const Torus& t);

// Requires 0 <= z_c <= R - r (DomainError otherwise).
HoleGeometry hole_geometry(double z_c, const Torus& t);

// Requires pr.z_c <= R - r (DomainError otherwise).
BVDecision hole_bv(const PlanarRay& pr, const Torus& t);

// Exact max |y| of the slice at z_c for R <= z_c <= R + r (DomainError otherwise).
double tightened_slab(double z_c, const Torus& t);

// Torus in any frame.
BVDecision bv_dispatch(const Ray3& ray, const Torus& t);

}  // namespace toroid
