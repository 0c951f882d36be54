#include "toroid/bounding.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "toroid/error.hpp"

namespace toroid {

namespace {

struct Chord {
  double y_min;
  double y_max;
};

// y range of the line over its chord through the sphere of radius R + r.
std::optional<Chord> sphere_chord(const Ray3& ray, const Torus& t) {
  const double bound = t.major() + t.minor();
  const double alpha = dot(ray.dir, ray.dir);
  const double beta = dot(ray.dir, ray.anchor);
  const double disc = beta * beta - alpha * (dot(ray.anchor, ray.anchor) - bound * bound);
  if (disc < 0.0) return std::nullopt;
  const double half = std::sqrt(disc);
  const double y1 = ray.anchor.y + ray.dir.y * (-beta - half) / alpha;
  const double y2 = ray.anchor.y + ray.dir.y * (-beta + half) / alpha;
  return Chord{std::min(y1, y2), std::max(y1, y2)};
}

bool outside_slab(const Chord& c, double half_height) {
  return (c.y_min > half_height && c.y_max > half_height) ||
         (c.y_min < -half_height && c.y_max < -half_height);
}

Ray3 to_canonical(const Ray3& ray, const Torus& t) {
  const Transform4 to_canon = canonical_transform(t);
  return {to_canon.apply_point(ray.anchor), to_canon.apply_vector(ray.dir)};
}

}  // namespace

const char* to_string(BVDecision d) {
  switch (d) {
    case BVDecision::RejectOutside:
      return "RejectOutside";
    case BVDecision::RejectHole:
      return "RejectHole";
    case BVDecision::RejectSlab:
      return "RejectSlab";
    case BVDecision::Maybe:
      return "Maybe";
  }
  return "?";
}

BVDecision standard_bv(const Ray3& ray, const Torus& t) {
  const auto chord = sphere_chord(to_canonical(ray, t), t);
  if (!chord) return BVDecision::RejectOutside;
  if (outside_slab(*chord, t.minor())) return BVDecision::RejectSlab;
  return BVDecision::Maybe;
}

HoleGeometry hole_geometry(double z_c, const Torus& t) {
  const double gap = t.major() - t.minor();
  if (!(z_c >= 0.0) || z_c > gap) throw DomainError("hole_geometry: plane offset must be <= R - r");
  const double x_b = std::sqrt(std::max(0.0, gap * gap - z_c * z_c));
  return {x_b, x_b + t.minor(), t.minor()};
}

BVDecision hole_bv(const PlanarRay& pr, const Torus& t) {
  const HoleGeometry g = hole_geometry(pr.z_c, t);
  if (pr.dir_y == 0.0) return BVDecision::Maybe;
  const double x0 = pr.anchor_x - pr.dir_x * pr.anchor_y / pr.dir_y;
  if (!(std::abs(x0) < g.x_b)) return BVDecision::Maybe;
  // Unit direction, so |(c - a) x d| is the distance from centre c to the line.
  auto distance_to = [&](double cx) {
    return std::abs((cx - pr.anchor_x) * pr.dir_y + pr.anchor_y * pr.dir_x);
  };
  if (distance_to(g.k_center_x) > g.radius && distance_to(-g.k_center_x) > g.radius)
    return BVDecision::RejectHole;
  return BVDecision::Maybe;
}

double tightened_slab(double z_c, const Torus& t) {
  const double big = t.major(), small = t.minor();
  if (!(z_c >= big) || z_c > big + small)
    throw DomainError("tightened_slab: plane offset must lie in [R, R + r]");
  const double off = z_c - big;
  return std::sqrt(std::max(0.0, small * small - off * off));
}

BVDecision bv_dispatch(const Ray3& ray, const Torus& t) {
  const Torus canon = t.canonical();
  const Ray3 local = to_canonical(ray, t);

  const auto chord = sphere_chord(local, canon);
  if (!chord) return BVDecision::RejectOutside;
  if (outside_slab(*chord, canon.minor())) return BVDecision::RejectSlab;

  const CanonicalRay cr = canonicalize_ray(local);
  switch (classify_plane(cr.planar.z_c, canon)) {
    case PlaneCase::CaseA:
      return hole_bv(cr.planar, canon);
    case PlaneCase::CaseB:
      return BVDecision::Maybe;
    case PlaneCase::CaseC: {
      // Rotation about y leaves y, and hence the chord's y range, unchanged.
      if (outside_slab(*chord, tightened_slab(cr.planar.z_c, canon)))
        return BVDecision::RejectSlab;
      return BVDecision::Maybe;
    }
    case PlaneCase::NoPlaneHit:
      return BVDecision::RejectOutside;
  }
  return BVDecision::Maybe;
}

}  // namespace toroid
