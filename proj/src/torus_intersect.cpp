#include "toroid/torus_intersect.hpp"

#include "toroid/error.hpp"

namespace toroid {

TorusDerived TorusDerived::of(const Torus& t, const Ray3& ray) {
  const double xi = t.major() * t.major() - t.minor() * t.minor();
  return {xi, dot(ray.anchor, ray.anchor) + xi};
}

const char* to_string(PlaneCase c) {
  switch (c) {
    case PlaneCase::CaseA:
      return "CaseA";
    case PlaneCase::CaseB:
      return "CaseB";
    case PlaneCase::CaseC:
      return "CaseC";
    case PlaneCase::NoPlaneHit:
      return "NoPlaneHit";
  }
  return "?";
}

QuarticCoeffs assemble_quartic(const Ray3& ray, const Torus& t) {
  const Vec3& s = ray.dir;
  const Vec3& x = ray.anchor;
  const double alpha = dot(s, s);
  const double beta = dot(s, x);
  const double delta = TorusDerived::of(t, ray).delta;
  const double four_r2 = 4.0 * t.major() * t.major();

  QuarticCoeffs q;
  q.a = alpha * alpha;
  q.b = 4.0 * alpha * beta;
  q.c = 2.0 * alpha * delta + 4.0 * beta * beta - four_r2 * (s.x * s.x + s.z * s.z);
  q.d = 4.0 * beta * delta - 2.0 * four_r2 * (x.x * s.x + x.z * s.z);
  q.e = delta * delta - four_r2 * (x.x * x.x + x.z * x.z);
  return q;
}

RootSet line_roots_canonical(const Ray3& ray, const Torus& t) {
  const ScaledProblem sp = normalize_scale(t, ray);
  const RootSet scaled = solve_quartic(assemble_quartic(sp.ray, sp.torus));
  std::vector<Root> out;
  out.reserve(scaled.distinct());
  for (const Root& r : scaled.roots()) out.push_back({r.value * sp.t_scale, r.multiplicity});
  return RootSet(std::move(out));
}

std::vector<HitRecord> intersect(const Ray3& ray, const Torus& t) {
  const Transform4 to_canon = canonical_transform(t);
  const Torus canon = t.canonical();
  const Ray3 local{to_canon.apply_point(ray.anchor), to_canon.apply_vector(ray.dir)};
  const Transform4 to_world = to_canon.rigid_inverse();

  const RootSet roots = line_roots_canonical(local, canon);
  std::vector<HitRecord> hits;
  for (const Root& root : roots.roots()) {
    if (root.value < 0.0) continue;
    const Vec3 p = local.at(root.value);
    hits.push_back({root.value, to_world.apply_point(p),
                    to_world.apply_vector(surface_normal(p, canon)), root.multiplicity});
  }
  return hits;
}

PlaneCase classify_plane(double z_c, const Torus& t) {
  if (!(z_c >= 0.0)) throw DomainError("classify_plane: plane offset must be non-negative");
  const double big = t.major(), small = t.minor();
  if (z_c < big - small) return PlaneCase::CaseA;
  if (z_c < big) return PlaneCase::CaseB;
  if (z_c < big + small) return PlaneCase::CaseC;
  return PlaneCase::NoPlaneHit;
}

}  // namespace toroid
