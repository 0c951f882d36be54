#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "toroid/error.hpp"
#include "toroid/geom_core.hpp"

using namespace toroid;
using std::numbers::pi;

namespace {

void check_vec(const Vec3& a, const Vec3& b, double tol = 1e-12) {
  CHECK(std::abs(a.x - b.x) <= tol);
  CHECK(std::abs(a.y - b.y) <= tol);
  CHECK(std::abs(a.z - b.z) <= tol);
}

}  // namespace

TEST_CASE("torus construction validates radii and frame") {
  CHECK_THROWS_AS(Torus(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(Torus(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(Torus(2.0, 1.0, {0, 0, 0}, {0, 1, 0}, {0, 1, 0}), DomainError);
  CHECK_THROWS_AS(Torus(2.0, 1.0, {0, 0, 0}, {0, 2, 0}, {1, 0, 0}), DomainError);
  CHECK_NOTHROW(Torus::with_axis(2.0, 1.0, {1, 2, 3}, {1, 1, 1}));
}

TEST_CASE("torus_signed") {
  const Torus t(2, 1);
  CHECK(torus_signed({3, 0, 0}, t) == 0.0);
  CHECK(torus_signed({0, 0, 0}, t) == 3.0);
  CHECK(torus_signed({0, 1, 2}, t) == 0.0);
  CHECK(torus_signed({2, 0, 0}, t) < 0.0);
}

TEST_CASE("torus_quartic_residual") {
  const Torus t(2, 1);
  CHECK(torus_quartic_residual({3, 0, 0}, t) == 0.0);
  CHECK(torus_quartic_residual({0, 0, 0}, t) == 9.0);
  CHECK(torus_quartic_residual({1, 0, 0}, t) == 0.0);
}

TEST_CASE("torus_point") {
  const Torus t(2, 1);
  check_vec(torus_point(0, 0, t), {3, 0, 0});
  check_vec(torus_point(pi / 2, pi / 2, t), {0, 1, 2});
  check_vec(torus_point(pi, pi, t), {-1, 0, 0});

  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) {
      const Vec3 p = torus_point(2 * pi * i / 64, 2 * pi * j / 64, t);
      CHECK(std::abs(torus_signed(p, t)) <= 1e-12 * 9.0);
    }
}

TEST_CASE("signed and quartic forms share their sign") {
  const Torus t(2, 1);
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> u(-4, 4);
  int mismatches = 0;
  for (int n = 0; n < 100000; ++n) {
    const Vec3 p{u(g), u(g), u(g)};
    const double f = torus_signed(p, t), q = torus_quartic_residual(p, t);
    if ((f < 0.0) != (q < 0.0)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("surface_normal") {
  const Torus t(2, 1);
  check_vec(surface_normal({3, 0, 0}, t), {1, 0, 0});
  check_vec(surface_normal({1, 0, 0}, t), {-1, 0, 0});
  check_vec(surface_normal({2, 1, 0}, t), {0, 1, 0});
  CHECK_THROWS_AS(surface_normal({2, 0, 0}, t), DomainError);
  // On the spine circle of a torus whose tube is tiny enough to pass the
  // on-surface check the gradient vanishes.
  CHECK_THROWS_AS(surface_normal({2, 0, 0}, Torus(2, 1e-4)), DegenerateError);

  // Normal matches the finite-difference gradient.
  const Vec3 p = torus_point(0.7, 2.1, t);
  const double h = 1e-6;
  const Vec3 fd{(torus_signed(p + Vec3{h, 0, 0}, t) - torus_signed(p - Vec3{h, 0, 0}, t)) / (2 * h),
                (torus_signed(p + Vec3{0, h, 0}, t) - torus_signed(p - Vec3{0, h, 0}, t)) / (2 * h),
                (torus_signed(p + Vec3{0, 0, h}, t) - torus_signed(p - Vec3{0, 0, h}, t)) / (2 * h)};
  check_vec(surface_normal(p, t), normalized(fd), 1e-8);
}

TEST_CASE("canonical_transform") {
  const Torus t(2, 1, {1, 2, 3}, {0, 0, 1}, {1, 0, 0});
  const Transform4 q = canonical_transform(t);
  check_vec(q.apply_point({1, 2, 3}), {0, 0, 0});
  check_vec(q.apply_point(Vec3{1, 2, 3} + Vec3{0, 0, 1}), {0, 1, 0});
  check_vec(q.apply_point(Vec3{1, 2, 3} + Vec3{1, 0, 0}), {1, 0, 0});

  const Transform4 id = canonical_transform(Torus(2, 1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(id.m[i][j] == (i == j ? 1.0 : 0.0));

  // Rigid: rotation block orthonormal, distances preserved.
  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> u(-5, 5);
  const Torus gen = Torus::with_axis(3, 1, {u(g), u(g), u(g)}, oracle::random_unit(g));
  const Transform4 m = canonical_transform(gen);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += m.m[k][i] * m.m[k][j];
      CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  for (int n = 0; n < 1000; ++n) {
    const Vec3 a{u(g), u(g), u(g)}, b{u(g), u(g), u(g)};
    const double d0 = norm(a - b);
    const double d1 = norm(m.apply_point(a) - m.apply_point(b));
    CHECK(std::abs(d1 - d0) <= 1e-12 * std::max(1.0, d0) * 10);
  }
}

TEST_CASE("normalize_scale") {
  const ScaledProblem sp = normalize_scale(Torus(2, 1), Ray3{{-4, 0, 0}, {1, 0, 0}});
  CHECK(sp.torus.major() == 1.0);
  CHECK(sp.torus.minor() == 0.5);
  check_vec(sp.ray.anchor, {-2, 0, 0});
  CHECK(sp.t_scale == 2.0);
  CHECK(0.5 * sp.t_scale == 1.0);

  const ScaledProblem same = normalize_scale(Torus(1, 0.25), Ray3{{3, 1, 2}, {0, 1, 0}});
  CHECK(same.t_scale == 1.0);
  check_vec(same.ray.anchor, {3, 1, 2});
}

TEST_CASE("canonicalize_ray") {
  SUBCASE("axis-parallel direction keeps its plane, mirrored") {
    const CanonicalRay cr = canonicalize_ray(Ray3{{0, 5, -7}, {0, 1, 0}});
    CHECK(cr.mirror);
    CHECK(cr.planar.z_c == doctest::Approx(7.0));
    CHECK(cr.planar.dir_y == 1.0);
  }
  SUBCASE("direction along z rotates a quarter turn") {
    const CanonicalRay cr = canonicalize_ray(Ray3{{0, 0, -10}, {0, 0, 1}});
    CHECK(cr.phi_rot == doctest::Approx(pi / 2));
    CHECK(std::abs(std::abs(cr.planar.dir_x) - 1.0) <= 1e-12);
    CHECK(std::abs(cr.planar.z_c) <= 1e-12);
    // The rotated direction and anchor both have zero z component.
    const Transform4 rot = Transform4::rotation_y(cr.phi_rot);
    CHECK(std::abs(rot.apply_vector({0, 0, 1}).z) <= 1e-12);
    CHECK(std::abs(rot.apply_point({0, 0, -10}).z) <= 1e-12);
  }
  SUBCASE("profile is invariant along a generic ray") {
    const Torus t(2, 1);
    std::mt19937_64 g(9);
    std::uniform_real_distribution<double> u(-4, 4);
    for (int n = 0; n < 200; ++n) {
      const Ray3 ray{{u(g), u(g), u(g)}, oracle::random_unit(g)};
      const CanonicalRay cr = canonicalize_ray(ray);
      CHECK(cr.planar.z_c >= 0.0);
      CHECK(std::abs(cr.planar.dir_x * cr.planar.dir_x + cr.planar.dir_y * cr.planar.dir_y - 1) <=
            1e-12);
      const Ray3 pr = cr.planar.as_ray();
      for (int k = 0; k < 10; ++k) {
        const double s = u(g);
        const double f0 = torus_signed(ray.at(s), t);
        const double f1 = torus_signed(pr.at(s), t);
        // Relative to the magnitude of the terms being cancelled.
        const double mag = dot(ray.at(s), ray.at(s)) + t.major() * t.major();
        CHECK(std::abs(f0 - f1) <= 1e-12 * mag);
      }
    }
  }
}
