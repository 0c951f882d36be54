#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "toroid/envelope.hpp"
#include "toroid/error.hpp"
#include "toroid/torus_intersect.hpp"

using namespace toroid;
using std::numbers::pi;

namespace {

const Torus kTorus(2, 1);
const PlanarRay kRay{-10, 0, 1, 0, 0};

PlanarRay random_planar(std::mt19937_64& g, double z_max) {
  std::uniform_real_distribution<double> u(-5, 5), z(0, z_max), a(0, 2 * pi);
  const double ang = a(g);
  return PlanarRay{u(g), u(g), std::cos(ang), std::sin(ang), z(g)};
}

}  // namespace

TEST_CASE("sphere_center") {
  CHECK(sphere_center(0, kTorus) == Vec3{2, 0, 0});
  CHECK(std::abs(sphere_center(pi / 2, kTorus).x) < 1e-15);
  CHECK(sphere_center(pi / 2, kTorus).z == 2.0);
  CHECK(sphere_center(pi, kTorus).x == -2.0);
}

TEST_CASE("sphere_quadratic against direct line/sphere algebra") {
  const struct {
    double phi, b, c;
    std::vector<double> roots;
  } cases[] = {{0, -24, 143, {11, 13}}, {pi, -16, 63, {7, 9}}, {pi / 2, -20, 103, {}}};
  for (const auto& k : cases) {
    const PhiQuadratic q = sphere_quadratic(kRay, k.phi, kTorus);
    CHECK(q.b == doctest::Approx(k.b));
    CHECK(q.c == doctest::Approx(k.c));
    const auto direct = oracle::line_sphere(kRay.anchor3(), kRay.dir3(), sphere_center(k.phi, kTorus), 1.0);
    REQUIRE(direct.size() == k.roots.size());
    for (std::size_t i = 0; i < direct.size(); ++i) CHECK(direct[i] == doctest::Approx(k.roots[i]));
    if (!direct.empty()) {
      for (double t : direct) CHECK(std::abs(t * t + q.b * t + q.c) < 1e-9);
    } else {
      CHECK(q.discriminant() < 0.0);
    }
  }
}

TEST_CASE("t_extreme") {
  CHECK(t_extreme(kRay, 0, kTorus) == doctest::Approx(12.0));
  CHECK(t_extreme(kRay, pi, kTorus) == doctest::Approx(8.0));
  // Anchor at the foot of the perpendicular from the sphere centre.
  CHECK(std::abs(t_extreme(PlanarRay{2, 0, 0, 1, 0}, 0, kTorus)) < 1e-15);
  CHECK(t_extreme(PlanarRay{2, -3, 0, 1, 0}, 0, kTorus) == doctest::Approx(3.0));

  std::mt19937_64 g(21);
  std::uniform_real_distribution<double> phi(-pi, pi);
  for (int n = 0; n < 1000; ++n) {
    const PlanarRay pr = random_planar(g, 3);
    const double f = phi(g);
    const PhiQuadratic q = sphere_quadratic(pr, f, kTorus);
    const double te = t_extreme(pr, f, kTorus);
    CHECK(std::abs(2 * te + q.b) <= 1e-9);
  }
}

TEST_CASE("inside_gap_test") {
  CHECK(inside_gap_test(kRay, 0, kTorus));
  CHECK_FALSE(inside_gap_test(kRay, pi / 2, kTorus));
  CHECK(inside_gap_test(PlanarRay{0, 0.5, 1, 0, 0}, 0, kTorus));

  std::mt19937_64 g(22);
  std::uniform_real_distribution<double> phi(-pi, pi);
  for (int n = 0; n < 10000; ++n) {
    const PlanarRay pr = random_planar(g, 3);
    const double f = phi(g);
    const PhiQuadratic q = sphere_quadratic(pr, f, kTorus);
    if (std::abs(q.discriminant()) < 1e-10) continue;
    CHECK((q.discriminant() > 0.0) == inside_gap_test(pr, f, kTorus));
  }
}

TEST_CASE("rotating_line_quadratic is sphere_quadratic at the opposite angle") {
  const Ray3 ray{{-10, 0, 0}, {1, 0, 0}};
  const PhiQuadratic at0 = rotating_line_quadratic(ray, 0, kTorus);
  CHECK(at0.b == doctest::Approx(-24));
  CHECK(at0.c == doctest::Approx(143));
  const PhiQuadratic atpi = rotating_line_quadratic(ray, pi, kTorus);
  CHECK(atpi.b == doctest::Approx(-16));
  CHECK(atpi.c == doctest::Approx(63));

  std::mt19937_64 g(23);
  std::uniform_real_distribution<double> u(-5, 5), a(0, 2 * pi);
  for (int n = 0; n < 200; ++n) {
    const double ang = a(g);
    const Ray3 r{{u(g), u(g), u(g)}, {std::cos(ang), std::sin(ang), 0}};
    for (int k = 0; k < 32; ++k) {
      const double phi = 2 * pi * k / 32;
      const PhiQuadratic rot = rotating_line_quadratic(r, phi, kTorus);
      const PhiQuadratic sph = sphere_quadratic(r, -phi, kTorus);
      CHECK(std::abs(rot.b - sph.b) <= 1e-12 * std::max(1.0, std::abs(sph.b)));
      CHECK(std::abs(rot.c - sph.c) <= 1e-12 * std::max(1.0, std::abs(sph.c)));
    }
  }
  CHECK_THROWS_AS(rotating_line_quadratic(Ray3{{0, 0, 0}, {0, 0, 1}}, 0, kTorus), DomainError);
}

TEST_CASE("planar_circle") {
  const auto c0 = planar_circle(0, 0, kTorus);
  REQUIRE(c0);
  CHECK(c0->center_x == 2.0);
  CHECK(c0->rho == 1.0);
  const auto c1 = planar_circle(pi / 6, 1, kTorus);
  REQUIRE(c1);
  CHECK(c1->center_x == doctest::Approx(std::sqrt(3.0)));
  CHECK(c1->rho == doctest::Approx(1.0));
  CHECK_FALSE(planar_circle(pi / 2, 0, kTorus));
}

TEST_CASE("phi_range") {
  const PhiRange r0 = phi_range(0, kTorus);
  CHECK(r0.phi1 == doctest::Approx(-pi / 6));
  CHECK(r0.phi2 == doctest::Approx(pi / 6));
  CHECK(r0.phi0 == 0.0);
  const PhiRange r1 = phi_range(1.5, kTorus);
  CHECK(r1.phi1 == doctest::Approx(std::asin(0.25)));
  CHECK(r1.phi2 == doctest::Approx(pi / 2));
  CHECK(r1.phi1 <= r1.phi0);
  CHECK(r1.phi0 <= r1.phi2);
  CHECK_THROWS_AS(phi_range(3, kTorus), DomainError);
  CHECK_THROWS_AS(phi_range(-1, kTorus), DomainError);
}

TEST_CASE("iterative_intersect") {
  SUBCASE("axis diameter") {
    const auto roots = iterative_intersect(PlanarRay{-4, 0, 1, 0, 0}, kTorus, 1e-12);
    const RootSet quartic = solve_quartic(assemble_quartic(Ray3{{-4, 0, 0}, {1, 0, 0}}, kTorus));
    const auto expected = quartic.expanded();
    REQUIRE(roots.size() == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(roots[i] == doctest::Approx(expected[i]).epsilon(1e-10));
      CHECK(roots[i] == doctest::Approx(1.0 + 2 * i).epsilon(1e-10));
    }
  }
  SUBCASE("hole ray") {
    CHECK(iterative_intersect(PlanarRay{0, -10, 0, 1, 0}, kTorus, 1e-12).empty());
  }
  SUBCASE("case B line near the inflected lobe") {
    const double tol = 1e-10;
    for (double y : {0.0, 0.3, 0.6, 0.9, 0.99}) {
      const PlanarRay pr{-5, y, 1, 0, 1.5};
      const auto roots = iterative_intersect(pr, kTorus, tol);
      CHECK(roots.size() <= 4);
      for (double t : roots) CHECK(std::abs(planar_profile(pr, kTorus, t)) <= 1e-8);
      const auto grid = oracle::grid_roots([&](double t) { return planar_profile(pr, kTorus, t); },
                                           -20, 20, 200000);
      CHECK(grid.size() == roots.size());
    }
  }
  SUBCASE("tangent line returns a double root") {
    const auto roots = iterative_intersect(PlanarRay{-10, 1, 1, 0, 0}, kTorus, 1e-12);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(roots[1] == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(roots[2] == doctest::Approx(12.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(iterative_intersect(kRay, kTorus, 0.0), DomainError);
}

TEST_CASE("iterative roots carry an envelope witness") {
  std::mt19937_64 g(24);
  const double tol = 1e-10;
  for (int n = 0; n < 2000; ++n) {
    const PlanarRay pr = random_planar(g, 2.99);
    const PhiRange range = phi_range(pr.z_c, kTorus);
    for (double t : iterative_intersect(pr, kTorus, tol)) {
      const double x = std::abs(pr.anchor_x + pr.dir_x * t);
      const double y = pr.anchor_y + pr.dir_y * t;
      // Nearest spine point fixes the sphere that touches this surface point.
      const double phi = std::atan2(pr.z_c, x);
      CHECK(phi >= range.phi1 - 1e-9);
      CHECK(phi <= range.phi2 + 1e-9);
      const auto circle = planar_circle(phi, pr.z_c, kTorus);
      REQUIRE(circle);
      const double dist2 = (x - circle->center_x) * (x - circle->center_x) + y * y;
      CHECK(std::abs(dist2 - circle->rho * circle->rho) <= 1e-8);
    }
  }
}
