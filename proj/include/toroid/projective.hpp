#pragma once

// Homogeneous-coordinate primitives. Points, lines and planes are plain
// coordinate arrays; joins and meets are (extended) cross products, and
// implicit objects transform with the cofactor matrix of the point transform.

#include <array>

#include "toroid/vec3.hpp"

namespace toroid {

struct HPoint2 {
  std::array<double, 3> c{};  // x, y, w
};

struct HLine2 {
  std::array<double, 3> c{};  // a, b, c of ax + by + cw = 0
};

struct HPoint3 {
  std::array<double, 4> c{};  // x, y, z, w
};

struct HPlane3 {
  std::array<double, 4> c{};  // a, b, c, d of ax + by + cz + dw = 0
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// 4x4 matrix stored as rows, acting on column vectors (x' = T x).
struct Transform4 {
  std::array<std::array<double, 4>, 4> m{};

  static Transform4 identity();
  static Transform4 translation(const Vec3& t);
  // Right-handed rotation about +y: x' = cos*x + sin*z, z' = -sin*x + cos*z.
  static Transform4 rotation_y(double angle);

  Transform4 operator*(const Transform4& o) const;
  HPoint3 operator*(const HPoint3& p) const;

  Vec3 apply_point(const Vec3& p) const;
  // Linear part only (ignores translation).
  Vec3 apply_vector(const Vec3& v) const;
  // Inverse of a rigid transform (rotation block transposed).
  Transform4 rigid_inverse() const;
};

Mat3 mat3_identity();
double determinant(const Mat3& m);
double determinant(const Transform4& t);
// det(T) * (T^-1)^T, i.e. the cofactor matrix. No division involved.
Mat3 cofactor(const Mat3& m);
Transform4 cofactor(const Transform4& t);
Mat3 inverse(const Mat3& m);
Transform4 inverse(const Transform4& t);

HPoint2 apply(const Mat3& m, const HPoint2& p);

double incidence(const HLine2& l, const HPoint2& p);
double incidence(const HPlane3& r, const HPoint3& p);

// Join of two points. Throws DegenerateError for projectively equal points.
HLine2 line_from_points(const HPoint2& p1, const HPoint2& p2);
// Meet of two lines; w == 0 for parallel lines. Throws for identical lines.
HPoint2 lines_intersect(const HLine2& l1, const HLine2& l2);
// Extended cross product of three points. Throws for collinear points.
HPlane3 plane_from_points(const HPoint3& p1, const HPoint3& p2, const HPoint3& p3);
// Meet of three planes; w == 0 when there is no common finite point.
HPoint3 planes_intersect(const HPlane3& r1, const HPlane3& r2, const HPlane3& r3);

// Implicit objects map through the cofactor of T; the det(T) factor is kept
// because implicit coefficients are scale free anyway. Throws for singular T.
HLine2 transform_implicit(const HLine2& line, const Mat3& t);
HPlane3 transform_implicit(const HPlane3& plane, const Transform4& t);

// Compares after dividing each vector by its largest-magnitude component.
bool projectively_equal(const std::array<double, 3>& a, const std::array<double, 3>& b,
                        double tol = 1e-10);
bool projectively_equal(const std::array<double, 4>& a, const std::array<double, 4>& b,
                        double tol = 1e-10);

// Throws DomainError when w == 0.
Vec3 to_euclidean(const HPoint3& p);
HPoint3 to_homogeneous(const Vec3& p);

}  // namespace toroid
