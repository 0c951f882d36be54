#include "toroid/projective.hpp"

#include <algorithm>
#include <cmath>

#include "toroid/error.hpp"

namespace toroid {

namespace {

template <std::size_t N>
double max_abs(const std::array<double, N>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// A cross product whose entries all vanish relative to its inputs is treated as
// the zero vector.
constexpr double kZeroRel = 1e-13;

template <std::size_t N>
bool is_zero_result(const std::array<double, N>& res, double input_scale) {
  return max_abs(res) <= kZeroRel * input_scale;
}

std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double det3(double a00, double a01, double a02, double a10, double a11, double a12, double a20,
            double a21, double a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
         a02 * (a10 * a21 - a11 * a20);
}

// Minor of a 4x4 matrix with row `skip_r` and column `skip_c` removed.
double minor4(const std::array<std::array<double, 4>, 4>& m, int skip_r, int skip_c) {
  double a[3][3];
  int ri = 0;
  for (int r = 0; r < 4; ++r) {
    if (r == skip_r) continue;
    int ci = 0;
    for (int c = 0; c < 4; ++c) {
      if (c == skip_c) continue;
      a[ri][ci++] = m[r][c];
    }
    ++ri;
  }
  return det3(a[0][0], a[0][1], a[0][2], a[1][0], a[1][1], a[1][2], a[2][0], a[2][1], a[2][2]);
}

// Formal determinant of [e; x1; x2; x3] expanded along the symbolic first row.
std::array<double, 4> cross4(const std::array<double, 4>& x1, const std::array<double, 4>& x2,
                             const std::array<double, 4>& x3) {
  std::array<std::array<double, 4>, 4> m{};
  m[1] = x1;
  m[2] = x2;
  m[3] = x3;
  std::array<double, 4> out{};
  for (int j = 0; j < 4; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    out[j] = sign * minor4(m, 0, j);
  }
  return out;
}

template <std::size_t N>
bool projectively_equal_impl(const std::array<double, N>& a, const std::array<double, N>& b,
                             double tol) {
  auto pivot = [](const std::array<double, N>& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < N; ++i)
      if (std::abs(v[i]) > std::abs(v[k])) k = i;
    return k;
  };
  const std::size_t ka = pivot(a);
  if (a[ka] == 0.0) return max_abs(b) == 0.0;
  // Use the same pivot index for both so the overall sign is fixed.
  if (b[ka] == 0.0) return false;
  for (std::size_t i = 0; i < N; ++i) {
    if (std::abs(a[i] / a[ka] - b[i] / b[ka]) > tol) return false;
  }
  return true;
}

}  // namespace

Transform4 Transform4::identity() {
  Transform4 t;
  for (int i = 0; i < 4; ++i) t.m[i][i] = 1.0;
  return t;
}

Transform4 Transform4::translation(const Vec3& v) {
  Transform4 t = identity();
  t.m[0][3] = v.x;
  t.m[1][3] = v.y;
  t.m[2][3] = v.z;
  return t;
}

Transform4 Transform4::rotation_y(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Transform4 t = identity();
  t.m[0][0] = c;
  t.m[0][2] = s;
  t.m[2][0] = -s;
  t.m[2][2] = c;
  return t;
}

Transform4 Transform4::operator*(const Transform4& o) const {
  Transform4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

HPoint3 Transform4::operator*(const HPoint3& p) const {
  HPoint3 r;
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += m[i][k] * p.c[k];
    r.c[i] = s;
  }
  return r;
}

Vec3 Transform4::apply_point(const Vec3& p) const {
  return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z + m[0][3],
          m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z + m[1][3],
          m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z + m[2][3]};
}

Vec3 Transform4::apply_vector(const Vec3& v) const {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Transform4 Transform4::rigid_inverse() const {
  Transform4 r = identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  const Vec3 t{m[0][3], m[1][3], m[2][3]};
  const Vec3 back = r.apply_vector(t);
  r.m[0][3] = -back.x;
  r.m[1][3] = -back.y;
  r.m[2][3] = -back.z;
  return r;
}

Mat3 mat3_identity() { return Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

double determinant(const Mat3& a) {
  return det3(a[0][0], a[0][1], a[0][2], a[1][0], a[1][1], a[1][2], a[2][0], a[2][1], a[2][2]);
}

double determinant(const Transform4& t) {
  double d = 0.0;
  for (int j = 0; j < 4; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    d += sign * t.m[0][j] * minor4(t.m, 0, j);
  }
  return d;
}

Mat3 cofactor(const Mat3& a) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i) {
    const auto& r1 = a[(i + 1) % 3];
    const auto& r2 = a[(i + 2) % 3];
    // Row i of the cofactor matrix is the cross product of the other two rows.
    c[i] = cross3(r1, r2);
  }
  return c;
}

Transform4 cofactor(const Transform4& t) {
  Transform4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      c.m[i][j] = sign * minor4(t.m, i, j);
    }
  return c;
}

Mat3 inverse(const Mat3& a) {
  const double d = determinant(a);
  if (d == 0.0 || !std::isfinite(d)) throw DegenerateError("inverse: singular 3x3 matrix");
  const Mat3 c = cofactor(a);
  Mat3 inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[i][j] = c[j][i] / d;
  return inv;
}

Transform4 inverse(const Transform4& t) {
  const double d = determinant(t);
  if (d == 0.0 || !std::isfinite(d)) throw DegenerateError("inverse: singular 4x4 matrix");
  const Transform4 c = cofactor(t);
  Transform4 inv;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv.m[i][j] = c.m[j][i] / d;
  return inv;
}

HPoint2 apply(const Mat3& m, const HPoint2& p) {
  HPoint2 r;
  for (int i = 0; i < 3; ++i) r.c[i] = m[i][0] * p.c[0] + m[i][1] * p.c[1] + m[i][2] * p.c[2];
  return r;
}

double incidence(const HLine2& l, const HPoint2& p) {
  return l.c[0] * p.c[0] + l.c[1] * p.c[1] + l.c[2] * p.c[2];
}

double incidence(const HPlane3& r, const HPoint3& p) {
  return r.c[0] * p.c[0] + r.c[1] * p.c[1] + r.c[2] * p.c[2] + r.c[3] * p.c[3];
}

HLine2 line_from_points(const HPoint2& p1, const HPoint2& p2) {
  HLine2 l{cross3(p1.c, p2.c)};
  if (is_zero_result(l.c, max_abs(p1.c) * max_abs(p2.c)))
    throw DegenerateError("line_from_points: points are projectively equal");
  return l;
}

HPoint2 lines_intersect(const HLine2& l1, const HLine2& l2) {
  HPoint2 p{cross3(l1.c, l2.c)};
  if (is_zero_result(p.c, max_abs(l1.c) * max_abs(l2.c)))
    throw DegenerateError("lines_intersect: lines are identical");
  return p;
}

HPlane3 plane_from_points(const HPoint3& p1, const HPoint3& p2, const HPoint3& p3) {
  HPlane3 r{cross4(p1.c, p2.c, p3.c)};
  if (is_zero_result(r.c, max_abs(p1.c) * max_abs(p2.c) * max_abs(p3.c)))
    throw DegenerateError("plane_from_points: points are collinear");
  return r;
}

HPoint3 planes_intersect(const HPlane3& r1, const HPlane3& r2, const HPlane3& r3) {
  HPoint3 p{cross4(r1.c, r2.c, r3.c)};
  if (is_zero_result(p.c, max_abs(r1.c) * max_abs(r2.c) * max_abs(r3.c)))
    throw DegenerateError("planes_intersect: planes are not in general position");
  return p;
}

HLine2 transform_implicit(const HLine2& line, const Mat3& t) {
  const double d = determinant(t);
  if (d == 0.0 || !std::isfinite(d)) throw DegenerateError("transform_implicit: singular matrix");
  const Mat3 q = cofactor(t);
  HLine2 out;
  for (int i = 0; i < 3; ++i)
    out.c[i] = q[i][0] * line.c[0] + q[i][1] * line.c[1] + q[i][2] * line.c[2];
  return out;
}

HPlane3 transform_implicit(const HPlane3& plane, const Transform4& t) {
  const double d = determinant(t);
  if (d == 0.0 || !std::isfinite(d)) throw DegenerateError("transform_implicit: singular matrix");
  const Transform4 q = cofactor(t);
  HPlane3 out;
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += q.m[i][k] * plane.c[k];
    out.c[i] = s;
  }
  return out;
}

bool projectively_equal(const std::array<double, 3>& a, const std::array<double, 3>& b,
                        double tol) {
  return projectively_equal_impl(a, b, tol);
}

bool projectively_equal(const std::array<double, 4>& a, const std::array<double, 4>& b,
                        double tol) {
  return projectively_equal_impl(a, b, tol);
}

Vec3 to_euclidean(const HPoint3& p) {
  if (p.c[3] == 0.0) throw DomainError("to_euclidean: point at infinity");
  return {p.c[0] / p.c[3], p.c[1] / p.c[3], p.c[2] / p.c[3]};
}

HPoint3 to_homogeneous(const Vec3& p) { return HPoint3{{p.x, p.y, p.z, 1.0}}; }

}  // namespace toroid
