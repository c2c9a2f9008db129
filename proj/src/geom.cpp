#include "regge/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace regge {

namespace {

constexpr double kPi = std::numbers::pi;

// Angle opposite side a via the half-angle formula; well-behaved for thin
// triangles where the acos form loses digits.
double opposite_angle(double a, double b, double c) {
  const double s = 0.5 * (a + b + c);
  const double num = std::sqrt(std::max(0.0, (s - b) * (s - c)));
  const double den = std::sqrt(std::max(0.0, s * (s - a)));
  return 2.0 * std::atan2(num, den);
}

bool strict_triangle(double a, double b, double c) {
  return a > 0 && b > 0 && c > 0 && a + b > c && b + c > a && c + a > b;
}

double cm_scale(const TetLengths& l) {
  const double m = l.mean();
  return m * m * m * m * m * m;
}

// Angle at vertex i of face (i,j,k) of the tetrahedron.
double face_angle_at(const TetLengths& l, int i, int j, int k) {
  return opposite_angle(l.between(j, k), l.between(i, j), l.between(i, k));
}

struct EdgeFrame {
  int u, v;  // edge endpoints
  int k, m;  // the two remaining vertices
};

EdgeFrame edge_frame(int e) {
  const int u = tet_edge_vertices[static_cast<size_t>(e)][0];
  const int v = tet_edge_vertices[static_cast<size_t>(e)][1];
  int rest[2];
  int n = 0;
  for (int w = 0; w < 4; ++w)
    if (w != u && w != v) rest[n++] = w;
  return {u, v, rest[0], rest[1]};
}

// sin(theta_uv) from the identity V = (2/3) A_uvk A_uvm sin(theta_uv) / l_uv.
double dihedral_sine(const TetLengths& l, const EdgeFrame& f, double volume) {
  const double area1 = triangle_area(l.between(f.u, f.v), l.between(f.u, f.k), l.between(f.v, f.k));
  const double area2 = triangle_area(l.between(f.u, f.v), l.between(f.u, f.m), l.between(f.v, f.m));
  return 1.5 * volume * l.between(f.u, f.v) / (area1 * area2);
}

// cos(theta_uv) via the spherical law of cosines in the vertex figure at u.
double dihedral_cosine(const TetLengths& l, const EdgeFrame& f) {
  const double sa = face_angle_at(l, f.u, f.k, f.m);
  const double sb = face_angle_at(l, f.u, f.v, f.k);
  const double sc = face_angle_at(l, f.u, f.v, f.m);
  return (std::cos(sa) - std::cos(sb) * std::cos(sc)) / (std::sin(sb) * std::sin(sc));
}

double volume_unchecked(double cm) { return std::sqrt(cm / 288.0); }

// Extended-precision kernel for the Jacobian only: the spherical-trig
// derivative chain cancels ~4 digits on slivers, and the Schlaefli residual
// inherits that loss at double. Guards and thresholds stay double.
using Real = long double;

Real real_opposite_angle(Real a, Real b, Real c) {
  const Real s = 0.5L * (a + b + c);
  const Real num = std::sqrt(std::max<Real>(0.0L, (s - b) * (s - c)));
  const Real den = std::sqrt(std::max<Real>(0.0L, s * (s - a)));
  return 2.0L * std::atan2(num, den);
}

Real real_triangle_area(Real a, Real b, Real c) {
  Real x = a, y = b, z = c;
  if (x < y) std::swap(x, y);
  if (y < z) std::swap(y, z);
  if (x < y) std::swap(x, y);
  const Real t = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return 0.25L * std::sqrt(std::max<Real>(0.0L, t));
}

Real real_cayley_menger(const std::array<Real, 6>& l) {
  Eigen::Matrix<Real, 5, 5> m;
  m.setZero();
  for (int i = 1; i < 5; ++i) {
    m(0, i) = 1.0L;
    m(i, 0) = 1.0L;
  }
  for (int e = 0; e < 6; ++e) {
    const auto& ev = tet_edge_vertices[static_cast<size_t>(e)];
    const Real q = l[static_cast<size_t>(e)] * l[static_cast<size_t>(e)];
    m(ev[0] + 1, ev[1] + 1) = q;
    m(ev[1] + 1, ev[0] + 1) = q;
  }
  return m.determinant();
}

} // namespace

int tet_edge_index(int u, int v) {
  for (int e = 0; e < 6; ++e) {
    const auto& ev = tet_edge_vertices[static_cast<size_t>(e)];
    if ((ev[0] == u && ev[1] == v) || (ev[0] == v && ev[1] == u)) return e;
  }
  fail(ErrorCode::PreconditionViolation, "invalid tet edge pair");
}

double TetLengths::mean() const {
  double s = 0;
  for (double x : l) s += x;
  return s / 6.0;
}

std::array<double, 3> triangle_angles(double a, double b, double c) {
  if (!strict_triangle(a, b, c))
    fail(ErrorCode::DegenerateTriangle, "side lengths violate the strict triangle inequality");
  return {opposite_angle(a, b, c), opposite_angle(b, c, a), opposite_angle(c, a, b)};
}

double triangle_area(double a, double b, double c) {
  // Kahan's stable Heron evaluation; requires sorted sides.
  double x = a, y = b, z = c;
  if (x < y) std::swap(x, y);
  if (y < z) std::swap(y, z);
  if (x < y) std::swap(x, y);
  const double t = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return 0.25 * std::sqrt(std::max(0.0, t));
}

double cayley_menger(const TetLengths& l) {
  Eigen::Matrix<double, 5, 5> m;
  m.setZero();
  for (int i = 1; i < 5; ++i) {
    m(0, i) = 1.0;
    m(i, 0) = 1.0;
  }
  for (int e = 0; e < 6; ++e) {
    const auto& ev = tet_edge_vertices[static_cast<size_t>(e)];
    const double q = l[e] * l[e];
    m(ev[0] + 1, ev[1] + 1) = q;
    m(ev[1] + 1, ev[0] + 1) = q;
  }
  return m.determinant();
}

bool tet_nondegenerate(const TetLengths& l) {
  for (double x : l.l)
    if (!(x > 0)) return false;
  return cayley_menger(l) > kDegenerateCmRel * cm_scale(l);
}

double tet_volume(const TetLengths& l) {
  const double cm = cayley_menger(l);
  if (!(cm > kDegenerateCmRel * cm_scale(l)))
    fail(ErrorCode::DegenerateTet, "lengths do not span a nondegenerate Euclidean tetrahedron");
  return volume_unchecked(cm);
}

DihedralSet dihedral_angles(const TetLengths& l) {
  const double cm = cayley_menger(l);
  if (!(cm > kDegenerateCmRel * cm_scale(l)))
    fail(ErrorCode::DegenerateTet, "lengths do not span a nondegenerate Euclidean tetrahedron");
  const double vol = volume_unchecked(cm);

  DihedralSet out;
  for (int e = 0; e < 6; ++e) {
    const EdgeFrame f = edge_frame(e);
    // atan2 of an independently computed sine/cosine pair: accurate at both
    // ends of (0, pi), where either acos or asin alone degrades.
    out.angle[static_cast<size_t>(e)] = std::atan2(dihedral_sine(l, f, vol), dihedral_cosine(l, f));
  }
  return out;
}

bool jacobian_well_conditioned(const TetLengths& l) {
  return cayley_menger(l) > kIllConditionedCmRel * cm_scale(l);
}

Eigen::Matrix<double, 6, 6> dihedral_jacobian(const TetLengths& l) {
  const double cm = cayley_menger(l);
  const double scale = cm_scale(l);
  if (!(cm > kDegenerateCmRel * scale))
    fail(ErrorCode::DegenerateTet, "lengths do not span a nondegenerate Euclidean tetrahedron");
  if (!(cm > kIllConditionedCmRel * scale))
    fail(ErrorCode::IllConditioned, "Cayley-Menger determinant below the Jacobian safety margin");

  std::array<Real, 6> lr;
  for (int e = 0; e < 6; ++e) lr[static_cast<size_t>(e)] = l[e];
  auto between = [&](int u, int v) { return lr[static_cast<size_t>(tet_edge_index(u, v))]; };
  const Real vol = std::sqrt(real_cayley_menger(lr) / 288.0L);

  // Planar partials of the angle at vertex i of face (i,j,k) with respect to
  // the three face lengths, scattered into the 6 tet-edge slots.
  struct FaceAngle {
    Real value;
    Eigen::Matrix<Real, 6, 1> grad;
  };
  auto face_angle = [&](int i, int j, int k) {
    FaceAngle fa;
    const Real a = between(j, k);  // opposite side
    const Real b = between(i, j);
    const Real c = between(i, k);
    fa.value = real_opposite_angle(a, b, c);
    const Real at_j = real_opposite_angle(c, a, b);  // angle at j (opposite c)
    const Real at_k = real_opposite_angle(b, c, a);  // angle at k (opposite b)
    const Real denom = b * c * std::sin(fa.value);
    fa.grad.setZero();
    fa.grad(tet_edge_index(j, k)) = a / denom;
    fa.grad(tet_edge_index(i, j)) = -a * std::cos(at_j) / denom;
    fa.grad(tet_edge_index(i, k)) = -a * std::cos(at_k) / denom;
    return fa;
  };

  Eigen::Matrix<double, 6, 6> jac;
  for (int e = 0; e < 6; ++e) {
    const EdgeFrame f = edge_frame(e);
    // Vertex figure at u: spherical triangle with sides sa (opposite the
    // dihedral angle at uv), sb, sc.
    const FaceAngle sa = face_angle(f.u, f.k, f.m);
    const FaceAngle sb = face_angle(f.u, f.v, f.k);
    const FaceAngle sc = face_angle(f.u, f.v, f.m);

    const Real sin_a = std::sin(sa.value), cos_a = std::cos(sa.value);
    const Real sin_b = std::sin(sb.value), cos_b = std::cos(sb.value);
    const Real sin_c = std::sin(sc.value), cos_c = std::cos(sc.value);
    const Real area1 = real_triangle_area(between(f.u, f.v), between(f.u, f.k), between(f.v, f.k));
    const Real area2 = real_triangle_area(between(f.u, f.v), between(f.u, f.m), between(f.v, f.m));
    const Real sin_theta = 1.5L * vol * between(f.u, f.v) / (area1 * area2);
    const Real cos_theta = (cos_a - cos_b * cos_c) / (sin_b * sin_c);
    const Real denom = sin_b * sin_c * sin_theta;

    // Partials of the spherical angle opposite side sa.
    const Real d_sa = sin_a / denom;
    const Real d_sb = (cos_b * sin_c * cos_theta - sin_b * cos_c) / denom;
    const Real d_sc = (cos_c * sin_b * cos_theta - sin_c * cos_b) / denom;

    jac.row(e) = (d_sa * sa.grad + d_sb * sb.grad + d_sc * sc.grad).transpose().cast<double>();
  }
  return jac;
}

bool dihedral_set_consistent(const DihedralSet& d) {
  for (int e = 0; e < 6; ++e)
    if (!(d[e] > 0 && d[e] < kPi)) return false;
  // At each vertex the three incident dihedral angles are the angles of a
  // spherical triangle (the vertex figure); via the polar triangle this means
  // their sum exceeds pi and no angle exceeds the other two by more than pi.
  for (int v = 0; v < 4; ++v) {
    double a[3];
    int n = 0;
    for (int e = 0; e < 6; ++e) {
      const auto& ev = tet_edge_vertices[static_cast<size_t>(e)];
      if (ev[0] == v || ev[1] == v) a[n++] = d[e];
    }
    const double sum = a[0] + a[1] + a[2];
    if (!(sum > kPi)) return false;
    for (int i = 0; i < 3; ++i)
      if (!(sum - a[i] < kPi + a[i])) return false;
  }
  return true;
}

} // namespace regge
