#include "sjl/geometry.hpp"

#include <Eigen/QR>

#include <cmath>

namespace sjl {

VecX unit_point(const VecX& v) {
  const double n = v.norm();
  if (std::abs(n - 1.0) > 1e-12) {
    if (std::abs(n - 1.0) > 1e-6) throw Error("point not on the unit sphere");
  }
  return v / n;
}

LinearIsometry LinearIsometry::compose(const LinearIsometry& other) const {
  return LinearIsometry{matrix * other.matrix, IsometryKind::Composite};
}

LinearIsometry make_reflection(const MatX& span) {
  const int d = static_cast<int>(span.rows());
  Eigen::ColPivHouseholderQR<MatX> qr(span);
  qr.setThreshold(1e-10);
  const int r = static_cast<int>(qr.rank());
  if (r == 0 || r >= d || r < std::min<int>(d, static_cast<int>(span.cols())))
    throw Error("degenerate reflection subspace");
  MatX q = qr.householderQ() * MatX::Identity(d, r);
  MatX m = 2.0 * q * q.transpose() - MatX::Identity(d, d);
  return LinearIsometry{std::move(m), IsometryKind::Reflection};
}

LinearIsometry make_hyperplane_reflection(const VecX& normal) {
  VecX n = normal / normal.norm();
  const int d = static_cast<int>(n.size());
  MatX m = MatX::Identity(d, d) - 2.0 * n * n.transpose();
  return LinearIsometry{std::move(m), IsometryKind::Reflection};
}

LinearIsometry make_antipodal(int dim) {
  return LinearIsometry{-MatX::Identity(dim, dim), IsometryKind::Antipodal};
}

VecX reflect(const MatX& span, const VecX& p) {
  LinearIsometry r = make_reflection(span);
  VecX q = r(p);
  return q / q.norm();
}

GreatCircle GreatCircle::through(const Vec4& a, const Vec4& b, int orientation) {
  Vec4 u = a / a.norm();
  Vec4 w = b - b.dot(u) * u;
  if (w.norm() < 1e-10) throw Error("degenerate great circle span");
  return GreatCircle{u, w / w.norm(), orientation};
}

std::pair<Vec4, Vec4> GreatCircle::orthogonal_plane() const {
  Eigen::Matrix<double, 4, 2> s;
  s.col(0) = u;
  s.col(1) = v;
  Eigen::HouseholderQR<Eigen::Matrix<double, 4, 2>> qr(s);
  Mat4 q = qr.householderQ();
  Vec4 w1 = q.col(2), w2 = q.col(3);
  Mat4 basis;
  basis.col(0) = u;
  basis.col(1) = v;
  basis.col(2) = w1;
  basis.col(3) = w2;
  if (basis.determinant() < 0) w2 = -w2;
  if (orientation < 0) w2 = -w2;
  return {w1, w2};
}

LinearIsometry rotate_about_circle(const GreatCircle& c, double phi) {
  auto [w1, w2] = c.orthogonal_plane();
  const double cs = std::cos(phi), sn = std::sin(phi);
  Mat4 m = c.u * c.u.transpose() + c.v * c.v.transpose() +
           cs * (w1 * w1.transpose() + w2 * w2.transpose()) +
           sn * (w2 * w1.transpose() - w1 * w2.transpose());
  return LinearIsometry{m, IsometryKind::Rotation};
}

Vec4 killing_field(const GreatCircle& c, const Vec4& p) {
  auto [w1, w2] = c.orthogonal_plane();
  return w2 * w1.dot(p) - w1 * w2.dot(p);
}

Vec4 p_sub(double phi) { return Vec4(std::cos(phi), std::sin(phi), 0.0, 0.0); }
Vec4 p_super(double phi) { return Vec4(0.0, 0.0, std::cos(phi), std::sin(phi)); }

GreatCircle circle_c0() {
  return GreatCircle{Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0), +1};
}

GreatCircle circle_c0_perp() {
  return GreatCircle{Vec4(0, 0, 1, 0), Vec4(0, 0, 0, 1), +1};
}

GreatCircle circle_mixed(double phi, double phi_prime) {
  return GreatCircle{p_sub(phi), p_super(phi_prime), +1};
}

LinearIsometry reflect_sigma_sub(double phi) {
  return make_hyperplane_reflection(Vec4(-std::sin(phi), std::cos(phi), 0, 0));
}

LinearIsometry reflect_sigma_super(double phi) {
  return make_hyperplane_reflection(Vec4(0, 0, -std::sin(phi), std::cos(phi)));
}

}  // namespace sjl
