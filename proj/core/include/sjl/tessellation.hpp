#pragma once

#include "sjl/geometry.hpp"

namespace sjl {

/// Geodesic arc between two orthogonal unit points, lying on `circle`.
struct GeodesicArc {
  Vec4 a, b;
  GreatCircle circle;

  Vec4 at(double s) const {  // s in [0,1], a at 0, b at 1
    return std::cos(s * kPi / 2) * a + std::sin(s * kPi / 2) * b;
  }
  double length() const { return kPi / 2; }
};

/// Subdivision of S^3 by the great-sphere families Sigma_{i pi/m} and
/// Sigma^{j pi/k}: 4km closed spherical tetrahedra indexed by half-integers.
///
/// Angle tables, with i, j half-integers:
///   t_i  = (2i-1) pi / (2m)   on the circle C_0,
///   t^j  = (2j-1) pi / (2k)   on the circle C_0^perp.
/// Vertices q_i = p_sub(t_i), q^j = p_super(t^j).
///
/// Cells with integer (i, j) are centered on the reflection spheres and carry
/// the fundamental discs of the associated closed surfaces; cells with
/// half-integer labels are bounded by the reflection spheres.
class Tessellation {
 public:
  Tessellation(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }

  /// t_i in radians, never accumulated: computed from the integer numerator.
  double t_sub(HalfInt i) const { return (i.twice - 1) * kPi / (2.0 * m_); }
  double t_super(HalfInt j) const { return (j.twice - 1) * kPi / (2.0 * k_); }

  Vec4 q_sub(HalfInt i) const { return p_sub(t_sub(i)); }
  Vec4 q_super(HalfInt j) const { return p_super(t_super(j)); }

  /// Closed-cell membership of p in the tetrahedron Omega_i^j, with 1e-10
  /// angular slack; an angular coordinate left undetermined by p (radius 0 in
  /// that plane) matches vacuously.
  bool cell_membership(HalfInt i, HalfInt j, const Vec4& p) const;

  /// The four edges q_i q^j, q^j q_{i+1}, q_{i+1} q^{j+1}, q^{j+1} q_i of the
  /// boundary quadrilateral Q_i^j, each an arc of length pi/2.
  std::array<GeodesicArc, 4> boundary_quadrilateral(HalfInt i, HalfInt j) const;

  /// Membership in the closed octant-type domain selected by the four signs
  /// (s_super0, s_super1, s_sub0, s_sub1) against the spheres
  /// Sigma^0, Sigma^{pi/2}, Sigma_0, Sigma_{pi/2}. The all-plus domain is
  /// {x in S^3 : x1,x2,x3,x4 >= 0}.
  static bool octant_membership(int s_super0, int s_super1, int s_sub0,
                                int s_sub1, const Vec4& p);

 private:
  int m_, k_;
};

}  // namespace sjl
