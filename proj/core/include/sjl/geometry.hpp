#pragma once

#include "sjl/common.hpp"

namespace sjl {

// Exact geometry of round spheres sitting in Euclidean space: points are unit
// vectors, hypersurface isometries are orthogonal matrices acting on the
// ambient space.

/// Checked constructor for a point on S^{d-1}: renormalizes if the norm is
/// within 1e-12 of 1, throws otherwise.
VecX unit_point(const VecX& v);

enum class IsometryKind { Reflection, Rotation, Antipodal, Composite };

/// Orthogonal map of the ambient space restricted to the sphere.
struct LinearIsometry {
  MatX matrix;
  IsometryKind kind = IsometryKind::Composite;

  VecX operator()(const VecX& p) const { return matrix * p; }
  LinearIsometry compose(const LinearIsometry& other) const;
};

/// Reflection through the subspace spanned by the columns of `span`
/// (restricts to the sphere as the reflection fixing span ∩ S).
/// Throws "degenerate reflection subspace" if the columns are rank-deficient
/// within 1e-10 or span the whole space.
LinearIsometry make_reflection(const MatX& span);

/// Reflection across the great sphere with unit normal `normal`.
LinearIsometry make_hyperplane_reflection(const VecX& normal);

LinearIsometry make_antipodal(int dim);

/// Reflect point p through the subspace spanned by the columns of A.
VecX reflect(const MatX& span, const VecX& p);

/// Oriented great circle in S^3: span{u, v} ∩ S^3 with u ⟂ v unit.
/// `orientation` fixes the sense of rotations about the circle: the rotation
/// plane (span{u,v})^⊥ is oriented so that (u, v, w1, w2) is a positively
/// oriented basis of R^4, and orientation = -1 flips it.
struct GreatCircle {
  Vec4 u, v;
  int orientation = +1;

  static GreatCircle through(const Vec4& a, const Vec4& b, int orientation = +1);

  /// Positively oriented orthonormal basis (w1, w2) of the orthogonal plane.
  std::pair<Vec4, Vec4> orthogonal_plane() const;
};

/// Rotation about C by angle phi: fixes C pointwise, rotates the totally
/// orthogonal circle along itself by phi in the chosen orientation.
LinearIsometry rotate_about_circle(const GreatCircle& c, double phi);

/// Killing field of the rotation family about C, evaluated at p:
/// d/dphi at 0 of rotate_about_circle(C, phi)(p). Vanishes on C, tangent to S^3.
Vec4 killing_field(const GreatCircle& c, const Vec4& p);

// Named objects of the S^3 coordinate setup.
Vec4 p_sub(double phi);   // (cos phi, sin phi, 0, 0), on C_0
Vec4 p_super(double phi); // (0, 0, cos phi, sin phi), on C_0^perp
GreatCircle circle_c0();
GreatCircle circle_c0_perp();
/// span{p_sub(phi), p_super(phi')} ∩ S^3.
GreatCircle circle_mixed(double phi, double phi_prime);

/// Great sphere Sigma_phi = span{C_0^perp ∪ {p_sub(phi)}} ∩ S^3 (unit normal
/// p_sub(phi + pi/2)); reflection across it.
LinearIsometry reflect_sigma_sub(double phi);
/// Great sphere Sigma^phi = span{C_0 ∪ {p_super(phi)}} ∩ S^3.
LinearIsometry reflect_sigma_super(double phi);

}  // namespace sjl
