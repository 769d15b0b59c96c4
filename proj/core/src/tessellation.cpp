#include "sjl/tessellation.hpp"

#include <cmath>

namespace sjl {

namespace {

// Angular excess of theta outside [lo, lo+len] on the circle, in [0, pi].
double circular_violation(double theta, double lo, double len) {
  double d = std::fmod(theta - lo, 2 * kPi);
  if (d < 0) d += 2 * kPi;
  if (d <= len) return 0.0;
  return std::min(d - len, 2 * kPi - d);
}

}  // namespace

Tessellation::Tessellation(int m, int k) : m_(m), k_(k) {
  if (m < 2 || k < 2) throw Error("tessellation requires m >= 2, k >= 2");
}

bool Tessellation::cell_membership(HalfInt i, HalfInt j, const Vec4& p) const {
  constexpr double kSlack = 1e-10;
  const double rc = std::hypot(p[0], p[1]);
  const double rs = std::hypot(p[2], p[3]);
  bool in_sub = true, in_super = true;
  if (rc > kSlack) {
    const double theta = std::atan2(p[1], p[0]);
    const double v = circular_violation(theta, t_sub(i), kPi / m_);
    // Tolerance in chordal distance: angular deviation v at radius rc.
    in_sub = (v <= kSlack) || (v * rc <= kSlack);
  }
  if (rs > kSlack) {
    const double psi = std::atan2(p[3], p[2]);
    const double v = circular_violation(psi, t_super(j), kPi / k_);
    in_super = (v <= kSlack) || (v * rs <= kSlack);
  }
  return in_sub && in_super;
}

std::array<GeodesicArc, 4> Tessellation::boundary_quadrilateral(HalfInt i,
                                                                HalfInt j) const {
  const Vec4 qi = q_sub(i), qi1 = q_sub(i + 1);
  const Vec4 qj = q_super(j), qj1 = q_super(j + 1);
  auto arc = [](const Vec4& a, const Vec4& b) {
    return GeodesicArc{a, b, GreatCircle::through(a, b)};
  };
  return {arc(qi, qj), arc(qj, qi1), arc(qi1, qj1), arc(qj1, qi)};
}

bool Tessellation::octant_membership(int s_super0, int s_super1, int s_sub0,
                                     int s_sub1, const Vec4& p) {
  constexpr double kSlack = 1e-10;
  return p[3] * s_super0 >= -kSlack && p[2] * s_super1 >= -kSlack &&
         p[1] * s_sub0 >= -kSlack && p[0] * s_sub1 >= -kSlack;
}

}  // namespace sjl
