#include "sjl/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sjl {

int ExactSurface::normal_parity_tau() const {
  // A unit normal field, viewed as a map to the ambient space, is even under
  // x -> -x exactly when the defining gradient has even degree - 1: equators
  // and the cubic surface (odd number of curvatures) have even normals, the
  // Clifford family has odd normals.
  return (g_distinct % 2 == 1) ? +1 : -1;
}

ExactSurface ExactSurface::equator(int n) {
  if (n < 1) throw Error("equator dimension must be >= 1");
  return ExactSurface{ExactKind::Equator, n, 0, 1};
}

ExactSurface ExactSurface::clifford(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) throw Error("clifford split out of range");
  return ExactSurface{ExactKind::Clifford, n, k, 2};
}

ExactSurface ExactSurface::cartan_cubic() {
  return ExactSurface{ExactKind::CartanCubic, 3, 0, 3};
}

long sphere_harmonic_multiplicity(int d, int l) {
  if (l < 0) return 0;
  if (l == 0) return 1;
  if (d == 1) return 2;  // cos, sin on the circle
  auto binom = [](long a, long b) -> long {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  return binom(d + l, d) - binom(d + l - 2, d);
}

std::vector<SpectrumLine> equator_spectrum(int n, double lambda_max) {
  std::vector<SpectrumLine> out;
  for (int l = 0;; ++l) {
    const double ev = static_cast<double>(l) * (l + n - 1);
    if (ev > lambda_max) break;
    out.push_back({ev, static_cast<int>(sphere_harmonic_multiplicity(n, l)),
                   (l % 2 == 0) ? +1 : -1});
  }
  return out;
}

std::vector<SpectrumLine> clifford_spectrum(int n, int k, double lambda_max) {
  if (k < 1 || k > n - 1) throw Error("clifford split out of range");
  const double ca = static_cast<double>(n) / k;
  const double cb = static_cast<double>(n) / (n - k);
  // Aggregate by (eigenvalue cluster, parity); clusters merged within 1e-9.
  std::map<std::pair<long long, int>, long> acc;
  const double quantum = 1e-9;
  for (int a = 0;; ++a) {
    const double ea = a * (a + k - 1) * ca;
    if (ea > lambda_max) break;
    for (int b = 0;; ++b) {
      const double ev = ea + b * (b + n - k - 1) * cb;
      if (ev > lambda_max) break;
      const long mult = sphere_harmonic_multiplicity(k, a) *
                        sphere_harmonic_multiplicity(n - k, b);
      const int parity = ((a + b) % 2 == 0) ? +1 : -1;
      acc[{static_cast<long long>(std::llround(ev / quantum)), parity}] += mult;
    }
  }
  std::vector<SpectrumLine> out;
  for (const auto& [key, mult] : acc)
    out.push_back({key.first * quantum, static_cast<int>(mult), key.second});
  std::sort(out.begin(), out.end(), [](const SpectrumLine& a, const SpectrumLine& b) {
    return a.eigenvalue < b.eigenvalue ||
           (a.eigenvalue == b.eigenvalue && a.parity > b.parity);
  });
  return out;
}

// --- Cartan cubic -----------------------------------------------------------

namespace {

// Orthonormal basis of traceless symmetric 3x3 matrices under tr(AB).
const std::array<Eigen::Matrix3d, 5>& cartan_basis() {
  static const std::array<Eigen::Matrix3d, 5> basis = [] {
    std::array<Eigen::Matrix3d, 5> e;
    const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
    e[0] << 1 / s2, 0, 0, 0, -1 / s2, 0, 0, 0, 0;
    e[1] << 1 / s6, 0, 0, 0, 1 / s6, 0, 0, 0, -2 / s6;
    e[2] << 0, 1 / s2, 0, 1 / s2, 0, 0, 0, 0, 0;
    e[3] << 0, 0, 1 / s2, 0, 0, 0, 1 / s2, 0, 0;
    e[4] << 0, 0, 0, 0, 0, 1 / s2, 0, 1 / s2, 0;
    return e;
  }();
  return basis;
}

// Gradient of det on the traceless symmetric space: the traceless part of the
// adjugate.
Eigen::Matrix3d det_gradient(const Eigen::Matrix3d& a) {
  Eigen::Matrix3d adj;
  adj(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  adj(0, 1) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  adj(0, 2) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  adj(1, 0) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  adj(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  adj(1, 2) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  adj(2, 0) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  adj(2, 1) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  adj(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Eigen::Matrix3d sym = 0.5 * (adj + adj.transpose());
  return sym - (sym.trace() / 3.0) * Eigen::Matrix3d::Identity();
}

}  // namespace

Eigen::Matrix3d CartanPolynomial::to_matrix(const Vec5& x) {
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
  const auto& e = cartan_basis();
  for (int i = 0; i < 5; ++i) a += x[i] * e[i];
  return a;
}

Vec5 CartanPolynomial::from_matrix(const Eigen::Matrix3d& a) {
  Vec5 x;
  const auto& e = cartan_basis();
  for (int i = 0; i < 5; ++i) x[i] = (a * e[i]).trace();
  return x;
}

CartanPolynomial::CartanPolynomial() {
  // Calibrate c0 so that |DF|^2 = 9 on the unit sphere; the residual over a
  // deterministic sample must vanish to working precision.
  Rng rng(0x5eedc0de);
  double mean = 0.0;
  const int trials = 64;
  std::vector<double> grads(trials);
  for (int t = 0; t < trials; ++t) {
    Vec5 x = rng.unit_vector(5);
    grads[t] = from_matrix(det_gradient(to_matrix(x))).squaredNorm();
    mean += grads[t] / trials;
  }
  c0_ = std::sqrt(9.0 / mean);
  for (double g : grads)
    if (std::abs(c0_ * c0_ * g - 9.0) > 1e-10)
      throw Error("cubic normalization failed to calibrate");
}

double CartanPolynomial::operator()(const Vec5& x) const {
  return c0_ * to_matrix(x).determinant();
}

Vec5 CartanPolynomial::gradient(const Vec5& x) const {
  return c0_ * from_matrix(det_gradient(to_matrix(x)));
}

Vec5 CartanPolynomial::unit_normal(const Vec5& x) const {
  return gradient(x) / 3.0;
}

Vec5 cartan_sample(Rng& rng) {
  static const Eigen::Matrix3d a0 = [] {
    Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
    a(0, 0) = 1.0 / std::sqrt(2.0);
    a(2, 2) = -1.0 / std::sqrt(2.0);
    return a;
  }();
  const Eigen::Matrix3d q = rng.haar_so3();
  return CartanPolynomial::from_matrix(q * a0 * q.transpose());
}

CartanFrame cartan_tangent_basis(const CartanPolynomial& f, const Vec5& x) {
  if (std::abs(f(x)) >= 1e-10) throw Error("point off level set");
  CartanFrame frame;
  frame.normal = f.unit_normal(x);
  // Gram-Schmidt the coordinate directions against {x, N}.
  Eigen::Matrix<double, 5, 2> fixed;
  fixed.col(0) = x;
  fixed.col(1) = frame.normal;
  int got = 0;
  for (int i = 0; i < 5 && got < 3; ++i) {
    Vec5 v = Vec5::Unit(i);
    v -= fixed.col(0).dot(v) * fixed.col(0);
    v -= fixed.col(1).dot(v) * fixed.col(1);
    for (int t = 0; t < got; ++t) v -= frame.tangent[t].dot(v) * frame.tangent[t];
    if (v.norm() > 1e-6) frame.tangent[got++] = v / v.norm();
  }
  if (got < 3) throw Error("tangent frame construction failed");
  return frame;
}

ExactIndexCounts exact_jacobi_counts(const ExactSurface& s,
                                     const std::vector<SpectrumLine>& laplace) {
  const double shift = s.ii_norm_sq() + s.n;
  ExactIndexCounts c;
  for (const auto& line : laplace) {
    const double jac = line.eigenvalue - shift;
    if (jac < -1e-9) {
      c.index += line.multiplicity;
      (line.parity >= 0 ? c.index_even : c.index_odd) += line.multiplicity;
    } else if (std::abs(jac) <= 1e-9) {
      c.nullity += line.multiplicity;
      (line.parity >= 0 ? c.nullity_even : c.nullity_odd) += line.multiplicity;
    }
  }
  return c;
}

}  // namespace sjl
