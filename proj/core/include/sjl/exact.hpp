#pragma once

#include "sjl/common.hpp"
#include "sjl/rng.hpp"

namespace sjl {

// Minimal hypersurfaces of S^{n+1} with closed-form geometry: equatorial
// hyperspheres, minimal Clifford hypersurfaces
// S^k(sqrt(k/n)) x S^{n-k}(sqrt((n-k)/n)), and the cubic isoparametric
// hypersurface of S^4 realized on traceless symmetric 3x3 matrices.

enum class ExactKind { Equator, Clifford, CartanCubic };

struct ExactSurface {
  ExactKind kind;
  int n = 0;          // intrinsic dimension
  int k = 0;          // Clifford factor split (1 <= k <= n-1)
  int g_distinct = 1; // number of distinct principal curvatures

  double ii_norm_sq() const { return static_cast<double>((g_distinct - 1) * n); }
  /// Normal parity under the antipodal map: +1 even (one-sided quotient),
  /// -1 odd (two-sided quotient).
  int normal_parity_tau() const;

  static ExactSurface equator(int n);
  static ExactSurface clifford(int n, int k);
  static ExactSurface cartan_cubic();
};

/// One Laplace eigenvalue with multiplicity and antipodal parity
/// (+1 even, -1 odd, 0 mixed/unknown).
struct SpectrumLine {
  double eigenvalue;
  int multiplicity;
  int parity;
};

/// Spectrum of the (positive) Laplace-Beltrami operator on the equator S^n:
/// l(l+n-1) with spherical-harmonic multiplicities, parity (-1)^l.
/// All eigenvalues <= lambda_max, ascending.
std::vector<SpectrumLine> equator_spectrum(int n, double lambda_max);

/// Product spectrum of the minimal Clifford hypersurface (n, k):
/// a(a+k-1) n/k + b(b+n-k-1) n/(n-k), parity (-1)^{a+b}.
std::vector<SpectrumLine> clifford_spectrum(int n, int k, double lambda_max);

/// Multiplicity of degree-l spherical harmonics on S^d.
long sphere_harmonic_multiplicity(int d, int l);

/// Cubic isoparametric polynomial F = c0 * det on the 5-dimensional space of
/// traceless symmetric 3x3 matrices, identified with R^5 by a fixed
/// orthonormal basis (inner product tr(AB)). Satisfies |DF(x)|^2 = 9 |x|^4
/// and is harmonic; c0 is calibrated numerically at construction.
class CartanPolynomial {
 public:
  CartanPolynomial();

  double c0() const { return c0_; }
  double operator()(const Vec5& x) const;
  Vec5 gradient(const Vec5& x) const;  // of F as a function on R^5

  /// Unit normal N = DF(x)/3 of the minimal level set at x (|x| = 1, F(x) = 0).
  Vec5 unit_normal(const Vec5& x) const;

  static Eigen::Matrix3d to_matrix(const Vec5& x);
  static Vec5 from_matrix(const Eigen::Matrix3d& a);

 private:
  double c0_;
};

/// Point on the minimal Cartan hypersurface with the Haar-orbit law:
/// Q A0 Q^T for Haar-random Q in SO(3), A0 = diag(1, 0, -1)/sqrt(2).
Vec5 cartan_sample(Rng& rng);

struct CartanFrame {
  std::array<Vec5, 3> tangent;
  Vec5 normal;
};

/// Orthonormal tangent frame and unit normal at a surface point.
/// Throws "point off level set" if |F(x)| >= 1e-10.
CartanFrame cartan_tangent_basis(const CartanPolynomial& f, const Vec5& x);

/// Jacobi spectrum bookkeeping for closed-form surfaces: eigenvalues of
/// -Laplacian - (|II|^2 + n) derived from a Laplace spectrum.
struct ExactIndexCounts {
  int index = 0;
  int nullity = 0;
  int index_even = 0;  // antipodal-even part
  int index_odd = 0;
  int nullity_even = 0;
  int nullity_odd = 0;
};

ExactIndexCounts exact_jacobi_counts(const ExactSurface& s,
                                     const std::vector<SpectrumLine>& laplace);

}  // namespace sjl
