#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace sjl {

using Vec4 = Eigen::Vector4d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using VecX = Eigen::VectorXd;
using Mat4 = Eigen::Matrix4d;
using MatX = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using Tri = std::array<int, 3>;

/// Error with a short machine-matchable reason string.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kPi = 3.14159265358979323846;

/// Half-integer index, stored as twice its value so grid arithmetic is exact.
struct HalfInt {
  int twice = 0;

  static HalfInt of_twice(int t) { return HalfInt{t}; }
  static HalfInt whole(int n) { return HalfInt{2 * n}; }
  static HalfInt half_plus(int n) { return HalfInt{2 * n + 1}; }

  double value() const { return 0.5 * twice; }
  bool is_integer() const { return twice % 2 == 0; }
  HalfInt operator+(int n) const { return HalfInt{twice + 2 * n}; }
  HalfInt operator-(int n) const { return HalfInt{twice - 2 * n}; }
  bool operator==(const HalfInt&) const = default;
};

}  // namespace sjl
