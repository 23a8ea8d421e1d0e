#ifndef QWALK_TYPES_HPP
#define QWALK_TYPES_HPP

#include <algorithm>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

/// Two-component amplitude (left-moving, right-moving) at one site.
struct Spinor {
  cplx left{};
  cplx right{};

  double norm2() const { return std::norm(left) + std::norm(right); }

  friend Spinor operator+(const Spinor &x, const Spinor &y) {
    return {x.left + y.left, x.right + y.right};
  }
  friend Spinor operator*(cplx c, const Spinor &x) {
    return {c * x.left, c * x.right};
  }
  Spinor &operator+=(const Spinor &o) {
    left += o.left;
    right += o.right;
    return *this;
  }
};

/// <x|y>, antilinear in the first argument.
inline cplx inner(const Spinor &x, const Spinor &y) {
  return std::conj(x.left) * y.left + std::conj(x.right) * y.right;
}

/// 2x2 complex matrix in (left, right) ordering.
struct Mat2 {
  cplx m00{}, m01{}, m10{}, m11{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Mat2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  friend Mat2 operator*(const Mat2 &x, const Mat2 &y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
  friend Mat2 operator+(const Mat2 &x, const Mat2 &y) {
    return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
  }
  friend Mat2 operator-(const Mat2 &x, const Mat2 &y) {
    return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
  }
  friend Mat2 operator*(cplx c, const Mat2 &x) {
    return {c * x.m00, c * x.m01, c * x.m10, c * x.m11};
  }
  friend Spinor operator*(const Mat2 &x, const Spinor &v) {
    return {x.m00 * v.left + x.m01 * v.right, x.m10 * v.left + x.m11 * v.right};
  }

  /// Largest entrywise modulus.
  double max_abs() const {
    return std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11)});
  }
};

/// Eigen-branch label. `plus` is j = 1 (the + sign of the square root).
enum class Branch { plus = 1, minus = 2 };

inline int index(Branch j) { return j == Branch::plus ? 0 : 1; }
inline double sign(Branch j) { return j == Branch::plus ? 1.0 : -1.0; }

/// Raised when an input violates a numeric precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by routes that need b != 0. Use the exact simulation instead,
/// where the walk is ballistic.
class DegenerateCoinError : public DomainError {
 public:
  DegenerateCoinError()
      : DomainError("degenerate coin (tau1 == tau2, b = 0): the walk is "
                    "ballistic; use the exact simulation for this case") {}
};

}  // namespace qwalk

#endif  // QWALK_TYPES_HPP
