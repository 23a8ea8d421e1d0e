#ifndef QWALK_PARAMS_HPP
#define QWALK_PARAMS_HPP

#include "qwalk/types.hpp"

namespace qwalk {

/// |tau1 - tau2| below this is treated as the identity-like coin with b = 0.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// Phase parameters of the coin C = H T H with T = diag(e^{i pi tau1}, e^{i pi tau2}).
///
/// Stores the derived constants a = e^{i pi tau1} + e^{i pi tau2} and
/// b = e^{i pi tau1} - e^{i pi tau2}. They are evaluated in product form
/// (a = 2 e^{i pi s} cos(pi d), b = 2i e^{i pi s} sin(pi d), s and d the half
/// sum and half difference) so that b keeps full relative precision when the
/// two phases are close.
class PhaseParams {
 public:
  double tau1() const { return tau1_; }
  double tau2() const { return tau2_; }
  cplx a() const { return a_; }
  cplx b() const { return b_; }
  bool degenerate() const { return degenerate_; }

  /// Half the phase difference times pi, pi (tau1 - tau2) / 2.
  double half_angle() const { return pi * (tau1_ - tau2_) / 2.0; }

  /// |a|/2 = |cos(pi (tau1 - tau2)/2)|, the half-width of the limit support.
  double half_width() const;

  /// tan(pi (tau1 - tau2)/2); equals -i b/a.
  double tan_half_angle() const;

  friend PhaseParams make_params(double tau1, double tau2);

 private:
  PhaseParams() = default;

  double tau1_ = 0.0;
  double tau2_ = 0.0;
  cplx a_{2.0, 0.0};
  cplx b_{};
  bool degenerate_ = true;
};

/// Validates tau1, tau2 in [0, 1] and derives a, b. Throws DomainError naming
/// the offending parameter otherwise.
PhaseParams make_params(double tau1, double tau2);

/// The coin (1/2)[[a, b], [b, a]].
struct CoinMatrix {
  Mat2 entries;
};

CoinMatrix coin_matrix(const PhaseParams &p);

}  // namespace qwalk

#endif  // QWALK_PARAMS_HPP
