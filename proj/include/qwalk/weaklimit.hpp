#ifndef QWALK_WEAKLIMIT_HPP
#define QWALK_WEAKLIMIT_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "qwalk/exactsim.hpp"
#include "qwalk/params.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

// Long-time law of X_t / t.
//
// For the symmetric initial states (|alpha_l| = |alpha_r| = 1/sqrt 2 and
// Im(alpha_l conj(alpha_r)) sin(pi (tau1 - tau2)) = 0) the rescaled position
// converges weakly to the density
//
//   f(y) = (|b|/2) / (pi (1 - y^2) sqrt((|a|/2)^2 - y^2)),   |y| < |a|/2.
//
// The factor (1 - y^2) is positive on the support; with (y^2 - 1) instead,
// f would be negative.

/// h(k, j) = (-1)^j sin k / sqrt(sin^2 k + tan^2(pi (tau1 - tau2)/2)), j in {1, 2}.
/// Note j here is the label of the formula, not a spectral Branch; see
/// branch_velocity() for the velocity attached to each eigen-branch.
double velocity_map(const PhaseParams &p, double k, int j);

/// Group velocity Im(lambda_j'(k) / lambda_j(k)) of spectral branch j.
double branch_velocity(const PhaseParams &p, double k, Branch j);

struct SupportInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// [-|a|/2, |a|/2].
SupportInterval support_interval(const PhaseParams &p);

/// Zero outside the open support. Throws DegenerateCoinError for b = 0.
double limit_density(const PhaseParams &p, double y);

/// P(Y <= y), by adaptive quadrature after y = (|a|/2) sin u.
/// Throws DegenerateCoinError for b = 0.
double limit_cdf(const PhaseParams &p, double y);

/// Integral of limit_density over the support (should be 1).
double density_integral(const PhaseParams &p);

class LimitLaw {
 public:
  explicit LimitLaw(const PhaseParams &p);

  const PhaseParams &params() const { return p_; }
  double half_width() const { return half_width_; }
  bool contains(double y) const { return std::abs(y) < half_width_; }
  double density(double y) const { return limit_density(p_, y); }
  double cdf(double y) const { return limit_cdf(p_, y); }

 private:
  PhaseParams p_;
  double half_width_;
};

bool satisfies_symmetry_assumption(const PhaseParams &p, const Spinor &alpha0,
                                   double tol = 1e-10);

/// sup_y |F_t(y) - F(y)| where F_t is the CDF of X_t / t built from the exact
/// probabilities (no sampling) and F is limit_cdf.
double ks_distance(const Distribution &d, const PhaseParams &p);
double ks_distance(const PhaseParams &p, const Spinor &alpha0, std::int64_t t);

/// Draws h(K, J) with K uniform on [-pi, pi] and J chosen with probability
/// |<lambda_J(K)|alpha0>|^2, i.e. the pushforward of the limit measure.
std::vector<double> sample_limit_velocity(const PhaseParams &p, const Spinor &alpha0,
                                          std::size_t samples, std::uint64_t seed);

/// One-sample KS distance of sample_limit_velocity() against limit_cdf.
double pushforward_ks(const PhaseParams &p, const Spinor &alpha0, std::size_t samples,
                      std::uint64_t seed);

}  // namespace qwalk

#endif  // QWALK_WEAKLIMIT_HPP
