#ifndef QWALK_ASYMPTOTICS_HPP
#define QWALK_ASYMPTOTICS_HPP

#include <cstdint>
#include <vector>

#include "qwalk/params.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// Stationary point of f_j(k) = log lambda_j(k) - i gamma k.
///
/// Solves sin(theta) = +/- tan(pi (tau1 - tau2)/2) gamma / sqrt(1 - gamma^2)
/// (+ for Branch::plus). A real solution exists iff |gamma| <= |a|/2; outside
/// the support `inside_support` is false and the remaining fields are NaN.
struct SaddleData {
  double gamma = 0.0;
  Branch j = Branch::plus;
  double theta = 0.0;
  cplx f_at_theta;
  cplx f2_at_theta;
  bool inside_support = false;
};

/// Throws DegenerateCoinError for b = 0 and DomainError for |gamma| >= 1.
SaddleData saddle_point(const PhaseParams &p, double gamma, Branch j);

/// The companion stationary point pi - theta, wrapped into [-pi, pi]. It has
/// the same sin, hence the same eigenvector numerator, and f'' of opposite sign.
double companion_saddle(double theta);

/// f_j and f_j'' at an arbitrary real k (used for the companion saddle).
struct PhaseJet {
  cplx f;
  cplx f2;
};
PhaseJet phase_jet(const PhaseParams &p, double gamma, double k, Branch j);

struct AsymptoticOptions {
  /// Sum the pi - theta_j stationary points as well. Off gives the
  /// single-saddle closed form: theta_j only, and no e^{+/- i pi/4}
  /// stationary-phase rotation.
  bool two_saddle = true;
  /// Relative distance from the support edge below which the quadratic saddle
  /// approximation is not used (caustic, f'' -> 0).
  double margin = 0.01;
};

struct AsymptoticAmplitudes {
  std::int64_t n = 0;
  std::int64_t t = 0;
  cplx alpha_left;
  cplx alpha_right;
  /// Inside the support and away from the caustic; otherwise amplitudes are zero.
  bool valid = false;
  /// |n/t| > |a|/2: exponentially small region.
  bool decay = false;

  double probability() const { return std::norm(alpha_left) + std::norm(alpha_right); }
};

/// Leading-order saddle-point amplitudes at (t, n).
///
/// Each stationary point k* of branch j contributes
///   (1/2 pi) xi_j(k*) |lambda_j(k*)> lambda_j(k*)^t e^{-i n k*}
///     * sqrt(2 pi / (t |f_j''(k*)|)) * e^{i (pi/4) sgn Im f_j''(k*)}.
/// Throws DegenerateCoinError for b = 0, DomainError for t < 1 or
/// |n/t| >= 1 - 1e-9.
AsymptoticAmplitudes asymptotic_amplitudes(const PhaseParams &p, const Spinor &alpha0,
                                           std::int64_t t, std::int64_t n,
                                           const AsymptoticOptions &opts = {});

double asymptotic_probability(const PhaseParams &p, const Spinor &alpha0, std::int64_t t,
                              std::int64_t n, const AsymptoticOptions &opts = {});

}  // namespace qwalk

#endif  // QWALK_ASYMPTOTICS_HPP
