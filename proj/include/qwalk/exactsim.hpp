#ifndef QWALK_EXACTSIM_HPP
#define QWALK_EXACTSIM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qwalk/params.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// Per-step transfer matrices: psi_{t+1}(n) = plus * psi_t(n-1) + minus * psi_t(n+1).
struct StepMatrices {
  Mat2 plus;   // [[0, 0], [b/2, a/2]]
  Mat2 minus;  // [[a/2, b/2], [0, 0]]
};

StepMatrices step_matrices(const PhaseParams &p);

/// State of the walk after t steps, stored densely over n in [-t, t].
///
/// Sites with n + t odd are never written and stay exactly zero.
class WalkState {
 public:
  std::int64_t time() const { return t_; }

  /// Amplitudes at site n; zero outside [-t, t].
  Spinor at(std::int64_t n) const;

  /// All amplitudes, index i holds site n = i - t.
  std::span<const Spinor> amplitudes() const { return amps_; }

  friend WalkState initial_state(cplx alpha_left, cplx alpha_right);
  friend WalkState step(const WalkState &s, const PhaseParams &p);

 private:
  WalkState(std::int64_t t, std::vector<Spinor> amps) : t_(t), amps_(std::move(amps)) {}

  std::int64_t t_ = 0;
  std::vector<Spinor> amps_;
};

/// Localized initial state at n = 0. Throws DomainError unless
/// |alpha_left|^2 + |alpha_right|^2 = 1 within 1e-10.
WalkState initial_state(cplx alpha_left, cplx alpha_right);
inline WalkState initial_state(const Spinor &alpha0) {
  return initial_state(alpha0.left, alpha0.right);
}

/// One application of S (C x I).
WalkState step(const WalkState &s, const PhaseParams &p);

WalkState evolve(WalkState s, const PhaseParams &p, std::int64_t steps);

/// Position distribution P_t(n) = |alpha_l(n)|^2 + |alpha_r(n)|^2.
class Distribution {
 public:
  Distribution(std::int64_t t, std::vector<double> probs) : t_(t), probs_(std::move(probs)) {}

  std::int64_t time() const { return t_; }
  double at(std::int64_t n) const;
  /// Index i holds site n = i - t.
  std::span<const double> values() const { return probs_; }
  double total() const;

 private:
  std::int64_t t_;
  std::vector<double> probs_;
};

Distribution probability(const WalkState &s);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

Moments moments(const WalkState &s);
Moments moments(const Distribution &d);

}  // namespace qwalk

#endif  // QWALK_EXACTSIM_HPP
