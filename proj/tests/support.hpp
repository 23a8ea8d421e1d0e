#ifndef QWALK_TESTS_SUPPORT_HPP
#define QWALK_TESTS_SUPPORT_HPP

// Test-only oracles. Nothing here calls into the code paths it is used to check.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qwalk/params.hpp"
#include "qwalk/types.hpp"

namespace qwalk::test {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// Equal superposition with real relative phase; satisfies the symmetry
/// assumption of the limit density for every (tau1, tau2).
inline Spinor symmetric_initial() { return {kInvSqrt2, kInvSqrt2}; }

/// The (1, i)/sqrt 2 superposition.
inline Spinor imaginary_initial() { return {kInvSqrt2, cplx(0.0, kInvSqrt2)}; }

/// H * diag(e^{i pi tau1}, e^{i pi tau2}) * H, multiplied out entry by entry.
inline Mat2 hadamard_phase_hadamard(double tau1, double tau2) {
  const double h = kInvSqrt2;
  const Mat2 hd{h, h, h, -h};
  const Mat2 t{std::polar(1.0, pi * tau1), 0.0, 0.0, std::polar(1.0, pi * tau2)};
  return hd * t * hd;
}

inline double unitarity_defect(const Mat2 &m) { return (m * m.adjoint() - Mat2::identity()).max_abs(); }

inline Mat2 outer(const Spinor &x, const Spinor &y) {
  return {x.left * std::conj(y.left), x.left * std::conj(y.right), x.right * std::conj(y.left),
          x.right * std::conj(y.right)};
}

/// Dense U = S (C x I) on sites [-L, L], applied t times to a state at n = 0.
/// Basis index 2 (n + L) + d, d = 0 for left. Valid while t <= L.
inline std::vector<cplx> dense_evolution(double tau1, double tau2, Spinor alpha0, int L, int t) {
  const int sites = 2 * L + 1;
  const int dim = 2 * sites;
  const Mat2 c = hadamard_phase_hadamard(tau1, tau2);
  std::vector<cplx> u(static_cast<std::size_t>(dim * dim));
  auto at = [&](int row, int col) -> cplx & { return u[static_cast<std::size_t>(row * dim + col)]; };
  // S |left, n> = |left, n-1>, S |right, n> = |right, n+1>.
  for (int i = 0; i < sites; ++i) {
    const cplx cm[2][2] = {{c.m00, c.m01}, {c.m10, c.m11}};
    for (int d_in = 0; d_in < 2; ++d_in)
      for (int d_out = 0; d_out < 2; ++d_out) {
        const int target = d_out == 0 ? i - 1 : i + 1;
        if (target < 0 || target >= sites) continue;
        at(2 * target + d_out, 2 * i + d_in) += cm[d_out][d_in];
      }
  }
  std::vector<cplx> psi(static_cast<std::size_t>(dim));
  psi[static_cast<std::size_t>(2 * L)] = alpha0.left;
  psi[static_cast<std::size_t>(2 * L + 1)] = alpha0.right;
  for (int s = 0; s < t; ++s) {
    std::vector<cplx> next(static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r)
      for (int col = 0; col < dim; ++col) next[static_cast<std::size_t>(r)] += at(r, col) * psi[static_cast<std::size_t>(col)];
    psi = std::move(next);
  }
  return psi;
}

/// Closed-form CDF of the limit density: with y = c sin u,
///   F(y) = 1/2 + atan(|sin d| tan u) / pi,  d = pi (tau1 - tau2)/2.
inline double closed_form_cdf(double tau1, double tau2, double y) {
  const double d = pi * (tau1 - tau2) / 2.0;
  const double c = std::abs(std::cos(d));
  if (y <= -c) return 0.0;
  if (y >= c) return 1.0;
  const double u = std::asin(y / c);
  return 0.5 + std::atan(std::abs(std::sin(d)) * std::tan(u)) / pi;
}

/// Random non-degenerate phase pair with |tau1 - tau2| >= gap.
inline std::pair<double, double> random_taus(std::mt19937_64 &rng, double gap = 0.02) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (true) {
    const double t1 = u(rng);
    const double t2 = u(rng);
    if (std::abs(t1 - t2) >= gap) return {t1, t2};
  }
}

inline Spinor random_unit_spinor(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  Spinor v{{g(rng), g(rng)}, {g(rng), g(rng)}};
  return cplx(1.0 / std::sqrt(v.norm2())) * v;
}

}  // namespace qwalk::test

#endif  // QWALK_TESTS_SUPPORT_HPP
