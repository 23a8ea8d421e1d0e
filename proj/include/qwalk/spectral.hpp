#ifndef QWALK_SPECTRAL_HPP
#define QWALK_SPECTRAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qwalk/params.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// M_k = e^{ik} M_+ + e^{-ik} M_- = (1/2)[[a e^{-ik}, b e^{-ik}], [b e^{ik}, a e^{ik}]].
struct MomentumOperator {
  double k = 0.0;
  Mat2 entries;
};

MomentumOperator momentum_operator(const PhaseParams &p, double k);

/// Branch of sqrt(b^2 - a^2 sin^2 k) used throughout:
///   s(k) = b * sqrt(1 + cot^2(pi (tau1 - tau2)/2) sin^2 k).
/// The radicand is real and >= 1, so s is analytic in k, never vanishes for a
/// non-degenerate coin, and s(0) = b. Branch::plus pairs with +s.
cplx branch_root(const PhaseParams &p, double k);

/// Eigen-decomposition of M_k.
///
/// lambda[j] = (a cos k +/- s)/2 and vecs[j] = N_j (-ia sin k +/- s, b e^{ik}),
/// index 0 for Branch::plus. `near_degenerate` is set when |lambda_1 - lambda_2|
/// <= 1e-8, where orthonormality holds to a reduced tolerance only.
struct MomentumSpectrum {
  double k = 0.0;
  std::array<cplx, 2> lambda{};
  std::array<Spinor, 2> vecs{};
  std::array<double, 2> normalizers{};
  bool near_degenerate = false;

  cplx eigenvalue(Branch j) const { return lambda[index(j)]; }
  const Spinor &eigenvector(Branch j) const { return vecs[index(j)]; }
};

/// Throws DegenerateCoinError when b = 0.
MomentumSpectrum spectrum(const PhaseParams &p, double k);

/// lambda_j(k) with its first two k-derivatives, on the same branch as spectrum().
struct EigenvalueJet {
  cplx value;
  cplx d1;
  cplx d2;
};

EigenvalueJet eigenvalue_jet(const PhaseParams &p, double k, Branch j);

/// xi_j = <lambda_j(k)|alpha0>, index 0 for Branch::plus.
std::array<cplx, 2> initial_overlap(const PhaseParams &p, double k, const Spinor &alpha0);
std::array<cplx, 2> initial_overlap(const MomentumSpectrum &spec, const Spinor &alpha0);

/// The Fourier-space integrand at time t is a trigonometric polynomial of
/// degree <= t; with the e^{-ikn} kernel the degree is <= 2t. The periodic
/// trapezoidal rule with this many nodes or more integrates it exactly.
std::int64_t minimum_nodes(std::int64_t t);
std::int64_t default_nodes(std::int64_t t);

/// Real-space amplitude at (t, n) from the inverse Fourier integrals, evaluated
/// with the periodic trapezoidal rule on `nodes` points (default_nodes(t) when
/// unset). Throws DomainError if nodes < minimum_nodes(t) or |n| > t.
Spinor reconstruct_amplitudes(const PhaseParams &p, const Spinor &alpha0, std::int64_t t,
                              std::int64_t n, std::optional<std::int64_t> nodes = {});

/// All sites at once; index i holds n = i - t. Shares the node evaluations.
std::vector<Spinor> reconstruct_all(const PhaseParams &p, const Spinor &alpha0, std::int64_t t,
                                    std::optional<std::int64_t> nodes = {});

}  // namespace qwalk

#endif  // QWALK_SPECTRAL_HPP
