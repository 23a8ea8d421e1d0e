#include "qwalk/weaklimit.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

constexpr double kPanelTolerance = 1e-10;
constexpr unsigned kMaxDepth = 15;
// Below this width GK nodes start to coincide in floating point; Simpson is
// exact to ~width^5 there.
constexpr double kNarrowPanel = 1e-5;

void require_nondegenerate(const PhaseParams &p) {
  if (p.degenerate()) throw DegenerateCoinError();
}

// Density in the angle u, y = c sin u:  f(y) dy = w / (pi (1 - c^2 sin^2 u)) du,
// with c = |a|/2 and w = |b|/2. Smooth and bounded on [-pi/2, pi/2].
double substituted_integral(const PhaseParams &p, double u_lo, double u_hi) {
  if (u_hi <= u_lo) return 0.0;
  const double c = p.half_width();
  const double w = std::abs(std::sin(p.half_angle()));
  auto integrand = [c, w](double u) {
    const double su = std::sin(u);
    return w / (pi * (1.0 - c * c * su * su));
  };
  const double width = u_hi - u_lo;
  if (width < kNarrowPanel)
    return width / 6.0 * (integrand(u_lo) + 4.0 * integrand(0.5 * (u_lo + u_hi)) + integrand(u_hi));
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, u_lo, u_hi,
                                                                       kMaxDepth, kPanelTolerance);
}

}  // namespace

double velocity_map(const PhaseParams &p, double k, int j) {
  require_nondegenerate(p);
  if (j != 1 && j != 2) throw DomainError("velocity_map: branch label must be 1 or 2");
  const double sk = std::sin(k);
  const double tn = p.tan_half_angle();
  const double v = sk / std::sqrt(sk * sk + tn * tn);
  return j == 1 ? -v : v;
}

double branch_velocity(const PhaseParams &p, double k, Branch j) {
  const EigenvalueJet lam = eigenvalue_jet(p, k, j);
  return (lam.d1 / lam.value).imag();
}

SupportInterval support_interval(const PhaseParams &p) {
  const double c = p.half_width();
  return {-c, c};
}

double limit_density(const PhaseParams &p, double y) {
  require_nondegenerate(p);
  const double c = p.half_width();
  if (!(std::abs(y) < c)) return 0.0;
  const double half_b = std::abs(p.b()) / 2.0;
  return half_b / (pi * (1.0 - y * y) * std::sqrt(c * c - y * y));
}

double limit_cdf(const PhaseParams &p, double y) {
  require_nondegenerate(p);
  const double c = p.half_width();
  if (y <= -c) return 0.0;
  if (y >= c) return 1.0;
  const double u = std::asin(std::clamp(y / c, -1.0, 1.0));
  // Integrate over the shorter side; the two halves are mirror images.
  if (u <= 0.0) return std::clamp(substituted_integral(p, -pi / 2, u), 0.0, 1.0);
  return std::clamp(1.0 - substituted_integral(p, u, pi / 2), 0.0, 1.0);
}

double density_integral(const PhaseParams &p) {
  require_nondegenerate(p);
  return substituted_integral(p, -pi / 2, pi / 2);
}

LimitLaw::LimitLaw(const PhaseParams &p) : p_(p), half_width_(p.half_width()) {
  require_nondegenerate(p);
}

bool satisfies_symmetry_assumption(const PhaseParams &p, const Spinor &alpha0, double tol) {
  const double half = 0.5;
  if (std::abs(std::norm(alpha0.left) - half) > tol) return false;
  if (std::abs(std::norm(alpha0.right) - half) > tol) return false;
  const double cross = (alpha0.left * std::conj(alpha0.right)).imag();
  return std::abs(cross * std::sin(pi * (p.tau1() - p.tau2()))) <= tol;
}

double ks_distance(const Distribution &d, const PhaseParams &p) {
  require_nondegenerate(p);
  const std::int64_t t = d.time();
  if (t < 1) throw DomainError("ks_distance needs t >= 1");
  const auto probs = d.values();
  double cumulative = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] == 0.0) continue;
    const double y = static_cast<double>(static_cast<std::int64_t>(i) - t) / static_cast<double>(t);
    const double f = limit_cdf(p, y);
    worst = std::max(worst, std::abs(cumulative - f));
    cumulative += probs[i];
    worst = std::max(worst, std::abs(cumulative - f));
  }
  return worst;
}

double ks_distance(const PhaseParams &p, const Spinor &alpha0, std::int64_t t) {
  require_nondegenerate(p);
  return ks_distance(probability(evolve(initial_state(alpha0), p, t)), p);
}

std::vector<double> sample_limit_velocity(const PhaseParams &p, const Spinor &alpha0,
                                          std::size_t samples, std::uint64_t seed) {
  require_nondegenerate(p);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> momentum(-pi, pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double k = momentum(rng);
    const auto xi = initial_overlap(p, k, alpha0);
    const double w_plus = std::norm(xi[0]) / (std::norm(xi[0]) + std::norm(xi[1]));
    const Branch j = unit(rng) < w_plus ? Branch::plus : Branch::minus;
    out.push_back(branch_velocity(p, k, j));
  }
  return out;
}

double pushforward_ks(const PhaseParams &p, const Spinor &alpha0, std::size_t samples,
                      std::uint64_t seed) {
  auto xs = sample_limit_velocity(p, alpha0, samples, seed);
  std::sort(xs.begin(), xs.end());
  const double count = static_cast<double>(xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = limit_cdf(p, xs[i]);
    const double below = static_cast<double>(i) / count;
    const double above = static_cast<double>(i + 1) / count;
    worst = std::max({worst, above - f, f - below});
  }
  return worst;
}

}  // namespace qwalk
