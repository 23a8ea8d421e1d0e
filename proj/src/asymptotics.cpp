#include "qwalk/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_gamma(double gamma, double limit) {
  if (!(std::abs(gamma) < limit)) {
    std::ostringstream os;
    os.precision(17);
    os << "velocity ratio gamma = " << gamma << " must satisfy |gamma| < " << limit;
    throw DomainError(os.str());
  }
}

}  // namespace

PhaseJet phase_jet(const PhaseParams &p, double gamma, double k, Branch j) {
  const EigenvalueJet lam = eigenvalue_jet(p, k, j);
  const cplx ratio = lam.d1 / lam.value;
  return {std::log(lam.value) - I * gamma * k, lam.d2 / lam.value - ratio * ratio};
}

SaddleData saddle_point(const PhaseParams &p, double gamma, Branch j) {
  if (p.degenerate()) throw DegenerateCoinError();
  check_gamma(gamma, 1.0);

  SaddleData out;
  out.gamma = gamma;
  out.j = j;
  const double sin_theta = sign(j) * p.tan_half_angle() * gamma / std::sqrt(1.0 - gamma * gamma);
  out.inside_support = std::abs(sin_theta) <= 1.0;
  if (!out.inside_support) {
    out.theta = kNaN;
    out.f_at_theta = {kNaN, kNaN};
    out.f2_at_theta = {kNaN, kNaN};
    return out;
  }
  out.theta = std::asin(sin_theta);
  const PhaseJet jet = phase_jet(p, gamma, out.theta, j);
  out.f_at_theta = jet.f;
  out.f2_at_theta = jet.f2;
  return out;
}

double companion_saddle(double theta) { return theta >= 0.0 ? pi - theta : -pi - theta; }

AsymptoticAmplitudes asymptotic_amplitudes(const PhaseParams &p, const Spinor &alpha0,
                                           std::int64_t t, std::int64_t n,
                                           const AsymptoticOptions &opts) {
  if (p.degenerate()) throw DegenerateCoinError();
  if (t < 1) throw DomainError("asymptotic amplitudes need t >= 1");
  const double gamma = static_cast<double>(n) / static_cast<double>(t);
  check_gamma(gamma, 1.0 - 1e-9);

  AsymptoticAmplitudes out;
  out.n = n;
  out.t = t;
  const double edge = p.half_width();
  out.decay = std::abs(gamma) > edge;
  if (std::abs(gamma) > edge * (1.0 - opts.margin)) return out;

  const double td = static_cast<double>(t);
  Spinor total;
  for (Branch j : {Branch::plus, Branch::minus}) {
    const SaddleData sd = saddle_point(p, gamma, j);
    if (!sd.inside_support) return out;

    std::vector<double> points{sd.theta};
    if (opts.two_saddle) points.push_back(companion_saddle(sd.theta));

    for (double k : points) {
      const MomentumSpectrum spec = spectrum(p, k);
      const cplx lam = spec.eigenvalue(j);
      const cplx xi = inner(spec.eigenvector(j), alpha0);
      const cplx f2 = phase_jet(p, gamma, k, j).f2;

      // lambda^t e^{-ink}: |lambda| = 1 on the real contour, so only the
      // argument is accumulated. t arg(lambda) - n k is formed in one step.
      const cplx oscillation = std::polar(std::pow(std::abs(lam), td),
                                          td * std::arg(lam) - static_cast<double>(n) * k);
      cplx weight = std::sqrt(2.0 * pi / (td * std::abs(f2))) / (2.0 * pi) * oscillation;
      if (opts.two_saddle) weight *= std::polar(1.0, (f2.imag() >= 0.0 ? 0.25 : -0.25) * pi);
      total += (weight * xi) * spec.eigenvector(j);
    }
  }
  if (!std::isfinite(total.norm2())) return out;
  out.alpha_left = total.left;
  out.alpha_right = total.right;
  out.valid = true;
  return out;
}

double asymptotic_probability(const PhaseParams &p, const Spinor &alpha0, std::int64_t t,
                              std::int64_t n, const AsymptoticOptions &opts) {
  return asymptotic_amplitudes(p, alpha0, t, n, opts).probability();
}

}  // namespace qwalk
