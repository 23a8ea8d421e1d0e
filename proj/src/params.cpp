#include "qwalk/params.hpp"

#include <cmath>
#include <sstream>

namespace qwalk {

namespace {

void check_unit_interval(const char *name, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << tau << " is outside [0, 1]";
    throw DomainError(os.str());
  }
}

}  // namespace

double PhaseParams::half_width() const { return std::abs(std::cos(half_angle())); }

double PhaseParams::tan_half_angle() const { return std::tan(half_angle()); }

PhaseParams make_params(double tau1, double tau2) {
  check_unit_interval("tau1", tau1);
  check_unit_interval("tau2", tau2);

  PhaseParams p;
  p.tau1_ = tau1;
  p.tau2_ = tau2;
  p.degenerate_ = std::abs(tau1 - tau2) < kDegeneracyThreshold;

  const cplx mean_phase = std::polar(1.0, pi * (tau1 + tau2) / 2.0);
  const double d = pi * (tau1 - tau2) / 2.0;
  p.a_ = 2.0 * std::cos(d) * mean_phase;
  p.b_ = p.degenerate_ ? cplx{} : 2.0 * I * std::sin(d) * mean_phase;
  return p;
}

CoinMatrix coin_matrix(const PhaseParams &p) {
  const cplx ha = 0.5 * p.a();
  const cplx hb = 0.5 * p.b();
  return {Mat2{ha, hb, hb, ha}};
}

}  // namespace qwalk
