#include "qwalk/spectral.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/exactsim.hpp"
#include "qwalk/summation.hpp"

namespace qwalk {

namespace {

void require_nondegenerate(const PhaseParams &p) {
  if (p.degenerate()) throw DegenerateCoinError();
}

// z^t for integer t. Any branch of log z gives the same integer power, so the
// principal argument is used directly.
cplx integer_power(cplx z, std::int64_t t) {
  const double td = static_cast<double>(t);
  return std::polar(std::pow(std::abs(z), td), td * std::arg(z));
}

// Fourier-space state M_k^t psi0 at each trapezoidal node k_m = -pi + 2 pi m / N.
std::vector<Spinor> evolved_nodes(const PhaseParams &p, const Spinor &alpha0, std::int64_t t,
                                  std::int64_t nodes) {
  std::vector<Spinor> out(static_cast<std::size_t>(nodes));
  for (std::int64_t m = 0; m < nodes; ++m) {
    const double k = -pi + 2.0 * pi * static_cast<double>(m) / static_cast<double>(nodes);
    const MomentumSpectrum spec = spectrum(p, k);
    const auto xi = initial_overlap(spec, alpha0);
    Spinor acc;
    for (int j = 0; j < 2; ++j) acc += (integer_power(spec.lambda[j], t) * xi[j]) * spec.vecs[j];
    out[static_cast<std::size_t>(m)] = acc;
  }
  return out;
}

// (1/N) sum_m e^{-i k_m n} psi(k_m). With k_m = -pi + 2 pi m/N the kernel is
// (-1)^n e^{-2 pi i (m n mod N)/N}; reducing m n exactly keeps the phase accurate.
Spinor invert_at(std::span<const Spinor> node_values, std::span<const cplx> twiddle,
                 std::int64_t n, std::vector<Spinor> &scratch) {
  const auto count = static_cast<std::int64_t>(node_values.size());
  scratch.resize(node_values.size());
  std::int64_t r_step = n % count;
  if (r_step < 0) r_step += count;
  std::int64_t r = 0;
  for (std::int64_t m = 0; m < count; ++m) {
    scratch[static_cast<std::size_t>(m)] =
        twiddle[static_cast<std::size_t>(r)] * node_values[static_cast<std::size_t>(m)];
    r += r_step;
    if (r >= count) r -= count;
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return cplx(sign / static_cast<double>(count)) * pairwise_sum<Spinor>(scratch);
}

std::vector<cplx> twiddles(std::int64_t nodes) {
  std::vector<cplx> w(static_cast<std::size_t>(nodes));
  for (std::int64_t r = 0; r < nodes; ++r)
    w[static_cast<std::size_t>(r)] =
        std::polar(1.0, -2.0 * pi * static_cast<double>(r) / static_cast<double>(nodes));
  return w;
}

std::int64_t checked_nodes(std::int64_t t, std::optional<std::int64_t> nodes) {
  if (t < 0) throw DomainError("reconstruction: negative time");
  const std::int64_t n_nodes = nodes.value_or(default_nodes(t));
  if (n_nodes < minimum_nodes(t)) {
    std::ostringstream os;
    os << "quadrature needs at least " << minimum_nodes(t) << " nodes for t = " << t
       << " (got " << n_nodes << ")";
    throw DomainError(os.str());
  }
  return n_nodes;
}

}  // namespace

MomentumOperator momentum_operator(const PhaseParams &p, double k) {
  const StepMatrices sm = step_matrices(p);
  const cplx e = std::polar(1.0, k);
  return {k, e * sm.plus + std::conj(e) * sm.minus};
}

cplx branch_root(const PhaseParams &p, double k) {
  require_nondegenerate(p);
  const double sd = std::sin(p.half_angle());
  const double cd = std::cos(p.half_angle());
  const double sk = std::sin(k);
  return p.b() * (std::sqrt(sd * sd + cd * cd * sk * sk) / std::abs(sd));
}

MomentumSpectrum spectrum(const PhaseParams &p, double k) {
  const cplx s = branch_root(p, k);
  const cplx a = p.a();
  const cplx b = p.b();

  // -ia sin k +/- s. The two values multiply to -b^2, so the smaller one is
  // recovered from the larger without cancellation.
  const cplx x = -I * a * std::sin(k);
  cplx u_plus = x + s;
  cplx u_minus = x - s;
  if (std::abs(u_plus) >= std::abs(u_minus))
    u_minus = -b * b / u_plus;
  else
    u_plus = -b * b / u_minus;

  MomentumSpectrum out;
  out.k = k;
  out.lambda = {0.5 * (a * std::cos(k) + s), 0.5 * (a * std::cos(k) - s)};
  const cplx lower = b * std::polar(1.0, k);
  const std::array<cplx, 2> u{u_plus, u_minus};
  for (int j = 0; j < 2; ++j) {
    const double nj = 1.0 / std::hypot(std::abs(u[j]), std::abs(lower));
    out.normalizers[j] = nj;
    out.vecs[j] = Spinor{nj * u[j], nj * lower};
  }
  out.near_degenerate = std::abs(out.lambda[0] - out.lambda[1]) <= 1e-8;
  return out;
}

EigenvalueJet eigenvalue_jet(const PhaseParams &p, double k, Branch j) {
  const cplx s = branch_root(p, k);
  const cplx a = p.a();
  const cplx a2 = a * a;
  const double sk = std::sin(k);
  const double ck = std::cos(k);
  const double sgn = sign(j);
  // s^2 = b^2 - a^2 sin^2 k
  const cplx s1 = -a2 * sk * ck / s;
  const cplx s2 = -a2 * std::cos(2.0 * k) / s - (a2 * sk * ck) * (a2 * sk * ck) / (s * s * s);
  return {0.5 * (a * ck + sgn * s), 0.5 * (-a * sk + sgn * s1), 0.5 * (-a * ck + sgn * s2)};
}

std::array<cplx, 2> initial_overlap(const MomentumSpectrum &spec, const Spinor &alpha0) {
  return {inner(spec.vecs[0], alpha0), inner(spec.vecs[1], alpha0)};
}

std::array<cplx, 2> initial_overlap(const PhaseParams &p, double k, const Spinor &alpha0) {
  return initial_overlap(spectrum(p, k), alpha0);
}

std::int64_t minimum_nodes(std::int64_t t) { return 2 * t + 4; }

std::int64_t default_nodes(std::int64_t t) { return std::max<std::int64_t>(4 * t + 8, 256); }

Spinor reconstruct_amplitudes(const PhaseParams &p, const Spinor &alpha0, std::int64_t t,
                              std::int64_t n, std::optional<std::int64_t> nodes) {
  require_nondegenerate(p);
  const std::int64_t n_nodes = checked_nodes(t, nodes);
  if (n < -t || n > t) {
    std::ostringstream os;
    os << "reconstruction: site n = " << n << " outside [-" << t << ", " << t << "]";
    throw DomainError(os.str());
  }
  const auto values = evolved_nodes(p, alpha0, t, n_nodes);
  const auto w = twiddles(n_nodes);
  std::vector<Spinor> scratch;
  return invert_at(values, w, n, scratch);
}

std::vector<Spinor> reconstruct_all(const PhaseParams &p, const Spinor &alpha0, std::int64_t t,
                                    std::optional<std::int64_t> nodes) {
  require_nondegenerate(p);
  const std::int64_t n_nodes = checked_nodes(t, nodes);
  const auto values = evolved_nodes(p, alpha0, t, n_nodes);
  const auto w = twiddles(n_nodes);
  std::vector<Spinor> out(static_cast<std::size_t>(2 * t + 1));
  std::vector<Spinor> scratch;
  for (std::int64_t n = -t; n <= t; ++n)
    out[static_cast<std::size_t>(n + t)] = invert_at(values, w, n, scratch);
  return out;
}

}  // namespace qwalk
