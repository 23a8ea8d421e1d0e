#include "qwalk/exactsim.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/summation.hpp"

namespace qwalk {

StepMatrices step_matrices(const PhaseParams &p) {
  const cplx ha = 0.5 * p.a();
  const cplx hb = 0.5 * p.b();
  return {Mat2{0.0, 0.0, hb, ha}, Mat2{ha, hb, 0.0, 0.0}};
}

Spinor WalkState::at(std::int64_t n) const {
  if (n < -t_ || n > t_) return {};
  return amps_[static_cast<std::size_t>(n + t_)];
}

WalkState initial_state(cplx alpha_left, cplx alpha_right) {
  const double norm2 = std::norm(alpha_left) + std::norm(alpha_right);
  if (std::abs(norm2 - 1.0) > 1e-10) {
    std::ostringstream os;
    os.precision(17);
    os << "initial state is not normalized: |alpha_left|^2 + |alpha_right|^2 = " << norm2;
    throw DomainError(os.str());
  }
  return WalkState(0, {Spinor{alpha_left, alpha_right}});
}

WalkState step(const WalkState &s, const PhaseParams &p) {
  const std::int64_t t = s.t_;
  const std::int64_t t1 = t + 1;
  const cplx ha = 0.5 * p.a();
  const cplx hb = 0.5 * p.b();

  std::vector<Spinor> next(static_cast<std::size_t>(2 * t1 + 1));
  // Only sites with n + t1 even can be reached; the rest stay zero.
  for (std::int64_t n = -t1; n <= t1; n += 2) {
    const Spinor from_left = s.at(n - 1);   // moves right
    const Spinor from_right = s.at(n + 1);  // moves left
    Spinor &out = next[static_cast<std::size_t>(n + t1)];
    out.left = ha * from_right.left + hb * from_right.right;
    out.right = hb * from_left.left + ha * from_left.right;
  }
  return WalkState(t1, std::move(next));
}

WalkState evolve(WalkState s, const PhaseParams &p, std::int64_t steps) {
  if (steps < 0) throw DomainError("evolve: negative step count");
  for (std::int64_t i = 0; i < steps; ++i) s = step(s, p);
  return s;
}

double Distribution::at(std::int64_t n) const {
  if (n < -t_ || n > t_) return 0.0;
  return probs_[static_cast<std::size_t>(n + t_)];
}

double Distribution::total() const { return pairwise_sum<double>(probs_); }

Distribution probability(const WalkState &s) {
  std::vector<double> probs;
  probs.reserve(s.amplitudes().size());
  for (const Spinor &v : s.amplitudes()) probs.push_back(v.norm2());
  return Distribution(s.time(), std::move(probs));
}

Moments moments(const Distribution &d) {
  const auto probs = d.values();
  std::vector<double> first(probs.size());
  std::vector<double> second(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double n = static_cast<double>(static_cast<std::int64_t>(i) - d.time());
    first[i] = n * probs[i];
    second[i] = n * n * probs[i];
  }
  const double mean = pairwise_sum<double>(first);
  const double m2 = pairwise_sum<double>(second);
  return {mean, m2 - mean * mean};
}

Moments moments(const WalkState &s) { return moments(probability(s)); }

}  // namespace qwalk
