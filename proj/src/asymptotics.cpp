#include "sixv/asymptotics.hpp"

#include <stdexcept>

#include "sixv/izergin.hpp"
#include "sixv/meixner.hpp"
#include "sixv/orthopoly.hpp"

namespace sixv {

AsymptoticConstants constants(const FerroParams& p) {
  AsymptoticConstants c;
  c.C = 1 - exp(p.gamma * (-4));
  c.G = exp(p.gamma - p.t);
  c.F = sinh(p.t + p.gamma);
  return c;
}

ExtReal c_hat(const FerroParams& p, int n) {
  if (n < 1) throw std::domain_error("c_hat: n must be >= 1");
  AsymptoticConstants c = constants(p);
  return partition_izergin(p, n) / (pow(c.G, static_cast<long>(n)) * pow(c.F, static_cast<long>(n) * n));
}

std::pair<ExtReal, ExtReal> toda_residuals(const FerroParams& p, int n, const ExtReal& step) {
  if (n < 2) throw std::domain_error("toda_residuals: n must be >= 2");
  if (step.sign() <= 0) throw std::domain_error("toda_residuals: step must be positive");
  const mpfr_prec_t prec = p.t.precision();
  // the second difference loses ~2 log2(1/step) mantissa bits; guard the floor
  if (ExtReal::pow2(-(prec / 2), prec) > step)
    throw precision_error("toda_residuals: step too small for working precision");

  FerroParams pp = FerroParams::create(p.t + step, p.gamma);
  FerroParams pm = FerroParams::create(p.t - step, p.gamma);
  ExtReal tp = tau_n(pp, n), tm = tau_n(pm, n), t0 = tau_n(p, n);
  ExtReal d1 = (tp - tm) / (step * 2);
  ExtReal d2 = (tp - t0 * 2 + tm) / (step * step);
  ExtReal rhs = tau_n(p, n + 1) * tau_n(p, n - 1);
  ExtReal r1 = abs(t0 * d2 - d1 * d1 - rhs) / abs(rhs);

  ExtReal lt = (log(tp) - log(t0) * 2 + log(tm)) / (step * step);
  OPSystem sys = build(p, n);
  ExtReal hr = sys.h[n] / sys.h[n - 1] * 4;
  ExtReal r2 = abs(lt - hr) / abs(hr);
  return {r1, r2};
}

GroundStateConstants ground_state_constants(const FerroParams& p) {
  GroundStateConstants g;
  g.G0 = sinh(p.gamma * 2) / sinh(p.t + p.gamma);
  g.G1 = exp(p.gamma - p.t) * sinh(p.t + p.gamma) / sinh(p.gamma * 2);
  return g;
}

ExtReal ground_state_ratio(const FerroParams& p) { return ground_state_constants(p).G1; }

ExtReal F0_ferro(const LineParams& lp) {
  if (!(abs(lp.beta) >= 1)) throw std::domain_error("F0_ferro: requires |beta| >= 1 (ferroelectric side)");
  return (lp.alpha + abs(lp.beta)) / 2;
}

ExtReal g_factor(const ExtReal& t, const ExtReal& gamma) {
  const mpfr_prec_t prec = t.precision();
  ExtReal pi = ExtReal::pi(prec);
  if (!(gamma.sign() > 0) || !(gamma < t) || !(t + gamma < pi))
    throw std::domain_error("g_factor: requires 0 < gamma < t, t + gamma < pi");
  ExtReal u = t - gamma;
  ExtReal span = pi - gamma * 2;
  return pi * sin(u) / (span * sin(pi * u / span));
}

ExtReal F0_disordered(const LineParams& lp) {
  if (!(abs(lp.beta) < 1)) throw std::domain_error("F0_disordered: requires |beta| < 1 (disordered side)");
  LineParams folded{lp.alpha, abs(lp.beta)};
  auto [t, gamma] = invert_line_params(folded);
  return (lp.alpha + abs(lp.beta)) * g_factor(t, gamma) / 2;
}

ExtReal F0_on_line(const ExtReal& alpha, const ExtReal& beta) {
  LineParams lp = LineParams::create(alpha, beta);
  if (abs(beta) >= 1) return F0_ferro(lp);
  return F0_disordered(lp);
}

ExtReal delta_expansion_check(const LineParams& lp) {
  const ExtReal& a = lp.alpha;
  const ExtReal& b = lp.beta;
  ExtReal d = (a * a + b * b - 2) / (a * a - b * b);
  ExtReal lin = 1 + (b - 1) * 4 / (a * a - 1);
  ExtReal dev = b - 1;
  if (dev.is_zero()) return abs(d - lin);  // exactly zero at beta = 1
  return abs(d - lin) / (dev * dev);
}

ExtReal kappa(const ExtReal& gamma) {
  const mpfr_prec_t prec = gamma.precision();
  ExtReal pi = ExtReal::pi(prec);
  if (!(gamma.sign() > 0) || !(gamma < pi / 2)) throw std::domain_error("kappa: requires 0 < gamma < pi/2");
  return ExtReal::from_ratio(1, 12, prec) - gamma * gamma * 2 / (pi * (pi - gamma * 2) * 3);
}

}  // namespace sixv
