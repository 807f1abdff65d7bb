#include "sixv/weights.hpp"

#include <stdexcept>

namespace sixv {

namespace {
void require_positive(const ExtReal& x, const char* what) {
  if (!(x.sign() > 0)) throw std::domain_error(std::string(what) + " must be strictly positive");
}
}  // namespace

void SixWeights::validate() const {
  require_positive(w1, "w1");
  require_positive(w2, "w2");
  require_positive(w3, "w3");
  require_positive(w4, "w4");
  require_positive(w5, "w5");
  require_positive(w6, "w6");
}

void ABCWeights::validate() const {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
}

std::string phase_name(Phase p) {
  switch (p) {
    case Phase::Ferroelectric: return "ferroelectric";
    case Phase::AntiFerroelectric: return "anti-ferroelectric";
    case Phase::Disordered: return "disordered";
    case Phase::DeltaBoundary: return "boundary |Delta|=1";
    case Phase::FreeFermion: return "free fermion";
  }
  return "?";
}

FerroParams FerroParams::create(const ExtReal& t, const ExtReal& gamma) {
  if (!(gamma.sign() > 0) || !(gamma < t))
    throw std::domain_error("FerroParams: requires 0 < gamma < t");
  FerroParams p;
  p.t = t;
  p.gamma = gamma;
  p.q = exp((gamma - t) * 2);
  p.q0 = exp((gamma + t) * (-2));
  return p;
}

FerroParams FerroParams::ref(mpfr_prec_t prec) {
  ExtReal t = ExtReal::ln2(prec);
  return create(t, t / 2);
}

LineParams LineParams::create(const ExtReal& alpha, const ExtReal& beta) {
  if (!(alpha > 1)) throw std::domain_error("LineParams: requires alpha > 1");
  if (!(abs(beta) < alpha)) throw std::domain_error("LineParams: requires |beta| < alpha");
  return LineParams{alpha, beta};
}

ReducedWeights reduce(const SixWeights& w, int n) {
  w.validate();
  ReducedWeights r;
  r.abc.a = sqrt(w.w1 * w.w2);
  r.abc.b = sqrt(w.w3 * w.w4);
  r.abc.c = sqrt(w.w5 * w.w6);
  ExtReal half = ExtReal::from_ratio(n, 2, r.abc.a.precision());
  r.factor = pow(w.w5 / w.w6, half);
  return r;
}

ExtReal delta(const ABCWeights& w) {
  w.validate();
  return (w.a * w.a + w.b * w.b - w.c * w.c) / (w.a * w.b * 2);
}

Phase classify(const ABCWeights& w) {
  ExtReal d = delta(w);
  ExtReal tol = ExtReal::pow2(-128, d.precision());
  if (abs(d) < tol) return Phase::FreeFermion;
  ExtReal one = ExtReal::from_long(1, d.precision());
  if (abs(d - one) < tol || abs(d + one) < tol) return Phase::DeltaBoundary;
  if (d > one) return Phase::Ferroelectric;
  if (d < -one) return Phase::AntiFerroelectric;
  return Phase::Disordered;
}

ABCWeights ferro_weights(const FerroParams& p) {
  ABCWeights w;
  w.a = sinh(p.t - p.gamma);
  w.b = sinh(p.t + p.gamma);
  w.c = sinh(p.gamma * 2);
  w.validate();
  return w;
}

ABCWeights disordered_weights(const ExtReal& t, const ExtReal& gamma) {
  ExtReal g = abs(gamma);
  if (!(g.sign() > 0) || !(g < t)) throw std::domain_error("disordered_weights: requires 0 < |gamma| < t");
  if (!(t + g < ExtReal::pi(t.precision()))) throw std::domain_error("disordered_weights: requires t + |gamma| < pi");
  ABCWeights w;
  w.a = sin(t - g);
  w.b = sin(t + g);
  w.c = sin(g * 2);
  w.validate();
  return w;
}

std::pair<ExtReal, ExtReal> invert_line_params(const LineParams& lp) {
  const mpfr_prec_t prec = lp.alpha.precision();
  ExtReal one = ExtReal::from_long(1, prec);
  if (!(lp.alpha > one)) throw std::domain_error("invert_line_params: requires alpha > 1");
  if (lp.beta >= one) throw std::domain_error("invert_line_params: beta >= 1 is not in the disordered phase");
  if (lp.beta.sign() < 0) throw std::domain_error("invert_line_params: requires beta >= 0");
  ExtReal s2 = (one - lp.beta * lp.beta) / (lp.alpha * lp.alpha - lp.beta * lp.beta);
  ExtReal sg = sqrt(s2);
  ExtReal gamma = asin(sg);
  ExtReal t = atan2(lp.alpha * sg, lp.beta * cos(gamma));
  return {t, gamma};
}

}  // namespace sixv
