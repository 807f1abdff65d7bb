#include "sixv/orthopoly.hpp"

#include <stdexcept>

#include "sixv/izergin.hpp"
#include "sixv/meixner.hpp"
#include "sixv/series.hpp"

namespace sixv {

namespace {

// Majorant setup for sums of (degree-2k polynomial) x geometric terms:
// ratio max(q,q0) (1+1/L)^{2k} once past L >= 2k/(t-gamma), per the
// polynomial-times-geometric tail structure.
struct SumSetup {
  ExtReal ratio;
  SumOptions opts;
};

SumSetup identity_sum_setup(const FerroParams& p, int k) {
  const mpfr_prec_t prec = p.q.precision();
  long L = (p.t - p.gamma).is_zero() ? 1 : (ExtReal::from_long(2 * k, prec) / (p.t - p.gamma)).to_long() + 1;
  if (L < 8) L = 8;
  ExtReal grow = pow(1 + 1 / ExtReal::from_long(L, prec), 2 * static_cast<long>(k));
  ExtReal ratio = (p.q > p.q0 ? p.q : p.q0) * grow;
  ExtReal one = ExtReal::from_long(1, prec);
  if (!(ratio < one)) ratio = (one + (p.q > p.q0 ? p.q : p.q0)) / 2;  // majorant must stay below 1
  SumSetup s{ratio, SumOptions{}};
  s.opts.detect_from = L;
  return s;
}

ExtReal sum_tol(const OPSystem& sys, int k) {
  // absolute tolerance scaled to the norm magnitude
  ExtReal hq = h_Q(sys.params.q, k);
  return hq * ExtReal::pow2(-160, hq.precision());
}

}  // namespace

OPSystem build(const FerroParams& p, int kmax) {
  if (kmax < 0) throw std::domain_error("orthopoly::build: kmax must be >= 0");
  OPSystem sys;
  sys.params = p;
  sys.kmax = kmax;
  MomentTable mt = moments(p, 2 * kmax + 1);
  std::vector<ExtReal> E;
  sys.D = hankel_minors(mt.m, kmax + 1, &E);
  for (int k = 0; k <= kmax + 1; ++k)
    if (sys.D[k].sign() <= 0)
      throw precision_error("orthopoly::build: nonpositive Hankel minor D_" + std::to_string(k) +
                            " (insufficient precision)");
  sys.h.reserve(kmax + 1);
  sys.alpha.reserve(kmax + 1);
  sys.beta.assign(1, ExtReal::from_long(0, p.q.precision()));
  for (int k = 0; k <= kmax; ++k) {
    sys.h.push_back(sys.D[k + 1] / sys.D[k]);
    sys.alpha.push_back(E[k + 1] / sys.D[k + 1] - E[k] / sys.D[k]);
    if (k >= 1) sys.beta.push_back(sys.h[k] / sys.h[k - 1]);
  }
  return sys;
}

ExtReal eval_P(const OPSystem& sys, int k, const ExtReal& z) {
  if (k < 0 || k > sys.kmax) throw std::domain_error("eval_P: k out of range");
  const mpfr_prec_t prec = sys.params.q.precision();
  ExtReal pm1 = ExtReal::from_long(0, prec);
  ExtReal p = ExtReal::from_long(1, prec);
  for (int j = 0; j < k; ++j) {
    ExtReal next = (z - sys.alpha[j]) * p;
    if (j >= 1) next -= sys.beta[j] * pm1;
    pm1 = std::move(p);
    p = std::move(next);
  }
  return p;
}

IpIdentityReport ip_identity_check(const OPSystem& sys, int k) {
  if (k < 0 || k > sys.kmax) throw std::domain_error("ip_identity_check: k out of range");
  const FerroParams& p = sys.params;
  ExtReal hq = h_Q(p.q, k);
  ExtReal tol = sum_tol(sys, k);
  SumSetup su = identity_sum_setup(p, k);

  auto pq_at = [&](long l) {
    ExtReal zl = ExtReal::from_long(l, p.q.precision());
    return eval_P(sys, k, zl) * shifted_Q(p.q, k, zl);
  };

  // main: h_k - h_k^Q = -sum P_k Q_k (w^Q - w),  w^Q - w = q0^l
  auto [main_sum, tb] = truncated_weighted_sum([&](long l) { return pq_at(l) * pow(p.q0, l); }, su.ratio, tol, su.opts);
  // splits: h_k = sum P_k Q_k w,  h_k^Q = sum P_k Q_k w^Q
  auto [w_sum, tb1] =
      truncated_weighted_sum([&](long l) { return pq_at(l) * weight_w(l, p); }, su.ratio, tol, su.opts);
  auto [wq_sum, tb2] =
      truncated_weighted_sum([&](long l) { return pq_at(l) * pow(p.q, l); }, su.ratio, tol, su.opts);

  IpIdentityReport r{abs((sys.h[k] - hq) - (-main_sum)), abs(sys.h[k] - w_sum), abs(hq - wq_sum), tb};
  return r;
}

ExtReal ip_identity_residual(const OPSystem& sys, int k) { return ip_identity_check(sys, k).residual; }

ExtReal epsilon_k(const OPSystem& sys, int k) {
  if (k < 0 || k > sys.kmax) throw std::domain_error("epsilon_k: k out of range");
  return abs(sys.h[k] / h_Q(sys.params.q, k) - 1);
}

ExtReal delta_k(const OPSystem& sys, int k) {
  if (k < 0 || k > sys.kmax) throw std::domain_error("delta_k: k out of range");
  const FerroParams& p = sys.params;
  ExtReal tol = sum_tol(sys, k);
  SumSetup su = identity_sum_setup(p, k);
  auto [s, tb] = truncated_weighted_sum(
      [&](long l) {
        ExtReal ql = shifted_Q(p.q, k, ExtReal::from_long(l, p.q.precision()));
        return ql * ql * pow(p.q0, l);
      },
      su.ratio, tol, su.opts);
  return s / h_Q(p.q, k);
}

ExtReal inequality_constant(const FerroParams& p) {
  return 1 / (exp(p.gamma * 4) - 1);
}

}  // namespace sixv
