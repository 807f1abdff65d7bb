#ifndef SIXV_ORTHOPOLY_HPP
#define SIXV_ORTHOPOLY_HPP

#include <vector>

#include "sixv/extreal.hpp"
#include "sixv/weights.hpp"

namespace sixv {

/// Monic discrete orthogonal polynomials on l = 1,2,... for the weight
/// w(l) = q^l - q0^l, built from Hankel principal minors of the exact
/// moments: h_k = D_{k+1}/D_k, alpha_k = E_{k+1}/D_{k+1} - E_k/D_k,
/// beta_k = h_k/h_{k-1}, with z P_k = P_{k+1} + alpha_k P_k + beta_k P_{k-1}.
struct OPSystem {
  FerroParams params;
  int kmax = 0;
  std::vector<ExtReal> D;      ///< D[0..kmax+1], D[0] = 1, all > 0
  std::vector<ExtReal> h;      ///< h[0..kmax], h_k = D[k+1]/D[k]
  std::vector<ExtReal> alpha;  ///< alpha[0..kmax]
  std::vector<ExtReal> beta;   ///< beta[1..kmax] stored at index k (beta[0] unused = 0)
};

OPSystem build(const FerroParams& p, int kmax);

/// P_k(z) through the three-term recurrence; k <= kmax.
ExtReal eval_P(const OPSystem& sys, int k, const ExtReal& z);

struct IpIdentityReport {
  ExtReal residual;           ///< |(h_k - h_k^Q) - (-sum P_k Q_k (w^Q - w))|
  ExtReal split_w_residual;   ///< |h_k - sum P_k Q_k w|
  ExtReal split_wq_residual;  ///< |h_k^Q - sum P_k Q_k w^Q|
  TailBound tail;             ///< certified tail of the main identity sum
};

/// Full check of the interpolation-problem identity
/// h_k - h_k^Q = -sum_{l>=1} P_k(l) Q_k(l) [w^Q(l) - w(l)]
/// and its two split forms, all by certified truncated sums.
IpIdentityReport ip_identity_check(const OPSystem& sys, int k);

/// Main identity residual alone.
ExtReal ip_identity_residual(const OPSystem& sys, int k);

/// eps_k = |h_k / h_k^Q - 1|.
ExtReal epsilon_k(const OPSystem& sys, int k);

/// delta_k = (1/h_k^Q) sum_{l>=1} Q_k(l)^2 q0^l, by certified sum.
ExtReal delta_k(const OPSystem& sys, int k);

/// C0 = 1/(e^{4 gamma} - 1); the bound eps_k^2 <= C0 (1+eps_k) delta_k holds.
ExtReal inequality_constant(const FerroParams& p);

}  // namespace sixv

#endif
