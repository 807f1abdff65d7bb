#ifndef SIXV_IZERGIN_HPP
#define SIXV_IZERGIN_HPP

#include <vector>

#include "sixv/extreal.hpp"
#include "sixv/weights.hpp"

namespace sixv {

/// Moments m[j] = sum_{l>=1} l^j w(l) of the discrete weight
/// w(l) = q^l - q0^l, evaluated in closed form (no truncation).
struct MomentTable {
  FerroParams params;
  std::vector<ExtReal> m;
};

/// w(l) = 2 e^{-2tl} sinh(2 gamma l) = q^l - q0^l > 0.
ExtReal weight_w(long l, const FerroParams& p);

MomentTable moments(const FerroParams& p, int jmax);

/// phi(t) = sinh(2 gamma) / (sinh(t+gamma) sinh(t-gamma)).
ExtReal phi(const FerroParams& p);

/// d^m phi / dt^m = 2 (-2)^m m_m (gamma fixed). phi_derivative(p,0) == phi(p).
ExtReal phi_derivative(const FerroParams& p, int m);

/// Leading principal minors of the Hankel moment matrix by fraction-free
/// (Bareiss) elimination. Returns D[0..size] with D[0] = 1,
/// D[k] = det(m_{i+j})_{0<=i,j<k}. When `shifted` is non-null it receives
/// E[0..size] with E[0] = 0 and E[k] = det of the same matrix with its last
/// column replaced by (m_{i+k}); these feed the recurrence coefficients.
/// Requires moments m[0..2*size-2] (2*size-1 entries), one more when shifted
/// minors are requested.
std::vector<ExtReal> hankel_minors(const std::vector<ExtReal>& m, int size, std::vector<ExtReal>* shifted = nullptr);

/// tau_n = det(d^{j+k-2} phi / dt^{j+k-2})_{1<=j,k<=n} = 2^{n^2} D_n.
/// The row/column powers of (-2) cancel pairwise, so the derivative
/// determinant reduces to the plain moment Hankel determinant.
ExtReal tau_n(const FerroParams& p, int n);

/// Izergin partition function
/// Z_n = [sinh(t-gamma) sinh(t+gamma)]^{n^2} / (prod_{j<n} j!)^2 * tau_n.
ExtReal partition_izergin(const FerroParams& p, int n);

}  // namespace sixv

#endif
