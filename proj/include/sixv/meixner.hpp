#ifndef SIXV_MEIXNER_HPP
#define SIXV_MEIXNER_HPP

#include <utility>
#include <vector>

#include "sixv/extreal.hpp"
#include "sixv/weights.hpp"

namespace sixv {

/// Meixner polynomial at beta = 1, terminating hypergeometric form
/// M_k(z;q) = 2F1(-k,-z;1;1-1/q) = sum_{j<=k} (1-1/q)^j
///            prod_{i<j}(k-i) prod_{i<j}(z-i) / (j!)^2.
ExtReal meixner_M(const ExtReal& q, int k, const ExtReal& z);

/// Coefficient vectors (ascending powers of z) of the monic polynomials
/// P^M_0..P^M_kmax built from the three-term recurrence
/// z P^M_k = P^M_{k+1} + (kq+k+q)/(1-q) P^M_k + k^2 q/(1-q)^2 P^M_{k-1}.
/// Exact whenever q and the recurrence data are exactly representable.
std::vector<std::vector<ExtReal>> meixner_monic_coeffs(const ExtReal& q, int kmax);

/// Monic shifted Meixner polynomial Q_k(z) = P^M_k(z-1), orthogonal on
/// l = 1,2,... with weight q^l.
ExtReal shifted_Q(const ExtReal& q, int k, const ExtReal& z);

/// Closed-form norm h_k^Q = (k!)^2 q^{k+1} / (1-q)^{2k+1}.
ExtReal h_Q(const ExtReal& q, int k);

/// |z P^M_k(z) - P^M_{k+1}(z) - A_k P^M_k(z) - B_k P^M_{k-1}(z)| with every
/// P^M evaluated through the hypergeometric sum; cross-checks the recurrence.
ExtReal recurrence_check(const ExtReal& q, int k, const ExtReal& z);

/// tau_n^Q = 2^{n^2} prod_{k<n} h_k^Q.
ExtReal tau_Q(const FerroParams& p, int n);

/// Z_n^Q = [sinh(t-gamma) sinh(t+gamma)]^{n^2} / prod(k!)^2 * tau_n^Q
/// (ferroelectric magnitude |sinh(gamma-t)| in the bracket); equals
/// F^{n^2} G^n.
ExtReal Z_Q(const FerroParams& p, int n);

/// (F, G) = (sinh(t+gamma), e^{gamma-t}).
std::pair<ExtReal, ExtReal> constants_FG(const FerroParams& p);

}  // namespace sixv

#endif
