#include "sixv/meixner.hpp"

#include <stdexcept>

namespace sixv {

namespace {
void check_q(const ExtReal& q) {
  if (q.sign() <= 0 || !(q < 1)) throw std::domain_error("meixner: q must lie in (0,1)");
}

// A_k = (kq + k + q)/(1-q), B_k = k^2 q/(1-q)^2
ExtReal rec_A(const ExtReal& q, long k) { return (q * (k + 1) + k) / (1 - q); }
ExtReal rec_B(const ExtReal& q, long k) { return q * (k * k) / pow(1 - q, 2); }
}  // namespace

ExtReal meixner_M(const ExtReal& q, int k, const ExtReal& z) {
  check_q(q);
  if (k < 0) throw std::domain_error("meixner_M: k must be >= 0");
  const mpfr_prec_t prec = q.precision();
  ExtReal x = 1 - 1 / q;
  ExtReal term = ExtReal::from_long(1, prec);  // j = 0
  ExtReal sum = term;
  for (long j = 1; j <= k; ++j) {
    // term_j = term_{j-1} * x * (k-j+1)(z-j+1) / j^2
    term = term * x * (z - (j - 1)) * (k - j + 1) / (j * j);
    sum += term;
  }
  return sum;
}

std::vector<std::vector<ExtReal>> meixner_monic_coeffs(const ExtReal& q, int kmax) {
  check_q(q);
  if (kmax < 0) throw std::domain_error("meixner_monic_coeffs: kmax must be >= 0");
  const mpfr_prec_t prec = q.precision();
  ExtReal zero = ExtReal::from_long(0, prec);
  std::vector<std::vector<ExtReal>> P;
  P.push_back({ExtReal::from_long(1, prec)});
  if (kmax == 0) return P;
  P.push_back({-rec_A(q, 0), ExtReal::from_long(1, prec)});  // P_1 = z - A_0
  for (long k = 1; k < kmax; ++k) {
    ExtReal A = rec_A(q, k), B = rec_B(q, k);
    std::vector<ExtReal> next(k + 2, zero);
    for (size_t i = 0; i < P[k].size(); ++i) {
      next[i + 1] += P[k][i];       // z * P_k
      next[i] -= A * P[k][i];       // -A_k P_k
    }
    for (size_t i = 0; i < P[k - 1].size(); ++i) next[i] -= B * P[k - 1][i];
    P.push_back(std::move(next));
  }
  return P;
}

ExtReal shifted_Q(const ExtReal& q, int k, const ExtReal& z) {
  check_q(q);
  if (k < 0) throw std::domain_error("shifted_Q: k must be >= 0");
  // P^M_k at z-1 through the recurrence (monic by construction)
  const mpfr_prec_t prec = q.precision();
  ExtReal x = z.with_precision(std::max(prec, z.precision())) - 1;
  ExtReal pm1 = ExtReal::from_long(0, prec);
  ExtReal p = ExtReal::from_long(1, prec);
  for (long j = 0; j < k; ++j) {
    ExtReal next = (x - rec_A(q, j)) * p - rec_B(q, j) * pm1;
    pm1 = std::move(p);
    p = std::move(next);
  }
  return p;
}

ExtReal h_Q(const ExtReal& q, int k) {
  check_q(q);
  if (k < 0) throw std::domain_error("h_Q: k must be >= 0");
  const mpfr_prec_t prec = q.precision();
  ExtReal fact = ExtReal::from_long(1, prec);
  for (long i = 2; i <= k; ++i) fact = fact * i;
  return fact * fact * pow(q, static_cast<long>(k) + 1) / pow(1 - q, 2 * static_cast<long>(k) + 1);
}

ExtReal recurrence_check(const ExtReal& q, int k, const ExtReal& z) {
  check_q(q);
  if (k < 1) throw std::domain_error("recurrence_check: k must be >= 1");
  const mpfr_prec_t prec = q.precision();
  // monic values from the hypergeometric route: P^M_k = k!/(1-1/q)^k M_k
  auto monic = [&](int kk) {
    ExtReal fact = ExtReal::from_long(1, prec);
    for (long i = 2; i <= kk; ++i) fact = fact * i;
    return fact / pow(1 - 1 / q, static_cast<long>(kk)) * meixner_M(q, kk, z);
  };
  ExtReal lhs = z * monic(k);
  ExtReal rhs = monic(k + 1) + rec_A(q, k) * monic(k) + rec_B(q, k) * monic(k - 1);
  return abs(lhs - rhs);
}

ExtReal tau_Q(const FerroParams& p, int n) {
  if (n < 1) throw std::domain_error("tau_Q: n must be >= 1");
  ExtReal prod = ExtReal::pow2(static_cast<long>(n) * n, p.q.precision());
  for (int k = 0; k < n; ++k) prod = prod * h_Q(p.q, k);
  return prod;
}

ExtReal Z_Q(const FerroParams& p, int n) {
  ExtReal tq = tau_Q(p, n);
  const mpfr_prec_t prec = tq.precision();
  ExtReal ab = sinh(p.t - p.gamma) * sinh(p.t + p.gamma);
  ExtReal superfact = ExtReal::from_long(1, prec);
  ExtReal fact = ExtReal::from_long(1, prec);
  for (long j = 1; j < n; ++j) {
    fact = fact * j;
    superfact = superfact * fact;
  }
  return pow(ab, static_cast<long>(n) * n) / (superfact * superfact) * tq;
}

std::pair<ExtReal, ExtReal> constants_FG(const FerroParams& p) {
  return {sinh(p.t + p.gamma), exp(p.gamma - p.t)};
}

}  // namespace sixv
