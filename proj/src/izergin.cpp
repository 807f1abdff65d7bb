#include "sixv/izergin.hpp"

#include <stdexcept>

#include "sixv/series.hpp"

namespace sixv {

ExtReal weight_w(long l, const FerroParams& p) {
  if (l < 1) throw std::domain_error("weight_w: l must be >= 1");
  return pow(p.q, l) - pow(p.q0, l);
}

MomentTable moments(const FerroParams& p, int jmax) {
  if (jmax < 0) throw std::domain_error("moments: jmax must be >= 0");
  MomentTable t;
  t.params = p;
  t.m.reserve(jmax + 1);
  for (int j = 0; j <= jmax; ++j) t.m.push_back(geometric_moment(p.q, j) - geometric_moment(p.q0, j));
  return t;
}

ExtReal phi(const FerroParams& p) {
  return sinh(p.gamma * 2) / (sinh(p.t + p.gamma) * sinh(p.t - p.gamma));
}

ExtReal phi_derivative(const FerroParams& p, int m) {
  ExtReal mm = geometric_moment(p.q, m) - geometric_moment(p.q0, m);
  ExtReal c = pow(ExtReal::from_long(-2, mm.precision()), static_cast<long>(m)) * 2;
  return c * mm;
}

std::vector<ExtReal> hankel_minors(const std::vector<ExtReal>& m, int size, std::vector<ExtReal>* shifted) {
  const int cols = shifted ? size + 1 : size;
  if (static_cast<int>(m.size()) < size + cols - 1)
    throw std::domain_error("hankel_minors: not enough moments");
  const mpfr_prec_t prec = m.empty() ? ExtReal::kDefaultPrec : m[0].precision();
  ExtReal one = ExtReal::from_long(1, prec);
  std::vector<ExtReal> D{one};
  if (shifted) shifted->assign(1, ExtReal::from_long(0, prec));
  if (size == 0) return D;

  std::vector<std::vector<ExtReal>> a(size);
  for (int i = 0; i < size; ++i) {
    a[i].reserve(cols);
    for (int j = 0; j < cols; ++j) a[i].push_back(m[i + j]);
  }
  ExtReal prev = one;
  for (int k = 0; k < size; ++k) {
    // after step k-1, a[k][j] = det over rows 0..k, columns 0..k-1 plus j
    D.push_back(a[k][k]);
    if (a[k][k].is_zero()) throw precision_error("hankel_minors: vanishing pivot (increase precision)");
    if (shifted) shifted->push_back(a[k][k + 1]);
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < cols; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return D;
}

ExtReal tau_n(const FerroParams& p, int n) {
  if (n < 1) throw std::domain_error("tau_n: n must be >= 1");
  MomentTable t = moments(p, 2 * n - 2);
  std::vector<ExtReal> D = hankel_minors(t.m, n);
  return ExtReal::pow2(static_cast<long>(n) * n, D[n].precision()) * D[n];
}

ExtReal partition_izergin(const FerroParams& p, int n) {
  ExtReal tau = tau_n(p, n);
  const mpfr_prec_t prec = tau.precision();
  ExtReal ab = sinh(p.t - p.gamma) * sinh(p.t + p.gamma);
  ExtReal superfact = ExtReal::from_long(1, prec);
  ExtReal fact = ExtReal::from_long(1, prec);
  for (long j = 1; j < n; ++j) {
    fact = fact * j;
    superfact = superfact * fact;
  }
  return pow(ab, static_cast<long>(n) * n) / (superfact * superfact) * tau;
}

}  // namespace sixv
