#include "sixv/series.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sixv {

std::vector<ExtReal> eulerian_row(unsigned m, mpfr_prec_t prec) {
  std::vector<mpz_class> row{1};  // A(0,0)
  for (unsigned mm = 1; mm <= m; ++mm) {
    std::vector<mpz_class> next(mm);
    for (unsigned j = 0; j < mm; ++j) {
      mpz_class acc = 0;
      if (j < row.size()) acc += (j + 1) * row[j];
      if (j >= 1) acc += (mm - j) * row[j - 1];
      next[j] = acc;
    }
    row = std::move(next);
  }
  std::vector<ExtReal> out;
  out.reserve(row.size());
  for (const auto& z : row) {
    ExtReal x(prec);
    mpfr_set_z(x.raw(), z.get_mpz_t(), MPFR_RNDN);
    out.push_back(std::move(x));
  }
  return out;
}

ExtReal geometric_moment(const ExtReal& r, unsigned m) {
  const mpfr_prec_t prec = r.precision();
  ExtReal zero = ExtReal::from_long(0, prec);
  ExtReal one = ExtReal::from_long(1, prec);
  if (!(r > zero) || !(r < one)) throw std::domain_error("geometric_moment: r must lie in (0,1)");
  auto A = eulerian_row(m, prec);
  // numerator sum_j A(m,j) r^{j+1}, Horner from the top
  ExtReal num = zero;
  for (size_t j = A.size(); j-- > 0;) num = num * r + A[j];
  num = num * r;
  return num / pow(1 - r, static_cast<long>(m) + 1);
}

std::pair<ExtReal, TailBound> truncated_weighted_sum(const std::function<ExtReal(long)>& term,
                                                     const ExtReal& majorant_ratio, const ExtReal& tol,
                                                     const SumOptions& opts) {
  const mpfr_prec_t prec = majorant_ratio.precision();
  ExtReal one = ExtReal::from_long(1, prec);
  if (!(majorant_ratio > ExtReal::from_long(0, prec)) || !(majorant_ratio < one))
    throw std::domain_error("truncated_weighted_sum: majorant_ratio must lie in (0,1)");

  ExtReal sum = ExtReal::from_long(0, prec);
  ExtReal inv_gap = one / (one - majorant_ratio);
  ExtReal prev = term(opts.min_index);
  sum += prev;
  int streak = 0;
  for (long l = opts.min_index + 1; l <= opts.max_index; ++l) {
    ExtReal cur = term(l);
    sum += cur;
    // ratio condition |term(l)| <= ratio * |term(l-1)|
    if (l <= opts.detect_from)
      streak = 0;
    else if (abs(cur) <= majorant_ratio * abs(prev))
      ++streak;
    else
      streak = 0;
    if (streak >= opts.consecutive) {
      ExtReal bound = abs(cur) * inv_gap;
      if (bound <= tol) {
        TailBound tb;
        tb.truncation_index = l;
        tb.bound = bound;
        return {sum, tb};
      }
    }
    prev = std::move(cur);
  }
  throw convergence_error("truncated_weighted_sum: ratio condition/tolerance not reached by index " +
                          std::to_string(opts.max_index));
}

}  // namespace sixv
