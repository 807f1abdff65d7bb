#ifndef SIXV_SERIES_HPP
#define SIXV_SERIES_HPP

#include <functional>
#include <utility>
#include <vector>

#include "sixv/extreal.hpp"

namespace sixv {

/// Eulerian numbers A(m,0..m-1) (A(0,*) := {1}), exact, by the triangle
/// recurrence A(m,j) = (j+1)A(m-1,j) + (m-j)A(m-1,j-1).
/// Returned as ExtReal at the given precision; the integers are computed
/// exactly in GMP before the single final rounding.
std::vector<ExtReal> eulerian_row(unsigned m, mpfr_prec_t prec = ExtReal::kDefaultPrec);

/// S_m(r) = sum_{l>=1} l^m r^l in closed form via the Eulerian identity
/// S_m(r) = (sum_j A(m,j) r^{j+1}) / (1-r)^{m+1}. No truncation error.
/// Requires 0 < r < 1.
ExtReal geometric_moment(const ExtReal& r, unsigned m);

struct SumOptions {
  long min_index = 1;        ///< first summed index
  long detect_from = 1;      ///< ratio detection starts here (earlier terms are summed regardless)
  long max_index = 1000000;  ///< hard cap before declaring non-convergence
  int consecutive = 8;       ///< ratio-condition detections required for L0
};

/// Certified truncated summation of sum_{l>=min_index} term(l).
///
/// Precondition: beyond some detectable index L0, |term(l+1)/term(l)| <=
/// majorant_ratio < 1. L0 is detected by scanning until the ratio condition
/// holds for `consecutive` terms in a row; summation then continues until the
/// geometric tail bound |term(L+1)|/(1 - majorant_ratio) drops below `tol`.
/// Returns the partial sum and the certified TailBound.
std::pair<ExtReal, TailBound> truncated_weighted_sum(const std::function<ExtReal(long)>& term,
                                                     const ExtReal& majorant_ratio, const ExtReal& tol,
                                                     const SumOptions& opts = {});

}  // namespace sixv

#endif
