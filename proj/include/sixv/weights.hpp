#ifndef SIXV_WEIGHTS_HPP
#define SIXV_WEIGHTS_HPP

#include <string>
#include <utility>

#include "sixv/extreal.hpp"

namespace sixv {

/// General six-vertex weights w1..w6, all strictly positive.
struct SixWeights {
  ExtReal w1, w2, w3, w4, w5, w6;
  void validate() const;
};

/// Reduced three-parameter weights (a,a,b,b,c,c).
struct ABCWeights {
  ExtReal a, b, c;
  void validate() const;
};

enum class Phase { Ferroelectric, AntiFerroelectric, Disordered, DeltaBoundary, FreeFermion };

std::string phase_name(Phase p);

/// Ferroelectric parametrization point: a=sinh(t-gamma), b=sinh(t+gamma),
/// c=sinh(2 gamma) with 0 < gamma < t. Carries q = e^{2 gamma - 2t} and
/// q0 = e^{-2 gamma - 2t}; here 0 < q0 < q < 1 and b > a + c.
struct FerroParams {
  ExtReal t, gamma, q, q0;

  static FerroParams create(const ExtReal& t, const ExtReal& gamma);
  /// Reference fixture: t = ln 2, gamma = (ln 2)/2, so q = 1/2, q0 = 1/8.
  static FerroParams ref(mpfr_prec_t prec = ExtReal::kDefaultPrec);
  /// Same point re-evaluated at a different working precision.
  FerroParams at_precision(mpfr_prec_t prec) const { return create(t.with_precision(prec), gamma.with_precision(prec)); }
};

/// Coordinates on the line (a+b)/c = alpha with beta = (b-a)/c.
struct LineParams {
  ExtReal alpha, beta;
  static LineParams create(const ExtReal& alpha, const ExtReal& beta);
};

struct ReducedWeights {
  ABCWeights abc;
  ExtReal factor;  ///< C(n) = (w5/w6)^{n/2}
};

/// Conservation-law reduction: a=sqrt(w1 w2), b=sqrt(w3 w4), c=sqrt(w5 w6),
/// with Z_n(w) = C(n) Z_n(a,a,b,b,c,c).
ReducedWeights reduce(const SixWeights& w, int n);

/// Delta = (a^2 + b^2 - c^2) / (2ab).
ExtReal delta(const ABCWeights& w);

/// Phase classification by Delta. FreeFermion and the Delta = +-1 boundaries
/// are detected within 2^-128 at the working precision.
Phase classify(const ABCWeights& w);

ABCWeights ferro_weights(const FerroParams& p);

/// Disordered parametrization a=sin(t-gamma), b=sin(t+gamma), c=sin(2|gamma|);
/// requires 0 < |gamma| < t and t + |gamma| < pi.
ABCWeights disordered_weights(const ExtReal& t, const ExtReal& gamma);

/// Inverts (alpha, beta) -> (t, gamma) on the disordered side via
/// sin^2 gamma = (1-beta^2)/(alpha^2-beta^2), sin t = alpha sin gamma,
/// cos t = beta cos gamma; picks the root with 0 < gamma < t < pi/2
/// (t = pi/2 at beta = 0). Requires alpha > 1 and 0 <= beta < 1.
std::pair<ExtReal, ExtReal> invert_line_params(const LineParams& lp);

}  // namespace sixv

#endif
