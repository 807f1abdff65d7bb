#include "sixv/extreal.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace sixv {

namespace {
mpfr_prec_t join(const ExtReal& a, const ExtReal& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

ExtReal ExtReal::from_long(long x, mpfr_prec_t prec) {
  ExtReal r(prec);
  mpfr_set_si(r.raw(), x, MPFR_RNDN);
  return r;
}

ExtReal ExtReal::from_double(double x, mpfr_prec_t prec) {
  ExtReal r(prec);
  mpfr_set_d(r.raw(), x, MPFR_RNDN);
  return r;
}

ExtReal ExtReal::from_string(const std::string& s, mpfr_prec_t prec) {
  ExtReal r(prec);
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::domain_error("ExtReal: unparseable decimal string '" + s + "'");
  return r;
}

ExtReal ExtReal::from_ratio(long num, long den, mpfr_prec_t prec) {
  if (den == 0) throw std::domain_error("ExtReal: zero denominator");
  ExtReal r(prec);
  mpfr_set_si(r.raw(), num, MPFR_RNDN);
  mpfr_div_si(r.raw(), r.raw(), den, MPFR_RNDN);
  return r;
}

ExtReal ExtReal::pi(mpfr_prec_t prec) {
  ExtReal r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

ExtReal ExtReal::ln2(mpfr_prec_t prec) {
  ExtReal r(prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

ExtReal ExtReal::pow2(long e, mpfr_prec_t prec) {
  ExtReal r(prec);
  mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

ExtReal ExtReal::with_precision(mpfr_prec_t prec) const {
  ExtReal r(prec);
  mpfr_set(r.raw(), v_, MPFR_RNDN);
  return r;
}

ExtReal ExtReal::operator-() const {
  ExtReal r(precision());
  mpfr_neg(r.raw(), v_, MPFR_RNDN);
  return r;
}

#define SIXV_BINOP(op, fn)                              \
  ExtReal ExtReal::operator op(const ExtReal& o) const { \
    ExtReal r(join(*this, o));                          \
    fn(r.raw(), v_, o.v_, MPFR_RNDN);                   \
    return r;                                           \
  }
SIXV_BINOP(+, mpfr_add)
SIXV_BINOP(-, mpfr_sub)
SIXV_BINOP(*, mpfr_mul)
SIXV_BINOP(/, mpfr_div)
#undef SIXV_BINOP

#define SIXV_BINOP_SI(op, fn)                     \
  ExtReal ExtReal::operator op(long o) const {    \
    ExtReal r(precision());                       \
    fn(r.raw(), v_, o, MPFR_RNDN);                \
    return r;                                     \
  }
SIXV_BINOP_SI(+, mpfr_add_si)
SIXV_BINOP_SI(-, mpfr_sub_si)
SIXV_BINOP_SI(*, mpfr_mul_si)
SIXV_BINOP_SI(/, mpfr_div_si)
#undef SIXV_BINOP_SI

ExtReal& ExtReal::operator+=(const ExtReal& o) { return *this = *this + o; }
ExtReal& ExtReal::operator-=(const ExtReal& o) { return *this = *this - o; }
ExtReal& ExtReal::operator*=(const ExtReal& o) { return *this = *this * o; }
ExtReal& ExtReal::operator/=(const ExtReal& o) { return *this = *this / o; }

std::string ExtReal::to_string(int digits) const {
  if (digits < 2) digits = 2;
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

#define SIXV_UNFN(name, fn)              \
  ExtReal name(const ExtReal& x) {       \
    ExtReal r(x.precision());            \
    fn(r.raw(), x.raw(), MPFR_RNDN);     \
    return r;                            \
  }
SIXV_UNFN(exp, mpfr_exp)
SIXV_UNFN(log, mpfr_log)
SIXV_UNFN(sinh, mpfr_sinh)
SIXV_UNFN(cosh, mpfr_cosh)
SIXV_UNFN(sin, mpfr_sin)
SIXV_UNFN(cos, mpfr_cos)
SIXV_UNFN(asin, mpfr_asin)
SIXV_UNFN(sqrt, mpfr_sqrt)
SIXV_UNFN(abs, mpfr_abs)
#undef SIXV_UNFN

ExtReal atan2(const ExtReal& y, const ExtReal& x) {
  ExtReal r(join(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

ExtReal pow(const ExtReal& base, long e) {
  ExtReal r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
  return r;
}

ExtReal pow(const ExtReal& base, const ExtReal& e) {
  ExtReal r(join(base, e));
  mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
  return r;
}

ExtReal operator-(long a, const ExtReal& b) {
  ExtReal r(b.precision());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

ExtReal operator/(long a, const ExtReal& b) {
  ExtReal r(b.precision());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

ExtReal rel_diff(const ExtReal& a, const ExtReal& b) {
  ExtReal num = abs(a - b);
  ExtReal den = abs(a);
  ExtReal babs = abs(b);
  if (babs > den) den = babs;
  if (den.is_zero()) return ExtReal::from_long(0, num.precision());
  return num / den;
}

ExtReal validated(const std::function<ExtReal(mpfr_prec_t)>& f, mpfr_prec_t prec, int max_doublings) {
  // certify ~(prec-56) bits: the threshold is fixed by the requested
  // precision while the working precision climbs
  ExtReal thr = ExtReal::pow2(-static_cast<long>(prec - 56), 64);
  mpfr_prec_t p = prec;
  ExtReal lo = f(p);
  for (int i = 0; i <= max_doublings; ++i) {
    ExtReal hi = f(2 * p);
    if (rel_diff(lo.with_precision(2 * p), hi) < thr) return lo;
    p *= 2;
    lo = std::move(hi);
  }
  throw precision_error("validated: result did not stabilize after doubling precision " +
                        std::to_string(max_doublings) + " times from " + std::to_string(prec) + " bits");
}

}  // namespace sixv
