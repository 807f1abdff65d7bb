#ifndef SIXV_EXTREAL_HPP
#define SIXV_EXTREAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sixv {

/// Raised when a precision-doubling validation cannot stabilize a result.
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a certified series summation never detects its ratio condition.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision real scalar. Immutable value semantics; every
/// operation is correctly rounded (MPFR, round-to-nearest) at the working
/// precision. Binary operations carry the larger precision of the operands.
class ExtReal {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 256;
  static constexpr mpfr_prec_t kMinPrec = 64;

  ExtReal() : ExtReal(kDefaultPrec) {}
  explicit ExtReal(mpfr_prec_t prec) { mpfr_init2(v_, check_prec(prec)); }

  ExtReal(const ExtReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  ExtReal(ExtReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  ExtReal& operator=(const ExtReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ExtReal& operator=(ExtReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~ExtReal() { mpfr_clear(v_); }

  static ExtReal from_long(long x, mpfr_prec_t prec = kDefaultPrec);
  static ExtReal from_double(double x, mpfr_prec_t prec = kDefaultPrec);
  /// Parses a decimal string (e.g. "0.125", "1e-40") at the given precision.
  static ExtReal from_string(const std::string& s, mpfr_prec_t prec = kDefaultPrec);
  /// Exact rational p/q rounded once at the given precision.
  static ExtReal from_ratio(long num, long den, mpfr_prec_t prec = kDefaultPrec);
  static ExtReal pi(mpfr_prec_t prec = kDefaultPrec);
  static ExtReal ln2(mpfr_prec_t prec = kDefaultPrec);
  /// 2^e, exact.
  static ExtReal pow2(long e, mpfr_prec_t prec = kDefaultPrec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded to a new precision.
  ExtReal with_precision(mpfr_prec_t prec) const;

  ExtReal operator-() const;
  ExtReal operator+(const ExtReal& o) const;
  ExtReal operator-(const ExtReal& o) const;
  ExtReal operator*(const ExtReal& o) const;
  ExtReal operator/(const ExtReal& o) const;
  ExtReal operator+(long o) const;
  ExtReal operator-(long o) const;
  ExtReal operator*(long o) const;
  ExtReal operator/(long o) const;
  ExtReal& operator+=(const ExtReal& o);
  ExtReal& operator-=(const ExtReal& o);
  ExtReal& operator*=(const ExtReal& o);
  ExtReal& operator/=(const ExtReal& o);

  int cmp(const ExtReal& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const ExtReal& o) const { return cmp(o) < 0; }
  bool operator>(const ExtReal& o) const { return cmp(o) > 0; }
  bool operator<=(const ExtReal& o) const { return cmp(o) <= 0; }
  bool operator>=(const ExtReal& o) const { return cmp(o) >= 0; }
  bool operator==(const ExtReal& o) const { return cmp(o) == 0; }
  bool operator!=(const ExtReal& o) const { return cmp(o) != 0; }
  bool operator<(long o) const { return mpfr_cmp_si(v_, o) < 0; }
  bool operator>(long o) const { return mpfr_cmp_si(v_, o) > 0; }
  bool operator<=(long o) const { return mpfr_cmp_si(v_, o) <= 0; }
  bool operator>=(long o) const { return mpfr_cmp_si(v_, o) >= 0; }
  bool operator==(long o) const { return mpfr_cmp_si(v_, o) == 0; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Decimal rendering with the given number of significant digits.
  std::string to_string(int digits = 30) const;

  /// Raw handle for interop inside the library.
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  static mpfr_prec_t check_prec(mpfr_prec_t prec) {
    if (prec < kMinPrec) throw std::domain_error("ExtReal: precision must be >= 64 bits");
    return prec;
  }
  mpfr_t v_;
};

ExtReal exp(const ExtReal& x);
ExtReal log(const ExtReal& x);
ExtReal sinh(const ExtReal& x);
ExtReal cosh(const ExtReal& x);
ExtReal sin(const ExtReal& x);
ExtReal cos(const ExtReal& x);
ExtReal asin(const ExtReal& x);
ExtReal atan2(const ExtReal& y, const ExtReal& x);
ExtReal sqrt(const ExtReal& x);
ExtReal abs(const ExtReal& x);
ExtReal pow(const ExtReal& base, long e);
ExtReal pow(const ExtReal& base, const ExtReal& e);

inline ExtReal operator+(long a, const ExtReal& b) { return b + a; }
inline ExtReal operator*(long a, const ExtReal& b) { return b * a; }
ExtReal operator-(long a, const ExtReal& b);
ExtReal operator/(long a, const ExtReal& b);

/// |a-b| / max(|a|,|b|); zero when both are zero.
ExtReal rel_diff(const ExtReal& a, const ExtReal& b);

/// Certified bound on the absolute value of an omitted series tail.
/// `bound` is a rigorous majorant, never an estimate.
struct TailBound {
  long truncation_index = 0;
  ExtReal bound;
};

/// A-posteriori precision validation: evaluates `f` at precision P and 2P and
/// accepts when the relative difference is below 2^-(P-56) (2^-200 at the
/// default 256 bits). On rejection the base precision doubles and the check
/// repeats, up to `max_doublings` rungs.
ExtReal validated(const std::function<ExtReal(mpfr_prec_t)>& f, mpfr_prec_t prec = ExtReal::kDefaultPrec,
                  int max_doublings = 3);

}  // namespace sixv

#endif
