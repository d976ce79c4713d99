#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace overpart {

/* Working precision, in bits, for all transcendental evaluation. */
class PrecisionContext {
 public:
  static constexpr long kMinBits = 64;

  explicit PrecisionContext(long bits = 192) : bits_(bits) {
    if (bits_ < kMinBits)
      throw std::invalid_argument("PrecisionContext: need at least 64 bits");
  }
  long bits() const { return bits_; }
  PrecisionContext doubled() const { return PrecisionContext(2 * bits_); }

 private:
  long bits_;
};

/* Thin value-semantics wrapper over mpfr_t.  Every value carries its own
 * precision; binary operations round to the wider of the two operands.
 * All rounding is to nearest unless stated otherwise. */
class BigFloat {
 public:
  BigFloat() : BigFloat(PrecisionContext::kMinBits) {}
  explicit BigFloat(long prec) { mpfr_init2(v_, prec); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(long v, long prec);
  static BigFloat of(unsigned long v, long prec);
  static BigFloat of(double v, long prec);
  static BigFloat of_str(const std::string& s, long prec);
  static BigFloat of(const mpz_class& v, long prec);
  static BigFloat of(const mpq_class& v, long prec);
  static BigFloat pi(long prec);
  static BigFloat zero(long prec);

  long prec() const { return mpfr_get_prec(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /* Nearest integer (ties to even, as mpfr_rint). */
  mpz_class round_to_integer() const;
  std::string str(int significant_digits = 20) const;

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp(long v) const { return mpfr_cmp_si(v_, v); }
  int cmp(double v) const { return mpfr_cmp_d(v_, v); }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.cmp(b) == 0; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend BigFloat exp(const BigFloat& a);
  friend BigFloat log(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat sinh(const BigFloat& a);
  friend BigFloat cosh(const BigFloat& a);
  friend BigFloat abs(const BigFloat& a);
  friend BigFloat pow_ui(const BigFloat& a, unsigned long e);

  friend BigFloat mul_si(const BigFloat& a, long v);
  friend BigFloat div_si(const BigFloat& a, long v);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

/* A real number together with a running absolute error bound.  The value is
 * kept at the working precision; the bound lives at 64 bits and every bound
 * operation rounds upward, so `error()` stays a true majorant through any
 * sequence of operations.  Combining bounds is associative and commutative,
 * which keeps parallel reductions sound. */
class TrackedReal {
 public:
  TrackedReal() = default;
  /* An input known exactly (integers, rationals with exact conversion
   * checked by the caller) enters with zero error. */
  static TrackedReal exact(BigFloat v);
  /* An input produced by one correctly rounded operation. */
  static TrackedReal rounded(BigFloat v);
  /* A value with an externally established absolute error bound. */
  static TrackedReal with_error(BigFloat v, BigFloat abs_error);
  static TrackedReal of(long v, long prec) { return exact(BigFloat::of(v, prec)); }
  static TrackedReal of(unsigned long v, long prec) { return exact(BigFloat::of(v, prec)); }
  static TrackedReal of(const mpz_class& v, long prec);
  static TrackedReal of(const mpq_class& v, long prec);
  static TrackedReal pi(long prec);

  const BigFloat& value() const { return val_; }
  const BigFloat& error() const { return err_; }
  /* Rigorous upper bound on the represented quantity. */
  BigFloat upper() const;
  /* Rigorous upper bound on its absolute value. */
  BigFloat abs_upper() const;

  friend TrackedReal operator+(const TrackedReal& a, const TrackedReal& b);
  friend TrackedReal operator-(const TrackedReal& a, const TrackedReal& b);
  friend TrackedReal operator*(const TrackedReal& a, const TrackedReal& b);
  friend TrackedReal operator/(const TrackedReal& a, const TrackedReal& b);
  friend TrackedReal operator-(const TrackedReal& a);

  friend TrackedReal exp(const TrackedReal& a);
  friend TrackedReal sqrt(const TrackedReal& a);
  friend TrackedReal sinh(const TrackedReal& a);
  friend TrackedReal cosh(const TrackedReal& a);
  friend TrackedReal sin(const TrackedReal& a);
  friend TrackedReal cos(const TrackedReal& a);
  friend TrackedReal abs(const TrackedReal& a);

 private:
  TrackedReal(BigFloat v, BigFloat e) : val_(std::move(v)), err_(std::move(e)) {}

  BigFloat val_;
  BigFloat err_;
};

}  // namespace overpart
