#include "overpart/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace overpart {

BigFloat BigFloat::of(long v, long prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(unsigned long v, long prec) {
  BigFloat r(prec);
  mpfr_set_ui(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(double v, long prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of_str(const std::string& s, long prec) {
  BigFloat r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
  return r;
}

BigFloat BigFloat::of(const mpz_class& v, long prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const mpq_class& v, long prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::zero(long prec) {
  BigFloat r(prec);
  mpfr_set_zero(r.v_, 1);
  return r;
}

mpz_class BigFloat::round_to_integer() const {
  BigFloat t(prec());
  mpfr_rint(t.v_, v_, MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
  return z;
}

std::string BigFloat::str(int significant_digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRg", significant_digits);
  char* out = nullptr;
  if (mpfr_asprintf(&out, fmt, v_) < 0) return "<mpfr error>";
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

namespace {
long wider(const BigFloat& a, const BigFloat& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_exp(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_log(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat sinh(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sinh(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat cosh(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_cosh(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat pow_ui(const BigFloat& a, unsigned long e) {
  BigFloat r(a.prec());
  mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

BigFloat mul_si(const BigFloat& a, long v) {
  BigFloat r(a.prec());
  mpfr_mul_si(r.v_, a.v_, v, MPFR_RNDN);
  return r;
}

BigFloat div_si(const BigFloat& a, long v) {
  BigFloat r(a.prec());
  mpfr_div_si(r.v_, a.v_, v, MPFR_RNDN);
  return r;
}

/* ------------------------------------------------------------------ */
/* TrackedReal                                                         */
/* ------------------------------------------------------------------ */

namespace {

constexpr long kErrPrec = 64;

/* |v| * 2^{1-prec}, rounded up: a safe bound for one correctly rounded
 * operation (true error is at most half an ulp). */
BigFloat ulp_bound(const BigFloat& v) {
  BigFloat e(kErrPrec);
  mpfr_abs(e.raw(), v.raw(), MPFR_RNDU);
  mpfr_mul_2si(e.raw(), e.raw(), 1 - v.prec(), MPFR_RNDU);
  return e;
}

BigFloat err_add(const BigFloat& a, const BigFloat& b) {
  BigFloat e(kErrPrec);
  mpfr_add(e.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return e;
}

BigFloat err_mul(const BigFloat& a, const BigFloat& b) {
  BigFloat e(kErrPrec);
  mpfr_mul(e.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return e;
}

BigFloat err_abs_up(const BigFloat& a) {
  BigFloat e(kErrPrec);
  mpfr_abs(e.raw(), a.raw(), MPFR_RNDU);
  return e;
}

}  // namespace

TrackedReal TrackedReal::exact(BigFloat v) {
  return TrackedReal(std::move(v), BigFloat::zero(kErrPrec));
}

TrackedReal TrackedReal::rounded(BigFloat v) {
  BigFloat e = ulp_bound(v);
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal TrackedReal::with_error(BigFloat v, BigFloat abs_error) {
  BigFloat e(kErrPrec);
  mpfr_set(e.raw(), abs_error.raw(), MPFR_RNDU);
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal TrackedReal::of(const mpz_class& v, long prec) {
  BigFloat x = BigFloat::of(v, prec);
  // exact when the integer fits in the precision
  if (mpz_sizeinbase(v.get_mpz_t(), 2) <= static_cast<size_t>(prec))
    return exact(std::move(x));
  return rounded(std::move(x));
}

TrackedReal TrackedReal::of(const mpq_class& v, long prec) {
  return rounded(BigFloat::of(v, prec));
}

TrackedReal TrackedReal::pi(long prec) {
  return rounded(BigFloat::pi(prec));
}

BigFloat TrackedReal::upper() const {
  BigFloat r(val_.prec());
  mpfr_add(r.raw(), val_.raw(), err_.raw(), MPFR_RNDU);
  return r;
}

BigFloat TrackedReal::abs_upper() const {
  BigFloat r(val_.prec());
  mpfr_abs(r.raw(), val_.raw(), MPFR_RNDU);
  mpfr_add(r.raw(), r.raw(), err_.raw(), MPFR_RNDU);
  return r;
}

TrackedReal operator+(const TrackedReal& a, const TrackedReal& b) {
  BigFloat v = a.val_ + b.val_;
  BigFloat e = err_add(err_add(a.err_, b.err_), ulp_bound(v));
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal operator-(const TrackedReal& a, const TrackedReal& b) {
  BigFloat v = a.val_ - b.val_;
  BigFloat e = err_add(err_add(a.err_, b.err_), ulp_bound(v));
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal operator*(const TrackedReal& a, const TrackedReal& b) {
  BigFloat v = a.val_ * b.val_;
  // |a||eb| + |b||ea| + ea eb + ulp
  BigFloat e = err_add(err_mul(err_abs_up(a.val_), b.err_),
                       err_mul(err_abs_up(b.val_), a.err_));
  e = err_add(e, err_mul(a.err_, b.err_));
  e = err_add(e, ulp_bound(v));
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal operator/(const TrackedReal& a, const TrackedReal& b) {
  BigFloat v = a.val_ / b.val_;
  // (ea + |q| eb) / (|b| - eb) + ulp, requires |b| > eb
  BigFloat denom(kErrPrec);
  mpfr_abs(denom.raw(), b.val_.raw(), MPFR_RNDD);
  mpfr_sub(denom.raw(), denom.raw(), b.err_.raw(), MPFR_RNDD);
  if (mpfr_sgn(denom.raw()) <= 0)
    throw std::domain_error("TrackedReal: divisor not separated from zero");
  BigFloat num = err_add(a.err_, err_mul(err_abs_up(v), b.err_));
  BigFloat e(kErrPrec);
  mpfr_div(e.raw(), num.raw(), denom.raw(), MPFR_RNDU);
  e = err_add(e, ulp_bound(v));
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal operator-(const TrackedReal& a) {
  return TrackedReal(-a.val_, a.err_);
}

TrackedReal exp(const TrackedReal& a) {
  BigFloat v = exp(a.val_);
  // |exp(a~) - exp(a)| <= exp(a~) (e^{ea} - 1) <= exp(a~) ea e^{ea}
  BigFloat grow(kErrPrec);
  mpfr_exp(grow.raw(), a.err_.raw(), MPFR_RNDU);
  BigFloat e = err_mul(err_mul(err_abs_up(v), a.err_), grow);
  e = err_add(e, ulp_bound(v));
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal sqrt(const TrackedReal& a) {
  if (a.val_.sign() < 0) throw std::domain_error("TrackedReal: sqrt of negative");
  BigFloat v = sqrt(a.val_);
  BigFloat lo(kErrPrec);
  mpfr_sub(lo.raw(), a.val_.raw(), a.err_.raw(), MPFR_RNDD);
  BigFloat e(kErrPrec);
  if (mpfr_sgn(lo.raw()) <= 0) {
    // not separated from zero: |sqrt(a~) - sqrt(a)| <= sqrt(ea)
    mpfr_sqrt(e.raw(), a.err_.raw(), MPFR_RNDU);
  } else {
    mpfr_sqrt(lo.raw(), lo.raw(), MPFR_RNDD);
    mpfr_mul_2si(lo.raw(), lo.raw(), 1, MPFR_RNDD);
    mpfr_div(e.raw(), a.err_.raw(), lo.raw(), MPFR_RNDU);
  }
  e = err_add(e, ulp_bound(v));
  return TrackedReal(std::move(v), std::move(e));
}

namespace {
/* cosh(|a|+ea) rounded up, at bound precision: Lipschitz constant for both
 * sinh and cosh on the perturbation interval. */
BigFloat cosh_lipschitz(const TrackedReal& a, const BigFloat& err) {
  BigFloat t(kErrPrec);
  mpfr_abs(t.raw(), a.value().raw(), MPFR_RNDU);
  mpfr_add(t.raw(), t.raw(), err.raw(), MPFR_RNDU);
  mpfr_cosh(t.raw(), t.raw(), MPFR_RNDU);
  return t;
}
}  // namespace

TrackedReal sinh(const TrackedReal& a) {
  BigFloat v = sinh(a.val_);
  BigFloat e = err_mul(cosh_lipschitz(a, a.err_), a.err_);
  e = err_add(e, ulp_bound(v));
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal cosh(const TrackedReal& a) {
  BigFloat v = cosh(a.val_);
  BigFloat e = err_mul(cosh_lipschitz(a, a.err_), a.err_);
  e = err_add(e, ulp_bound(v));
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal sin(const TrackedReal& a) {
  BigFloat v(a.val_.prec());
  mpfr_sin(v.raw(), a.val_.raw(), MPFR_RNDN);
  BigFloat e = err_add(a.err_, ulp_bound(v));  // |sin'| <= 1
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal cos(const TrackedReal& a) {
  BigFloat v(a.val_.prec());
  mpfr_cos(v.raw(), a.val_.raw(), MPFR_RNDN);
  BigFloat e = err_add(a.err_, ulp_bound(v));  // |cos'| <= 1
  return TrackedReal(std::move(v), std::move(e));
}

TrackedReal abs(const TrackedReal& a) {
  return TrackedReal(abs(a.val_), a.err_);
}

}  // namespace overpart
