#pragma once

#include <gmpxx.h>

#include "overpart/bigfloat.hpp"

namespace overpart {

/* Exact value of  sum_{r=1}^{k-1} (r/k) (hr/k - floor(hr/k) - 1/2),
 * the exponent of the unity root w(h,k).  Requires gcd(h,k) = 1; h is
 * taken modulo k. */
mpq_class dedekind_sum(long h, unsigned long k);

/* A root of unity e^{pi i t} with t kept as an exact rational in [0,2).
 * The exponent stays exact through all arithmetic; conversion to a complex
 * number happens only at evaluation precision. */
class UnityRoot {
 public:
  explicit UnityRoot(mpq_class exponent);

  const mpq_class& exponent() const { return exponent_; }

  UnityRoot operator*(const UnityRoot& o) const;
  UnityRoot operator/(const UnityRoot& o) const;
  UnityRoot squared() const { return *this * *this; }

  /* cos(pi t) and sin(pi t) at the requested precision, with error bound. */
  TrackedReal real_part(long prec) const;
  TrackedReal imag_part(long prec) const;

 private:
  mpq_class exponent_;  // reduced into [0,2)
};

/* w(h,k) = e^{pi i s(h,k)}. */
UnityRoot omega(long h, unsigned long k);

/* Kloosterman-type sum  A_k(n) = sum_{0<=h<k, (h,k)=1}
 *     w(h,k)^2 / w(2h mod k, k) * e(-nh/k),
 * for odd k.  The sum is real (the h and k-h terms are conjugate); `im`
 * carries the numerically accumulated imaginary part so its smallness can
 * be *observed* rather than assumed.  `err` bounds the absolute error of
 * both components. */
struct AkValue {
  unsigned long k = 1;
  unsigned long n = 0;
  long prec_bits = 64;
  BigFloat re;
  BigFloat im;
  BigFloat err;
};

/* Exact-exponent evaluation: all phases are combined as rationals mod 2
 * first, then converted once.  Results are cached per (k, n mod k). */
AkValue a_hat(unsigned long k, unsigned long n, const PrecisionContext& prec);

/* Defining-formula evaluation: floating phases
 *     pi (2 s(h,k) - s(2h mod k,k)) - 2 pi n h / k
 * without any rational reduction.  Kept as the independent route for
 * cross-checks (periodicity in n is a real statement here, not an artifact
 * of reduction). */
AkValue a_hat_direct(unsigned long k, unsigned long n, const PrecisionContext& prec);

}  // namespace overpart
