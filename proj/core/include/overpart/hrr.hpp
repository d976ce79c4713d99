#pragma once

#include <gmpxx.h>

#include <optional>

#include "overpart/bigfloat.hpp"

namespace overpart {

/* mu(n) = pi sqrt(n), the growth parameter of the series.  n = 0 is
 * rejected: the k/mu factors degenerate. */
BigFloat mu_hat(unsigned long n, const PrecisionContext& prec);

/* f_n(k) = cosh(mu/k) - (k/mu) sinh(mu/k); nonnegative for every real
 * k != 0 (all terms of its even power series carry the factor 2m/(2m+1)!).
 * For k >> mu the two halves cancel down to ~ (mu/k)^2/3, so evaluate at
 * full working precision. */
BigFloat f_n_of_k(unsigned long n, const BigFloat& k, const PrecisionContext& prec);

/* k-th summand of the truncated series:
 *   A_k(n) / (8 n sqrt(k)) * [ (1 + k/mu) e^{-mu/k} + (1 - k/mu) e^{mu/k} ],
 * using the real part of A_k(n). */
TrackedReal series_term(unsigned long k, unsigned long n, const PrecisionContext& prec);

/* Sum of series_term over odd k <= N, with the accumulated rounding error
 * carried in the TrackedReal. */
TrackedReal truncated_series(unsigned long n, unsigned long N, const PrecisionContext& prec);

/* Tail bound from the error theorem:  N^{5/2} / (n mu) * sinh(mu / N). */
BigFloat remainder_bound(unsigned long n, unsigned long N, const PrecisionContext& prec);

/* Sharper rigorous majorant of the same tail |R_2(n,N)|, N odd.  Obtained
 * by the same comparison of sum against integral, but summing only over the
 * odd lattice (step 2) and keeping the m = 1 term of the power series
 * exact.  With c = N+2 and t = mu/c:
 *
 *   sum_{odd k >= c} sqrt(k) f_n(k)
 *     <= sqrt(c) [ (cosh t - sinh(t)/t)
 *                  + c ( t^2/3 + (4/5)(sinh(t)/t - 1 - t^2/6) ) ]
 *
 * and |R_2(n,N)| is at most 1/(4n) of that.  Returned value is rounded
 * upward (a true bound). */
BigFloat tail_majorant(unsigned long n, unsigned long N, const PrecisionContext& prec);

/* min(remainder_bound, tail_majorant), rounded upward; the bound actually
 * used when certifying integer values. */
BigFloat certification_bound(unsigned long n, unsigned long N, const PrecisionContext& prec);

/* Truncated-series value together with everything needed to prove that the
 * nearest integer is exact: certified_integer is present iff
 *   truncation_bound + rounding_slack < 1/2   and
 *   |value - nearest| + truncation_bound + rounding_slack < 1/2. */
struct SeriesCertificate {
  unsigned long n = 0;
  unsigned long terms_to = 0;  // odd k <= terms_to were summed
  long prec_bits = 0;
  BigFloat value;
  BigFloat truncation_bound;
  BigFloat rounding_slack;
  std::optional<mpz_class> certified_integer;
};

struct HrrOptions {
  long initial_prec_bits = 192;
  unsigned long max_terms = 199;  // highest odd truncation level scanned
  int max_doublings = 4;
  /* Force a fixed truncation level instead of scanning (testing hook). */
  std::optional<unsigned long> fixed_terms;
};

/* Evaluate the series for ov(n), scanning odd truncation levels upward and
 * doubling the working precision until the certificate conditions hold.
 * Returns an uncertified certificate if they never do. */
SeriesCertificate overpartition_hrr(unsigned long n, const HrrOptions& options = {});

/* Partial sums of S = sum_{odd k > N} sqrt(k) f_n(k) up to k <= M, checked
 * against the closed-form cap 4 n * remainder_bound(n, N). */
struct TailSumReport {
  unsigned long n = 0, level = 0, cap_terms = 0;
  BigFloat partial_sum;
  BigFloat cap;
  bool all_terms_nonnegative = false;
  bool below_cap = false;
  double margin = 0.0;  // partial_sum - cap (negative when below)
};

TailSumReport tail_sum_check(unsigned long n, unsigned long N, unsigned long M,
                             const PrecisionContext& prec);

/* Main term  T(x) = (1/8x) { e^{-mu} + (1 - 1/mu) e^{mu} }.  Requires
 * x >= 1 (mu > 1 keeps the bracket positive). */
BigFloat t_hat(const BigFloat& x, const PrecisionContext& prec);
BigFloat t_hat(unsigned long n, const PrecisionContext& prec);

namespace detail {
/* The same formula on the wider domain x >= 1/4 (still mu > 1); finite
 * difference stencils centred at x = 1 need the sliver below 1. */
BigFloat t_hat_formula(const BigFloat& x, const PrecisionContext& prec);
}  // namespace detail

/* Residual R(n) = ov(n) - T(n) against the exact value of ov(n). */
BigFloat r_hat(unsigned long n, const PrecisionContext& prec);

}  // namespace overpart
