#include "overpart/hrr.hpp"

#include <stdexcept>

#include "overpart/dedekind.hpp"
#include "overpart/sequences.hpp"

namespace overpart {

namespace {

TrackedReal mu_hat_tracked(unsigned long n, long prec) {
  if (n == 0) throw std::domain_error("mu_hat: n must be positive");
  return TrackedReal::pi(prec) * sqrt(TrackedReal::of(n, prec));
}

BigFloat min_up(const BigFloat& a, const BigFloat& b) {
  return a <= b ? a : b;
}

}  // namespace

BigFloat mu_hat(unsigned long n, const PrecisionContext& prec) {
  return mu_hat_tracked(n, prec.bits()).value();
}

BigFloat f_n_of_k(unsigned long n, const BigFloat& k, const PrecisionContext& prec) {
  if (k.sign() == 0) throw std::domain_error("f_n_of_k: k must be nonzero");
  const long bits = prec.bits();
  BigFloat mu = mu_hat(n, prec);
  BigFloat kk = BigFloat::zero(bits) + k;  // widen to working precision
  BigFloat t = mu / kk;
  return cosh(t) - (kk / mu) * sinh(t);
}

TrackedReal series_term(unsigned long k, unsigned long n, const PrecisionContext& prec) {
  if (k % 2 == 0) throw std::invalid_argument("series_term: k must be odd");
  const long bits = prec.bits();
  const TrackedReal mu = mu_hat_tracked(n, bits);
  const TrackedReal kr = TrackedReal::of(k, bits);
  const TrackedReal t = mu / kr;
  const TrackedReal ep = exp(t);
  const TrackedReal em = exp(-t);
  const TrackedReal one = TrackedReal::of(1L, bits);
  const TrackedReal ratio = kr / mu;
  const TrackedReal bracket = (one + ratio) * em + (one - ratio) * ep;

  const AkValue ak = a_hat(k, n, prec);
  const TrackedReal ak_re = TrackedReal::with_error(ak.re, ak.err);
  const TrackedReal denom = TrackedReal::of(mpz_class(8 * mpz_class(n)), bits) * sqrt(kr);
  return ak_re * bracket / denom;
}

TrackedReal truncated_series(unsigned long n, unsigned long N, const PrecisionContext& prec) {
  if (n == 0 || N == 0)
    throw std::domain_error("truncated_series: need n >= 1 and N >= 1");
  TrackedReal sum = TrackedReal::of(0L, prec.bits());
  for (unsigned long k = 1; k <= N; k += 2) sum = sum + series_term(k, n, prec);
  return sum;
}

BigFloat remainder_bound(unsigned long n, unsigned long N, const PrecisionContext& prec) {
  if (n == 0 || N == 0)
    throw std::domain_error("remainder_bound: need n >= 1 and N >= 1");
  const long bits = prec.bits();
  const BigFloat mu = mu_hat(n, prec);
  const BigFloat Nf = BigFloat::of(N, bits);
  return pow_ui(Nf, 2) * sqrt(Nf) * sinh(mu / Nf) / (BigFloat::of(n, bits) * mu);
}

BigFloat tail_majorant(unsigned long n, unsigned long N, const PrecisionContext& prec) {
  if (n == 0 || N % 2 == 0)
    throw std::domain_error("tail_majorant: need n >= 1 and odd N");
  const long bits = prec.bits();
  const TrackedReal mu = mu_hat_tracked(n, bits);
  const TrackedReal c = TrackedReal::of(N + 2, bits);
  const TrackedReal t = mu / c;
  const TrackedReal sh = sinh(t);
  const TrackedReal sh_over_t = sh / t;
  const TrackedReal one = TrackedReal::of(1L, bits);
  const TrackedReal t2 = t * t;
  const TrackedReal head = cosh(t) - sh_over_t;
  const TrackedReal inner =
      t2 / TrackedReal::of(3L, bits) +
      TrackedReal::of(4L, bits) / TrackedReal::of(5L, bits) *
          (sh_over_t - one - t2 / TrackedReal::of(6L, bits));
  const TrackedReal s = sqrt(c) * (head + c * inner);
  const TrackedReal bound = s / TrackedReal::of(mpz_class(4 * mpz_class(n)), bits);
  return bound.upper();
}

BigFloat certification_bound(unsigned long n, unsigned long N, const PrecisionContext& prec) {
  // the theorem bound, rounded up so the minimum stays a true bound
  const long bits = prec.bits();
  const TrackedReal mu = mu_hat_tracked(n, bits);
  const TrackedReal Nf = TrackedReal::of(N, bits);
  const TrackedReal thm = Nf * Nf * sqrt(Nf) * sinh(mu / Nf) /
                          (TrackedReal::of(n, bits) * mu);
  return min_up(thm.upper(), tail_majorant(n, N, prec));
}

SeriesCertificate overpartition_hrr(unsigned long n, const HrrOptions& options) {
  if (n == 0) throw std::domain_error("overpartition_hrr: n must be positive");
  const BigFloat half = BigFloat::of(0.5, 64);

  PrecisionContext prec(options.initial_prec_bits);
  SeriesCertificate cert;
  cert.n = n;

  for (int round = 0; round <= options.max_doublings; ++round) {
    const unsigned long first = options.fixed_terms.value_or(1);
    const unsigned long last = options.fixed_terms.value_or(options.max_terms);
    for (unsigned long N = first | 1UL; N <= last; N += 2) {
      const BigFloat bound = certification_bound(n, N, prec);
      if (options.fixed_terms.has_value() || bound < half) {
        const TrackedReal value = truncated_series(n, N, prec);
        cert.terms_to = N;
        cert.prec_bits = prec.bits();
        cert.value = value.value();
        cert.truncation_bound = bound;
        cert.rounding_slack = value.error();
        const BigFloat budget = bound + value.error();
        if (budget < half) {
          const mpz_class nearest = value.value().round_to_integer();
          const BigFloat dist = abs(value.value() - BigFloat::of(nearest, prec.bits()));
          if (dist + budget < half) {
            cert.certified_integer = nearest;
            return cert;
          }
        } else {
          break;  // slack dominates; a longer sum only grows it
        }
      }
    }
    prec = prec.doubled();
  }
  return cert;  // uncertified
}

TailSumReport tail_sum_check(unsigned long n, unsigned long N, unsigned long M,
                             const PrecisionContext& prec) {
  const long bits = prec.bits();
  TailSumReport report;
  report.n = n;
  report.level = N;
  report.cap_terms = M;
  report.all_terms_nonnegative = true;
  BigFloat sum = BigFloat::zero(bits);
  for (unsigned long k = N + 2 - (N % 2 == 0 ? 1 : 0); k <= M; k += 2) {
    const BigFloat term = sqrt(BigFloat::of(k, bits)) *
                          f_n_of_k(n, BigFloat::of(k, bits), prec);
    if (term.sign() < 0) report.all_terms_nonnegative = false;
    sum = sum + term;
  }
  report.partial_sum = sum;
  report.cap = BigFloat::of(mpz_class(4 * mpz_class(n)), bits) * remainder_bound(n, N, prec);
  report.below_cap = report.partial_sum < report.cap;
  report.margin = (report.partial_sum - report.cap).to_double();
  return report;
}

namespace detail {
BigFloat t_hat_formula(const BigFloat& x, const PrecisionContext& prec) {
  if (x.cmp(0.25) < 0)
    throw std::domain_error("t_hat: requires mu(x) > 1");
  const long bits = prec.bits();
  const BigFloat xx = BigFloat::zero(bits) + x;
  const BigFloat mu = BigFloat::pi(bits) * sqrt(xx);
  const BigFloat one = BigFloat::of(1L, bits);
  return (exp(-mu) + (one - one / mu) * exp(mu)) / (BigFloat::of(8L, bits) * xx);
}
}  // namespace detail

BigFloat t_hat(const BigFloat& x, const PrecisionContext& prec) {
  if (x.cmp(1L) < 0) throw std::domain_error("t_hat: requires x >= 1");
  return detail::t_hat_formula(x, prec);
}

BigFloat t_hat(unsigned long n, const PrecisionContext& prec) {
  return t_hat(BigFloat::of(n, prec.bits()), prec);
}

BigFloat r_hat(unsigned long n, const PrecisionContext& prec) {
  if (n == 0) throw std::domain_error("r_hat: n must be positive");
  const BigFloat exact = BigFloat::of(overpartition(n), prec.bits());
  return exact - t_hat(n, prec);
}

}  // namespace overpart
