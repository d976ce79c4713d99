#include "overpart/logconcave.hpp"

#include <algorithm>
#include <stdexcept>

#include "overpart/hrr.hpp"

namespace overpart {

BigFloat c_operator(SequenceTable& seq, std::size_t n, const PrecisionContext& prec) {
  if (n < 1) throw std::domain_error("c_operator: n must be >= 1");
  seq.extend_to(n + 1);
  const mpz_class& lo = seq.at(n - 1);
  const mpz_class& mid = seq.at(n);
  const mpz_class& hi = seq.at(n + 1);
  if (lo <= 0 || mid <= 0 || hi <= 0)
    throw std::domain_error("c_operator: sequence values must be positive");
  const long bits = prec.bits();
  // log(hi lo / mid^2) keeps the cancellation inside one log
  const mpz_class num = hi * lo;
  const mpz_class den = mid * mid;
  if (num == den) return BigFloat::zero(bits);
  return log(BigFloat::of(num, bits) / BigFloat::of(den, bits));
}

ExactConcavity is_log_concave_exact(SequenceTable& seq, std::size_t n) {
  if (n < 1) throw std::domain_error("is_log_concave_exact: n must be >= 1");
  seq.extend_to(n + 1);
  const mpz_class lhs = seq.at(n) * seq.at(n);
  const mpz_class rhs = seq.at(n + 1) * seq.at(n - 1);
  return ExactConcavity{lhs >= rhs, lhs == rhs};
}

MainTheoremReport verify_main_theorem(std::size_t n_max, const PrecisionContext& prec) {
  if (n_max < 2) throw std::domain_error("verify_main_theorem: n_max must be >= 2");
  SequenceTable& ov = shared_table(SequenceKind::overpartition);
  ov.extend_to(n_max + 1);

  MainTheoremReport out;
  out.claim.claim_id = "overpartition-log-concave";
  out.claim.range_lo = 2;
  out.claim.range_hi = static_cast<double>(n_max);

  bool any_violation = false;
  // worst case = largest ov(n+1)ov(n-1)/ov(n)^2; compare ratios exactly
  mpz_class worst_num = 0, worst_den = 1;
  std::size_t worst_n = 2;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const mpz_class num = ov.at(n + 1) * ov.at(n - 1);
    const mpz_class den = ov.at(n) * ov.at(n);
    if (num > den) any_violation = true;
    if (num == den) out.equality_witnesses.push_back(static_cast<unsigned long>(n));
    if (num * worst_den > worst_num * den) {
      worst_num = num;
      worst_den = den;
      worst_n = n;
    }
  }
  out.claim.verdict = any_violation ? Verdict::violated : Verdict::holds;
  out.claim.witness = static_cast<double>(worst_n);
  out.claim.worst_margin =
      (worst_num == worst_den)
          ? 0.0
          : log(BigFloat::of(worst_num, prec.bits()) / BigFloat::of(worst_den, prec.bits()))
                .to_double();
  return out;
}

BigFloat t_hat_concavity_bound(unsigned long n, const PrecisionContext& prec) {
  if (n == 0) throw std::domain_error("t_hat_concavity_bound: n must be >= 1");
  const long bits = prec.bits();
  const BigFloat mu = mu_hat(n, prec);
  const BigFloat one = BigFloat::of(1L, bits);
  if (!(mu > one)) throw std::domain_error("t_hat_concavity_bound: needs mu > 1");
  const BigFloat e2 = exp(mul_si(mu, 2));
  const BigFloat e4 = e2 * e2;
  const BigFloat num = mul_si(pow_ui(mu, 3), 2) - mul_si(mu, 2) * e4 +
                       mul_si(pow_ui(mu, 6), 5) * e2;
  const BigFloat den =
      mul_si(BigFloat::of(mpz_class(mpz_class(n) * n), bits), 4) * e4 * pow_ui(mu - one, 2);
  return num / den;
}

BigFloat opc_bound(unsigned long n, const PrecisionContext& prec) {
  const long bits = prec.bits();
  const BigFloat mu = mu_hat(n, prec);
  const BigFloat correction =
      BigFloat::of(9L, bits) / (BigFloat::of(n, bits) * mu) *
      exp(div_si(mul_si(mu, -2), 3));
  return t_hat_concavity_bound(n, prec) + correction;
}

namespace {

struct SweepAccumulator {
  bool any = false;
  bool any_violation = false;
  double worst_margin = 0;
  double witness = 0;

  void add(double margin, double at, bool violated) {
    if (!any || margin > worst_margin) {
      worst_margin = margin;
      witness = at;
    }
    any = true;
    any_violation |= violated;
  }

  ClaimReport report(std::string id, double lo, double hi) const {
    ClaimReport r;
    r.claim_id = std::move(id);
    r.range_lo = lo;
    r.range_hi = hi;
    r.verdict = any_violation ? Verdict::violated : Verdict::holds;
    r.worst_margin = worst_margin;
    r.witness = witness;
    return r;
  }
};

}  // namespace

std::vector<ClaimReport> verify_opc(std::size_t n_lo, std::size_t n_hi,
                                    const PrecisionContext& prec) {
  if (n_lo < 2 || n_hi < n_lo) throw std::domain_error("verify_opc: bad range");
  SequenceTable& ov = shared_table(SequenceKind::overpartition);
  ov.extend_to(n_hi + 1);

  SweepAccumulator small, main;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const double margin =
        (c_operator(ov, n, prec) - opc_bound(static_cast<unsigned long>(n), prec))
            .to_double();
    const bool violated = margin > 0;
    if (n <= 8)
      small.add(margin, static_cast<double>(n), violated);
    else
      main.add(margin, static_cast<double>(n), violated);
  }
  std::vector<ClaimReport> out;
  if (small.any)
    out.push_back(small.report("opc-bound-small-range", static_cast<double>(n_lo),
                               std::min<double>(8, static_cast<double>(n_hi))));
  if (main.any)
    out.push_back(main.report("opc-bound", std::max<double>(9, static_cast<double>(n_lo)),
                              static_cast<double>(n_hi)));
  return out;
}

std::vector<ClaimReport> t_hat_logconcavity(std::size_t n_lo, std::size_t n_hi,
                                            const PrecisionContext& prec) {
  if (n_lo < 2 || n_hi < n_lo)
    throw std::domain_error("t_hat_logconcavity: bad range");
  SweepAccumulator nonpos, bounded;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const BigFloat c = log(t_hat(static_cast<unsigned long>(n + 1), prec)) -
                       mul_si(log(t_hat(static_cast<unsigned long>(n), prec)), 2) +
                       log(t_hat(static_cast<unsigned long>(n - 1), prec));
    const double m1 = c.to_double();
    nonpos.add(m1, static_cast<double>(n), m1 > 0);
    const double m2 =
        (c - t_hat_concavity_bound(static_cast<unsigned long>(n), prec)).to_double();
    bounded.add(m2, static_cast<double>(n), m2 > 0);
  }
  return {nonpos.report("that-nonpositive", static_cast<double>(n_lo),
                        static_cast<double>(n_hi)),
          bounded.report("that-bound", static_cast<double>(n_lo),
                         static_cast<double>(n_hi))};
}

std::vector<ClaimReport> yn_claims(std::size_t n_lo, std::size_t n_hi,
                                   const PrecisionContext& prec) {
  if (n_lo < 2 || n_hi < n_lo) throw std::domain_error("yn_claims: bad range");
  const long bits = prec.bits();
  shared_table(SequenceKind::overpartition).extend_to(n_hi + 1);

  auto y_of = [&](std::size_t n) {
    return abs(r_hat(static_cast<unsigned long>(n), prec)) /
           t_hat(static_cast<unsigned long>(n), prec);
  };

  SweepAccumulator upper, tupp, four_minus, four_plus;
  bool domain_skip = false;

  for (std::size_t n = std::max<std::size_t>(1, n_lo - 1); n <= n_hi; ++n) {
    const BigFloat mu = mu_hat(static_cast<unsigned long>(n), prec);
    // tupp: T(n) > e^{mu}/2, margin = e^{mu}/2 - T(n) (strict claim)
    const double mt =
        (exp(mu) / BigFloat::of(2L, bits) - t_hat(static_cast<unsigned long>(n), prec))
            .to_double();
    tupp.add(mt, static_cast<double>(n), mt >= 0);
  }

  const BigFloat three_to_52 = pow_ui(sqrt(BigFloat::of(3L, bits)), 5);
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const BigFloat mu = mu_hat(static_cast<unsigned long>(n), prec);
    const BigFloat envelope = exp(div_si(mul_si(mu, -2), 3)) /
                              (BigFloat::of(n, bits) * mu);
    const BigFloat yn = y_of(n);
    const double mu_margin = (yn - three_to_52 * envelope).to_double();
    upper.add(mu_margin, static_cast<double>(n), mu_margin > 0);

    const BigFloat ym = y_of(n - 1);
    const BigFloat yp = y_of(n + 1);
    const BigFloat one = BigFloat::of(1L, bits);
    if (yn >= one || ym >= one || yp >= one) {
      domain_skip = true;
      continue;
    }
    const BigFloat lhs =
        mul_si(log(one - yn), 2) - log(one - ym) - log(one - yp);
    const BigFloat rhs = mul_si(envelope, 9);
    const double mminus = (-rhs - lhs).to_double();  // lhs >= -rhs
    four_minus.add(mminus, static_cast<double>(n), mminus > 0);
    const double mplus = (rhs - lhs).to_double();  // lhs >= +rhs
    four_plus.add(mplus, static_cast<double>(n), mplus > 0);
  }

  const double lo = static_cast<double>(n_lo);
  const double hi = static_cast<double>(n_hi);
  std::vector<ClaimReport> out;
  out.push_back(upper.report("yn-upper", lo, hi));
  out.push_back(tupp.report("tupp-lower",
                            static_cast<double>(std::max<std::size_t>(1, n_lo - 1)), hi));
  ClaimReport fm = four_minus.report("yn-fourpoint-minus", lo, hi);
  ClaimReport fp = four_plus.report("yn-fourpoint-plus", lo, hi);
  if (domain_skip) {
    if (fm.verdict == Verdict::holds) fm.verdict = Verdict::mixed;
    if (fp.verdict == Verdict::holds) fp.verdict = Verdict::mixed;
  }
  out.push_back(std::move(fm));
  out.push_back(std::move(fp));
  return out;
}

BigFloat composition_residual(const std::vector<mpz_class>& a,
                              const std::vector<mpz_class>& b, std::size_t n,
                              const PrecisionContext& prec) {
  if (n < 1 || n + 1 >= a.size() || n + 1 >= b.size())
    throw std::domain_error("composition_residual: index out of range");
  const long bits = prec.bits();
  auto c_of = [&](const mpz_class& lo, const mpz_class& mid, const mpz_class& hi) {
    if (lo <= 0 || mid <= 0 || hi <= 0)
      throw std::domain_error("composition_residual: entries must be positive");
    return log(BigFloat::of(mpz_class(hi * lo), bits) / BigFloat::of(mpz_class(mid * mid), bits));
  };
  const BigFloat c_ab = c_of(a[n - 1] * b[n - 1], a[n] * b[n], a[n + 1] * b[n + 1]);
  const BigFloat c_a = c_of(a[n - 1], a[n], a[n + 1]);
  const BigFloat c_b = c_of(b[n - 1], b[n], b[n + 1]);
  return abs(c_ab - c_a - c_b);
}

}  // namespace overpart
