#pragma once

#include <gmpxx.h>

#include <vector>

#include "overpart/bigfloat.hpp"
#include "overpart/claims.hpp"
#include "overpart/sequences.hpp"

namespace overpart {

/* C(f(n)) = log f(n+1) - 2 log f(n) + log f(n-1), at working precision.
 * Requires n >= 1 and positive entries at n-1, n, n+1. */
BigFloat c_operator(SequenceTable& seq, std::size_t n, const PrecisionContext& prec);

struct ExactConcavity {
  bool holds = false;     // f(n)^2 >= f(n+1) f(n-1)
  bool equality = false;  // f(n)^2 == f(n+1) f(n-1)
};

/* Integer form of C(f(n)) <= 0: since log is monotone, for positive values
 * f(n)^2 >= f(n+1) f(n-1) is the same statement, decided exactly. */
ExactConcavity is_log_concave_exact(SequenceTable& seq, std::size_t n);

struct MainTheoremReport {
  ClaimReport claim;  // "overpartition-log-concave" over [2, n_max]
  std::vector<unsigned long> equality_witnesses;
};

/* Exact sweep of ov(n)^2 >= ov(n+1) ov(n-1) over [2, n_max].  The reported
 * margin is the floating C value of the worst (largest-C) index. */
MainTheoremReport verify_main_theorem(std::size_t n_max,
                                      const PrecisionContext& prec = PrecisionContext(192));

/* Right-hand side of the sharper log-concavity statement for ov:
 *   (2 mu^3 - 2 mu e^{4mu} + 5 mu^6 e^{2mu}) / (4 n^2 e^{4mu} (mu-1)^2)
 *     + (9 / (n mu)) e^{-2mu/3}. */
BigFloat opc_bound(unsigned long n, const PrecisionContext& prec);

/* Main-term bound alone (first fraction above). */
BigFloat t_hat_concavity_bound(unsigned long n, const PrecisionContext& prec);

/* C(ov(n)) <= opc_bound(n) over [n_lo, n_hi].  Returns one report for the
 * overlap with [4,8] (the statement's two thresholds disagree there, so it
 * is informational) and one for the rest. */
std::vector<ClaimReport> verify_opc(std::size_t n_lo, std::size_t n_hi,
                                    const PrecisionContext& prec);

/* C(T(n)) <= 0 and C(T(n)) <= t_hat_concavity_bound(n) over [n_lo, n_hi]. */
std::vector<ClaimReport> t_hat_logconcavity(std::size_t n_lo, std::size_t n_hi,
                                            const PrecisionContext& prec);

/* Claims around y_n = |R(n)| / T(n):
 *   yn-upper           y_n <= 3^{5/2}/(n mu) e^{-2mu/3}
 *   tupp-lower         T(n) > e^{mu}/2     (swept from max(1, n_lo-1))
 *   yn-fourpoint-minus log((1-y_n)^2 / ((1-y_{n-1})(1-y_{n+1}))) >= -9/(n mu) e^{-2mu/3}
 *   yn-fourpoint-plus  same left side >= +9/(n mu) e^{-2mu/3}
 * All are observational: violations are reported, never fatal.  Indices
 * where some y >= 1 are skipped and downgrade the verdict to mixed. */
std::vector<ClaimReport> yn_claims(std::size_t n_lo, std::size_t n_hi,
                                   const PrecisionContext& prec);

/* |C(ab)(n) - C(a)(n) - C(b)(n)| for positive sequences given as plain
 * vectors indexed from 0. */
BigFloat composition_residual(const std::vector<mpz_class>& a,
                              const std::vector<mpz_class>& b, std::size_t n,
                              const PrecisionContext& prec);

}  // namespace overpart
