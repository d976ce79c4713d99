#pragma once

#include "overpart/bigfloat.hpp"
#include "overpart/claims.hpp"

namespace overpart {

/* f(x) = log T(x), for x >= 1. */
BigFloat f_closed(const BigFloat& x, const PrecisionContext& prec);

/* The three closed-form derivative expressions, transcribed exactly as
 * printed, with mu = pi sqrt(x):
 *
 *  f1 = (e^{2mu} - 2 mu^2) / (2x (mu + e^{2mu}(mu - 1)))
 *  f2 = (2mu^3 + e^{4mu}(2-3mu) + e^{2mu} mu (-3+2mu-2mu^2+4mu^3))
 *       / (4 (x^{3/2} pi + e^{2mu} x (mu-1))^2)
 *  f3 = (e^{6mu} p1 + e^{2mu} mu^2 p2 + e^{4mu} p3 - 3 mu^4)
 *       / (8 (x^{3/2} pi + e^{2mu} x (mu-1))^3)
 *
 * They are cross-checked against central finite differences of f; the
 * finite differences are the arbiter when the two disagree. */
BigFloat f1_closed(const BigFloat& x, const PrecisionContext& prec);
BigFloat f2_closed(const BigFloat& x, const PrecisionContext& prec);
BigFloat f3_closed(const BigFloat& x, const PrecisionContext& prec);

struct PPolyValues {
  BigFloat p1, p2, p3;
};

/*  p1 = 8 - 24mu + 24mu^2 - 9mu^3 + 3mu^4
 *  p2 = 15 - 21mu + 21mu^2 - 20mu^3 + 8mu^4
 *  p3 = -21mu + 45mu^2 - 30mu^3 + 7mu^4 + 4mu^5 - 8mu^6  */
PPolyValues p_polynomials(const BigFloat& x, const PrecisionContext& prec);

/* Central finite differences of f_closed with the given step. */
BigFloat f1_fd(const BigFloat& x, const PrecisionContext& prec, const BigFloat& step);
BigFloat f2_fd(const BigFloat& x, const PrecisionContext& prec, const BigFloat& step);
BigFloat f3_fd(const BigFloat& x, const PrecisionContext& prec, const BigFloat& step);

struct DerivativeBundle {
  BigFloat x;
  BigFloat f;
  BigFloat f1_closed, f2_closed, f3_closed;
  BigFloat f1_fd, f2_fd, f3_fd;
  BigFloat step;
};

DerivativeBundle derivative_bundle(const BigFloat& x, const PrecisionContext& prec,
                                   const BigFloat& step);

/* Relative agreement |closed - fd| / max(|fd|, 1e-30) for derivative order
 * 1, 2 or 3, reported as an observational claim against the given
 * tolerance.  A violated verdict flags the printed closed form. */
ClaimReport fd_agreement_claim(int order, const std::vector<double>& sample_x,
                               double tolerance, const PrecisionContext& prec);

/* p1 > mu^4 (which = 1), p2 > 4 mu^4 (which = 2), p3 > -8 mu^6 (which = 3),
 * swept on a grid. */
ClaimReport p_lower_bound_claim(int which, double x_lo, double x_hi, double step,
                                const PrecisionContext& prec);

enum class SweepKind { f1_pos, f2_neg, f3_pos, sandwich };

/* Grid sign sweep.  For f1_pos/f2_neg/f3_pos the derivative comes either
 * from the printed closed form or from finite differences; the sandwich
 * checks f''(x-1) < f(x+1) - 2 f(x) + f(x-1) < f''(x+1) at integer x. */
ClaimReport sign_sweep(SweepKind kind, double x_lo, double x_hi, double step,
                       const PrecisionContext& prec, bool use_finite_differences);

}  // namespace overpart
