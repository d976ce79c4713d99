#include "overpart/derivatives.hpp"

#include <stdexcept>

#include "overpart/hrr.hpp"

namespace overpart {

namespace {

BigFloat mu_of(const BigFloat& x, long bits) {
  return BigFloat::pi(bits) * sqrt(BigFloat::zero(bits) + x);
}

void require_domain(const BigFloat& x) {
  if (x.cmp(1L) < 0)
    throw std::domain_error("closed-form derivatives: requires x >= 1");
}

/* shared denominator base  x^{3/2} pi + e^{2mu} x (mu - 1) */
BigFloat denom_base(const BigFloat& x, long bits) {
  const BigFloat xx = BigFloat::zero(bits) + x;
  const BigFloat mu = mu_of(x, bits);
  return xx * sqrt(xx) * BigFloat::pi(bits) +
         exp(mul_si(mu, 2)) * xx * (mu - BigFloat::of(1L, bits));
}

}  // namespace

BigFloat f_closed(const BigFloat& x, const PrecisionContext& prec) {
  return log(t_hat(x, prec));
}

namespace {
/* log T on the widened domain, for stencil points just below x = 1. */
BigFloat f_for_fd(const BigFloat& x, const PrecisionContext& prec) {
  return log(detail::t_hat_formula(x, prec));
}
}  // namespace

BigFloat f1_closed(const BigFloat& x, const PrecisionContext& prec) {
  require_domain(x);
  const long bits = prec.bits();
  const BigFloat xx = BigFloat::zero(bits) + x;
  const BigFloat mu = mu_of(x, bits);
  const BigFloat one = BigFloat::of(1L, bits);
  const BigFloat e2 = exp(mul_si(mu, 2));
  return (e2 - mul_si(mu * mu, 2)) /
         (mul_si(xx, 2) * (mu + e2 * (mu - one)));
}

BigFloat f2_closed(const BigFloat& x, const PrecisionContext& prec) {
  require_domain(x);
  const long bits = prec.bits();
  const BigFloat mu = mu_of(x, bits);
  const BigFloat e2 = exp(mul_si(mu, 2));
  const BigFloat e4 = e2 * e2;
  const BigFloat num =
      mul_si(pow_ui(mu, 3), 2) + e4 * (BigFloat::of(2L, bits) - mul_si(mu, 3)) +
      e2 * mu *
          (BigFloat::of(-3L, bits) + mul_si(mu, 2) - mul_si(mu * mu, 2) +
           mul_si(pow_ui(mu, 3), 4));
  return num / mul_si(pow_ui(denom_base(x, bits), 2), 4);
}

PPolyValues p_polynomials(const BigFloat& x, const PrecisionContext& prec) {
  if (x.sign() <= 0) throw std::domain_error("p_polynomials: requires x > 0");
  const long bits = prec.bits();
  const BigFloat mu = mu_of(x, bits);
  const BigFloat mu2 = mu * mu;
  const BigFloat mu3 = mu2 * mu;
  const BigFloat mu4 = mu2 * mu2;
  const BigFloat mu5 = mu4 * mu;
  const BigFloat mu6 = mu3 * mu3;
  PPolyValues out{
      BigFloat::of(8L, bits) - mul_si(mu, 24) + mul_si(mu2, 24) - mul_si(mu3, 9) +
          mul_si(mu4, 3),
      BigFloat::of(15L, bits) - mul_si(mu, 21) + mul_si(mu2, 21) - mul_si(mu3, 20) +
          mul_si(mu4, 8),
      -mul_si(mu, 21) + mul_si(mu2, 45) - mul_si(mu3, 30) + mul_si(mu4, 7) +
          mul_si(mu5, 4) - mul_si(mu6, 8)};
  return out;
}

BigFloat f3_closed(const BigFloat& x, const PrecisionContext& prec) {
  require_domain(x);
  const long bits = prec.bits();
  const BigFloat mu = mu_of(x, bits);
  const PPolyValues p = p_polynomials(x, prec);
  const BigFloat e2 = exp(mul_si(mu, 2));
  const BigFloat e4 = e2 * e2;
  const BigFloat e6 = e4 * e2;
  const BigFloat num =
      e6 * p.p1 + e2 * mu * mu * p.p2 + e4 * p.p3 - mul_si(pow_ui(mu, 4), 3);
  return num / mul_si(pow_ui(denom_base(x, bits), 3), 8);
}

BigFloat f1_fd(const BigFloat& x, const PrecisionContext& prec, const BigFloat& step) {
  return (f_for_fd(x + step, prec) - f_for_fd(x - step, prec)) / mul_si(step, 2);
}

BigFloat f2_fd(const BigFloat& x, const PrecisionContext& prec, const BigFloat& step) {
  return (f_for_fd(x + step, prec) - mul_si(f_for_fd(x, prec), 2) +
          f_for_fd(x - step, prec)) /
         (step * step);
}

BigFloat f3_fd(const BigFloat& x, const PrecisionContext& prec, const BigFloat& step) {
  const BigFloat two_h = mul_si(step, 2);
  return (f_for_fd(x + two_h, prec) - mul_si(f_for_fd(x + step, prec), 2) +
          mul_si(f_for_fd(x - step, prec), 2) - f_for_fd(x - two_h, prec)) /
         mul_si(step * step * step, 2);
}

DerivativeBundle derivative_bundle(const BigFloat& x, const PrecisionContext& prec,
                                   const BigFloat& step) {
  DerivativeBundle b{x,
                     f_closed(x, prec),
                     f1_closed(x, prec),
                     f2_closed(x, prec),
                     f3_closed(x, prec),
                     f1_fd(x, prec, step),
                     f2_fd(x, prec, step),
                     f3_fd(x, prec, step),
                     step};
  return b;
}

ClaimReport fd_agreement_claim(int order, const std::vector<double>& sample_x,
                               double tolerance, const PrecisionContext& prec) {
  const long bits = prec.bits();
  const BigFloat step = BigFloat::of_str("1e-10", bits);
  ClaimReport r;
  r.claim_id = "f" + std::to_string(order) + "-matches-closed-form";
  r.range_lo = sample_x.front();
  r.range_hi = sample_x.back();
  bool violated = false;
  bool first = true;
  for (double xv : sample_x) {
    const BigFloat x = BigFloat::of(xv, bits);
    BigFloat closed(bits), fd(bits);
    switch (order) {
      case 1: closed = f1_closed(x, prec); fd = f1_fd(x, prec, step); break;
      case 2: closed = f2_closed(x, prec); fd = f2_fd(x, prec, step); break;
      case 3: closed = f3_closed(x, prec); fd = f3_fd(x, prec, step); break;
      default: throw std::invalid_argument("fd_agreement_claim: order must be 1..3");
    }
    BigFloat scale = abs(fd);
    const BigFloat floor_val = BigFloat::of_str("1e-30", bits);
    if (scale < floor_val) scale = floor_val;
    const double margin = (abs(closed - fd) / scale).to_double() - tolerance;
    if (first || margin > r.worst_margin) {
      r.worst_margin = margin;
      r.witness = xv;
      first = false;
    }
    violated |= margin > 0;
  }
  r.verdict = violated ? Verdict::violated : Verdict::holds;
  return r;
}

ClaimReport p_lower_bound_claim(int which, double x_lo, double x_hi, double step,
                                const PrecisionContext& prec) {
  const long bits = prec.bits();
  ClaimReport r;
  r.claim_id = "p" + std::to_string(which) + "-lower";
  r.range_lo = x_lo;
  r.range_hi = x_hi;
  bool violated = false;
  bool first = true;
  for (double xv = x_lo; xv <= x_hi + 1e-9; xv += step) {
    const BigFloat x = BigFloat::of(xv, bits);
    const BigFloat mu = mu_of(x, bits);
    const PPolyValues p = p_polynomials(x, prec);
    BigFloat margin(bits);
    switch (which) {
      case 1: margin = pow_ui(mu, 4) - p.p1; break;
      case 2: margin = mul_si(pow_ui(mu, 4), 4) - p.p2; break;
      case 3: margin = mul_si(pow_ui(mu, 6), -8) - p.p3; break;
      default: throw std::invalid_argument("p_lower_bound_claim: which must be 1..3");
    }
    const double m = margin.to_double();
    if (first || m > r.worst_margin) {
      r.worst_margin = m;
      r.witness = xv;
      first = false;
    }
    violated |= m >= 0;
  }
  r.verdict = violated ? Verdict::violated : Verdict::holds;
  return r;
}

ClaimReport sign_sweep(SweepKind kind, double x_lo, double x_hi, double step,
                       const PrecisionContext& prec, bool use_finite_differences) {
  const long bits = prec.bits();
  const BigFloat fd_step = BigFloat::of_str("1e-10", bits);
  ClaimReport r;
  r.range_lo = x_lo;
  r.range_hi = x_hi;
  const char* suffix = use_finite_differences ? "-fd" : "-closed";

  auto deriv2 = [&](const BigFloat& x) {
    return use_finite_differences ? f2_fd(x, prec, fd_step) : f2_closed(x, prec);
  };

  bool violated = false;
  bool first = true;
  auto record = [&](double margin, double at) {
    if (first || margin > r.worst_margin) {
      r.worst_margin = margin;
      r.witness = at;
      first = false;
    }
    violated |= margin >= 0;  // all four claims are strict inequalities
  };

  for (double xv = x_lo; xv <= x_hi + 1e-9; xv += step) {
    const BigFloat x = BigFloat::of(xv, bits);
    switch (kind) {
      case SweepKind::f1_pos: {
        const BigFloat v =
            use_finite_differences ? f1_fd(x, prec, fd_step) : f1_closed(x, prec);
        record((-v).to_double(), xv);  // claim v > 0
        break;
      }
      case SweepKind::f2_neg: {
        record(deriv2(x).to_double(), xv);  // claim v < 0
        break;
      }
      case SweepKind::f3_pos: {
        const BigFloat v =
            use_finite_differences ? f3_fd(x, prec, fd_step) : f3_closed(x, prec);
        record((-v).to_double(), xv);
        break;
      }
      case SweepKind::sandwich: {
        // f''(x-1) < f(x+1) - 2 f(x) + f(x-1) < f''(x+1)
        const BigFloat one = BigFloat::of(1L, bits);
        const BigFloat d2 = f_closed(x + one, prec) -
                            mul_si(f_closed(x, prec), 2) + f_closed(x - one, prec);
        record((deriv2(x - one) - d2).to_double(), xv);
        record((d2 - deriv2(x + one)).to_double(), xv);
        break;
      }
    }
  }
  switch (kind) {
    case SweepKind::f1_pos: r.claim_id = std::string("f1-positive") + suffix; break;
    case SweepKind::f2_neg: r.claim_id = std::string("f2-negative") + suffix; break;
    case SweepKind::f3_pos: r.claim_id = std::string("f3-positive") + suffix; break;
    case SweepKind::sandwich: r.claim_id = std::string("dp-sandwich") + suffix; break;
  }
  r.verdict = violated ? Verdict::violated : Verdict::holds;
  return r;
}

}  // namespace overpart
