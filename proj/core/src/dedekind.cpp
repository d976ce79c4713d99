#include "overpart/dedekind.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace overpart {

mpq_class dedekind_sum(long h, unsigned long k) {
  if (k == 0) throw std::invalid_argument("dedekind_sum: k must be positive");
  long hm = h % static_cast<long>(k);
  if (hm < 0) hm += static_cast<long>(k);
  const unsigned long hh = static_cast<unsigned long>(hm);
  if (std::gcd(hh == 0 ? k : hh, k) != 1)
    throw std::invalid_argument("dedekind_sum: gcd(h,k) must be 1");

  // sum r (hr mod k) / k^2  -  (k-1)/4
  mpz_class acc(0);
  unsigned long hr = 0;
  for (unsigned long r = 1; r < k; ++r) {
    hr += hh;
    if (hr >= k) hr -= k;
    acc += mpz_class(r) * hr;
  }
  mpq_class result(acc, mpz_class(k) * k);
  result -= mpq_class(k - 1, 4);
  result.canonicalize();
  return result;
}

namespace {
mpq_class reduce_mod2(mpq_class t) {
  // t - 2*floor(t/2), canonical representative in [0,2)
  mpz_class twice_den = 2 * t.get_den();
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(), twice_den.get_mpz_t());
  t -= 2 * mpq_class(q);
  t.canonicalize();
  return t;
}
}  // namespace

UnityRoot::UnityRoot(mpq_class exponent) : exponent_(reduce_mod2(std::move(exponent))) {}

UnityRoot UnityRoot::operator*(const UnityRoot& o) const {
  return UnityRoot(exponent_ + o.exponent_);
}

UnityRoot UnityRoot::operator/(const UnityRoot& o) const {
  return UnityRoot(exponent_ - o.exponent_);
}

TrackedReal UnityRoot::real_part(long prec) const {
  TrackedReal t = TrackedReal::of(exponent_, prec);
  return cos(t * TrackedReal::pi(prec));
}

TrackedReal UnityRoot::imag_part(long prec) const {
  TrackedReal t = TrackedReal::of(exponent_, prec);
  return sin(t * TrackedReal::pi(prec));
}

UnityRoot omega(long h, unsigned long k) {
  return UnityRoot(dedekind_sum(h, k));
}

namespace {

/* Per-k phase table: (h, exponent of w(h,k)^2 / w(2h mod k, k)). */
struct PhaseTable {
  std::vector<std::pair<unsigned long, mpq_class>> entries;
};

const PhaseTable& phase_table(unsigned long k) {
  static std::map<unsigned long, PhaseTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  PhaseTable table;
  for (unsigned long h = 0; h < k; ++h) {
    if (std::gcd(h == 0 ? k : h, k) != 1) continue;
    const UnityRoot ratio =
        omega(static_cast<long>(h), k).squared() /
        omega(static_cast<long>((2 * h) % k), k);
    table.entries.emplace_back(h, ratio.exponent());
  }
  return cache.emplace(k, std::move(table)).first->second;
}

AkValue a_hat_uncached(unsigned long k, unsigned long n, long prec) {
  AkValue out;
  out.k = k;
  out.n = n;
  out.prec_bits = prec;
  TrackedReal re = TrackedReal::of(0L, prec);
  TrackedReal im = TrackedReal::of(0L, prec);
  const TrackedReal pi = TrackedReal::pi(prec);
  for (const auto& [h, t0] : phase_table(k).entries) {
    // total exponent t0 - 2 n h / k, reduced mod 2 while exact
    mpq_class t = reduce_mod2(t0 - mpq_class(2 * mpz_class(n) * h, k));
    TrackedReal arg = TrackedReal::of(t, prec) * pi;
    re = re + cos(arg);
    im = im + sin(arg);
  }
  out.re = re.value();
  out.im = im.value();
  BigFloat e(64);
  mpfr_max(e.raw(), re.error().raw(), im.error().raw(), MPFR_RNDU);
  out.err = e;
  return out;
}

}  // namespace

AkValue a_hat(unsigned long k, unsigned long n, const PrecisionContext& prec) {
  if (k % 2 == 0) throw std::invalid_argument("a_hat: k must be odd");
  static std::map<std::pair<unsigned long, unsigned long>, AkValue> cache;
  static std::mutex mu;
  const std::pair<unsigned long, unsigned long> key{k, n % k};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second.prec_bits >= prec.bits()) {
      AkValue v = it->second;
      v.n = n;
      return v;
    }
  }
  AkValue fresh = a_hat_uncached(k, n % k, prec.bits());
  {
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = fresh;
  }
  fresh.n = n;
  return fresh;
}

AkValue a_hat_direct(unsigned long k, unsigned long n, const PrecisionContext& prec) {
  if (k % 2 == 0) throw std::invalid_argument("a_hat_direct: k must be odd");
  const long bits = prec.bits();
  AkValue out;
  out.k = k;
  out.n = n;
  out.prec_bits = bits;
  TrackedReal re = TrackedReal::of(0L, bits);
  TrackedReal im = TrackedReal::of(0L, bits);
  const TrackedReal pi = TrackedReal::pi(bits);
  for (unsigned long h = 0; h < k; ++h) {
    if (std::gcd(h == 0 ? k : h, k) != 1) continue;
    const mpq_class sh = dedekind_sum(static_cast<long>(h), k);
    const mpq_class s2h = dedekind_sum(static_cast<long>((2 * h) % k), k);
    TrackedReal phase =
        pi * TrackedReal::of(mpq_class(2) * sh - s2h, bits) -
        pi * TrackedReal::of(mpq_class(2 * mpz_class(n) * h, k), bits);
    re = re + cos(phase);
    im = im + sin(phase);
  }
  out.re = re.value();
  out.im = im.value();
  BigFloat e(64);
  mpfr_max(e.raw(), re.error().raw(), im.error().raw(), MPFR_RNDU);
  out.err = e;
  return out;
}

}  // namespace overpart
