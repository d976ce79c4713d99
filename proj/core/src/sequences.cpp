#include "overpart/sequences.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace overpart {

const char* sequence_kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::partition_p: return "partition_p";
    case SequenceKind::distinct_q: return "distinct_q";
    case SequenceKind::overpartition: return "overpartition";
  }
  return "?";
}

namespace {
SequenceKind kind_from_name(const std::string& s) {
  if (s == "partition_p") return SequenceKind::partition_p;
  if (s == "distinct_q") return SequenceKind::distinct_q;
  if (s == "overpartition") return SequenceKind::overpartition;
  throw std::invalid_argument("unknown sequence kind: " + s);
}

/* Coefficient of x^m in prod (1-x^i): (-1)^j when 24m+1 = (6j-1)^2 or
 * (6j+1)^2, zero otherwise. */
int pentagonal_coefficient(std::size_t m) {
  if (m == 0) return 1;
  const unsigned long long t = 24ULL * m + 1;
  unsigned long long r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(t)));
  while (r * r > t) --r;
  while ((r + 1) * (r + 1) <= t) ++r;
  if (r * r != t) return 0;
  if (r % 6 != 1 && r % 6 != 5) return 0;
  const unsigned long long j = (r % 6 == 5) ? (r + 1) / 6 : (r - 1) / 6;
  return (j % 2 == 0) ? 1 : -1;
}
}  // namespace

SequenceTable::SequenceTable(SequenceKind kind) : kind_(kind), count_(0) {
  values_.emplace_back(1);  // all three sequences start at 1
  count_.store(1, std::memory_order_release);
}

const mpz_class& SequenceTable::at(std::size_t n) const {
  if (n >= count_.load(std::memory_order_acquire))
    throw std::out_of_range("SequenceTable::at beyond computed prefix");
  return values_[n];
}

void SequenceTable::extend_to(std::size_t n) {
  if (n < count_.load(std::memory_order_acquire)) return;
  std::lock_guard<std::mutex> lock(write_mutex_);
  while (count_.load(std::memory_order_relaxed) <= n) append_next_locked();
}

mpz_class SequenceTable::value(std::size_t n) {
  extend_to(n);
  return values_[n];
}

void SequenceTable::append_next_locked() {
  const std::size_t n = count_.load(std::memory_order_relaxed);
  mpz_class next(0);
  switch (kind_) {
    case SequenceKind::partition_p: {
      // p(n) = sum_j (-1)^{j+1} [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ]
      for (std::size_t j = 1;; ++j) {
        const std::size_t g1 = j * (3 * j - 1) / 2;
        const std::size_t g2 = j * (3 * j + 1) / 2;
        if (g1 > n) break;
        if (j % 2 == 1) {
          next += values_[n - g1];
          if (g2 <= n) next += values_[n - g2];
        } else {
          next -= values_[n - g1];
          if (g2 <= n) next -= values_[n - g2];
        }
      }
      break;
    }
    case SequenceKind::distinct_q: {
      // prod (1+x^i) = E(x^2)/E(x) with E the pentagonal series, so
      // q(n) = e(n/2) + sum_j (-1)^{j+1} [ q(n - j(3j-1)/2) + q(n - j(3j+1)/2) ]
      // where e(m) is the pentagonal-number-theorem coefficient of E.
      for (std::size_t j = 1;; ++j) {
        const std::size_t g1 = j * (3 * j - 1) / 2;
        const std::size_t g2 = j * (3 * j + 1) / 2;
        if (g1 > n) break;
        if (j % 2 == 1) {
          next += values_[n - g1];
          if (g2 <= n) next += values_[n - g2];
        } else {
          next -= values_[n - g1];
          if (g2 <= n) next -= values_[n - g2];
        }
      }
      if (n % 2 == 0) next += pentagonal_coefficient(n / 2);
      break;
    }
    case SequenceKind::overpartition: {
      // ov(n) = 2 sum_{j^2 <= n} (-1)^{j+1} ov(n - j^2)
      for (std::size_t j = 1; j * j <= n; ++j) {
        if (j % 2 == 1)
          next += values_[n - j * j];
        else
          next -= values_[n - j * j];
      }
      next *= 2;
      break;
    }
  }
  values_.push_back(std::move(next));
  count_.store(values_.size(), std::memory_order_release);
}

void SequenceTable::save(const std::filesystem::path& path) const {
  const std::size_t count = count_.load(std::memory_order_acquire);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "overpart-seqtable v1 kind=" << sequence_kind_name(kind_)
      << " count=" << count << "\n";
  for (std::size_t i = 0; i < count; ++i) out << values_[i].get_str() << "\n";
  if (!out) throw std::runtime_error("short write to " + path.string());
}

SequenceTable SequenceTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string magic, version, kind_field, count_field;
  in >> magic >> version >> kind_field >> count_field;
  if (magic != "overpart-seqtable" || version != "v1" ||
      kind_field.rfind("kind=", 0) != 0 || count_field.rfind("count=", 0) != 0)
    throw std::runtime_error("bad snapshot header in " + path.string());
  SequenceTable table(kind_from_name(kind_field.substr(5)));
  const std::size_t count = std::stoull(count_field.substr(6));
  std::string line;
  std::getline(in, line);  // rest of header line
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("snapshot truncated at index " + std::to_string(i));
    mpz_class v(line, 10);
    if (i == 0) {
      if (v != 1) throw std::runtime_error("snapshot index 0 must be 1");
      continue;
    }
    table.values_.push_back(std::move(v));
  }
  table.count_.store(count, std::memory_order_release);
  return table;
}

SequenceTable& shared_table(SequenceKind kind) {
  static SequenceTable p(SequenceKind::partition_p);
  static SequenceTable q(SequenceKind::distinct_q);
  static SequenceTable ov(SequenceKind::overpartition);
  switch (kind) {
    case SequenceKind::partition_p: return p;
    case SequenceKind::distinct_q: return q;
    case SequenceKind::overpartition: return ov;
  }
  return ov;
}

mpz_class partition_p(std::size_t n) {
  return shared_table(SequenceKind::partition_p).value(n);
}

mpz_class distinct_q(std::size_t n) {
  return shared_table(SequenceKind::distinct_q).value(n);
}

mpz_class overpartition(std::size_t n) {
  return shared_table(SequenceKind::overpartition).value(n);
}

std::vector<mpz_class> overpartition_oracle(std::size_t n_max) {
  // Independent route: ov = q * p as a Cauchy product of the two factor
  // series of prod (1+x^i)/(1-x^i).
  SequenceTable& pt = shared_table(SequenceKind::partition_p);
  SequenceTable& qt = shared_table(SequenceKind::distinct_q);
  pt.extend_to(n_max);
  qt.extend_to(n_max);
  std::vector<mpz_class> out(n_max + 1, mpz_class(0));
  for (std::size_t k = 0; k <= n_max; ++k) {
    const mpz_class& qk = qt.at(k);
    if (qk == 0) continue;
    for (std::size_t j = 0; j + k <= n_max; ++j)
      out[k + j] += qk * pt.at(j);
  }
  return out;
}

}  // namespace overpart
