#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstddef>
#include <deque>
#include <filesystem>
#include <mutex>
#include <vector>

namespace overpart {

enum class SequenceKind { partition_p, distinct_q, overpartition };

const char* sequence_kind_name(SequenceKind kind);

/* Append-only memo table for one of the three counting sequences.
 *
 *   partition_p   p(n)  via the pentagonal-number recurrence
 *   distinct_q    q(n)  via the part-by-part product expansion
 *   overpartition ov(n) via ov(n) = 2 sum_{j>=1} (-1)^{j+1} ov(n - j^2),
 *                 which is the reciprocal of sum_{j in Z} (-1)^j q^{j^2}
 *
 * Extension takes the writer mutex; entries below computed_up_to() never
 * move afterwards (std::deque keeps references stable), so readers may
 * query the finished prefix concurrently with a writer extending the tail.
 */
class SequenceTable {
 public:
  explicit SequenceTable(SequenceKind kind);
  SequenceTable(SequenceTable&& o) noexcept
      : kind_(o.kind_), values_(std::move(o.values_)),
        count_(o.count_.load(std::memory_order_acquire)) {}

  SequenceKind kind() const { return kind_; }

  /* Highest index already computed (inclusive). */
  std::size_t computed_up_to() const {
    return count_.load(std::memory_order_acquire) - 1;
  }

  /* Read access to an already computed entry. */
  const mpz_class& at(std::size_t n) const;

  /* Ensure entries up to n exist.  Single writer at a time. */
  void extend_to(std::size_t n);

  /* extend_to + copy out. */
  mpz_class value(std::size_t n);

  /* Snapshot format: a one-line header
   *   overpart-seqtable v1 kind=<name> count=<entries>
   * followed by one decimal value per line, index 0 first. */
  void save(const std::filesystem::path& path) const;
  static SequenceTable load(const std::filesystem::path& path);

 private:
  void append_next_locked();

  SequenceKind kind_;
  std::deque<mpz_class> values_;
  std::atomic<std::size_t> count_;
  mutable std::mutex write_mutex_;
};

/* Process-wide shared table for each kind. */
SequenceTable& shared_table(SequenceKind kind);

/* Number of partitions of n. */
mpz_class partition_p(std::size_t n);
/* Number of partitions of n into distinct parts. */
mpz_class distinct_q(std::size_t n);
/* Number of overpartitions of n. */
mpz_class overpartition(std::size_t n);

/* ov(0..n_max) computed as the Cauchy product of q and p.  Shares no code
 * with the recurrence above; used only to cross-check it. */
std::vector<mpz_class> overpartition_oracle(std::size_t n_max);

}  // namespace overpart
