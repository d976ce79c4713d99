#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <filesystem>
#include <random>
#include <thread>

#include "overpart/sequences.hpp"

using namespace overpart;

namespace {

/* Brute-force oracles: walk every partition explicitly. */
long count_partitions_enum(long n, long max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (long first = std::min(n, max_part); first >= 1; --first)
    total += count_partitions_enum(n - first, first);
  return total;
}

long count_distinct_enum(long n, long max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (long first = std::min(n, max_part); first >= 1; --first)
    total += count_distinct_enum(n - first, first - 1);
  return total;
}

}  // namespace

TEST_CASE("partition numbers match brute-force enumeration up to 30") {
  for (long n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(partition_p(n) == count_partitions_enum(n, n));
  }
}

TEST_CASE("distinct-part counts match brute-force enumeration up to 30") {
  for (long n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(distinct_q(n) == count_distinct_enum(n, n));
  }
}

TEST_CASE("reference values") {
  CHECK(partition_p(0) == 1);
  CHECK(partition_p(4) == 5);
  CHECK(partition_p(30) == 5604);
  CHECK(partition_p(50) == 204226);
  CHECK(distinct_q(0) == 1);
  CHECK(distinct_q(4) == 2);
  CHECK(distinct_q(10) == 10);
  CHECK(distinct_q(30) == 296);
  CHECK(overpartition(0) == 1);
  CHECK(overpartition(4) == 14);
  CHECK(overpartition(50) == 10605564);
  CHECK(overpartition(200) == mpz_class("12055596613448604"));
  CHECK(overpartition(1000) ==
        mpz_class("1729358213749333758244155698123024617584"));
}

TEST_CASE("overpartition recurrence agrees with the convolution oracle") {
  const std::size_t n_max = 1000;
  const auto oracle = overpartition_oracle(n_max);
  REQUIRE(oracle.size() == n_max + 1);
  CHECK(oracle[0] == 1);
  CHECK(oracle[1] == 2);
  CHECK(oracle[2] == 4);
  CHECK(oracle[3] == 8);
  CHECK(oracle[4] == 14);
  CHECK(oracle[5] == 24);
  for (std::size_t n = 0; n <= n_max; ++n) {
    CAPTURE(n);
    REQUIRE(overpartition(n) == oracle[n]);
  }
}

TEST_CASE("overpartition parity and monotonicity") {
  SequenceTable& ov = shared_table(SequenceKind::overpartition);
  ov.extend_to(2000);
  for (std::size_t n = 1; n <= 2000; ++n) {
    CAPTURE(n);
    REQUIRE(ov.at(n) % 2 == 0);
    REQUIRE(ov.at(n) >= ov.at(n - 1));
    REQUIRE(ov.at(n) > 0);
  }
}

TEST_CASE("first eleven values of all three sequences") {
  const long p_ref[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  const long q_ref[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
  const long ov_ref[] = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(partition_p(n) == p_ref[n]);
    CHECK(distinct_q(n) == q_ref[n]);
    CHECK(overpartition(n) == ov_ref[n]);
  }
}

TEST_CASE("snapshot save and load round-trip") {
  namespace fs = std::filesystem;
  std::mt19937_64 rng(std::random_device{}());
  const fs::path path = fs::temp_directory_path() /
                        ("overpart-seqtable-" + std::to_string(rng()) + ".txt");
  SequenceTable table(SequenceKind::overpartition);
  table.extend_to(64);
  table.save(path);

  SequenceTable loaded = SequenceTable::load(path);
  CHECK(loaded.kind() == SequenceKind::overpartition);
  REQUIRE(loaded.computed_up_to() == 64);
  for (std::size_t n = 0; n <= 64; ++n) CHECK(loaded.at(n) == table.at(n));

  SUBCASE("corrupted header is rejected") {
    std::ofstream out(path);
    out << "not-a-table v9 kind=overpartition count=2\n1\n2\n";
    out.close();
    CHECK_THROWS(SequenceTable::load(path));
  }
  fs::remove(path);
}

TEST_CASE("completed prefix can be read while the table grows") {
  SequenceTable table(SequenceKind::overpartition);
  table.extend_to(128);
  std::thread writer([&] { table.extend_to(4000); });
  mpz_class checksum = 0;
  for (int pass = 0; pass < 50; ++pass) {
    const std::size_t upto = table.computed_up_to();
    checksum += table.at(upto >= 100 ? 100 : upto);
  }
  writer.join();
  CHECK(table.computed_up_to() >= 4000);
  CHECK(checksum > 0);
  CHECK(table.at(4000) == overpartition(4000));
}

TEST_CASE("reads beyond the computed prefix are rejected") {
  SequenceTable table(SequenceKind::partition_p);
  table.extend_to(10);
  CHECK_THROWS_AS((void)table.at(11), std::out_of_range);
}
