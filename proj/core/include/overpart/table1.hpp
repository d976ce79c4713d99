#pragma once

#include <array>
#include <string>
#include <vector>

#include "overpart/bigfloat.hpp"

namespace overpart {

/* Reference row: exact counts and the C values as printed (the number of
 * decimals varies per entry, so they are kept as strings). */
struct Table1Row {
  int n;
  long p;
  long ov;
  const char* c_p;
  const char* c_ov;
};

const std::array<Table1Row, 17>& table1_fixture();

struct Table1Cell {
  int n;
  mpz_class p, ov;
  std::string c_p, c_ov;        // computed, rendered like the fixture
  bool matches = false;
};

/* Round to `decimals` fractional digits, ties to even, fixed notation.
 * "-0" normalizes to "0". */
std::string render_c_value(const BigFloat& value, int decimals);

/* Recompute every row and diff against the fixture. */
std::vector<Table1Cell> compute_table1(const PrecisionContext& prec = PrecisionContext(192));

bool table1_matches(const std::vector<Table1Cell>& cells);

}  // namespace overpart
