#include "overpart/table1.hpp"

#include <cstring>

#include "overpart/logconcave.hpp"
#include "overpart/sequences.hpp"

namespace overpart {

const std::array<Table1Row, 17>& table1_fixture() {
  static const std::array<Table1Row, 17> rows = {{
      {2, 2, 4, "-0.287682", "0"},
      {3, 3, 8, "0.105361", "-0.133531"},
      {4, 5, 14, "-0.174353", "-0.0206193"},
      {5, 7, 24, "0.115513", "-0.0281709"},
      {6, 11, 40, "-0.14183", "-0.040822"},
      {7, 15, 64, "0.0728373", "-0.0237165"},
      {8, 22, 100, "-0.0728373", "-0.0145047"},
      {9, 30, 154, "0.0263173", "-0.0219976"},
      {10, 42, 232, "-0.0487902", "-0.0158805"},
      {15, 176, 1472, "0.0067245", "-0.0103469"},
      {20, 627, 7336, "-0.0129263", "-0.0062498"},
      {25, 1958, 31066, "0.000765534", "-0.0047666"},
      {30, 5604, 116624, "-0.00546266", "-0.0037539"},
      {35, 14883, 398640, "-0.000934141", "-0.00300351"},
      {40, 37338, 1263272, "-0.00273332", "-0.00250508"},
      {45, 89134, 3759240, "-0.00120242", "-0.00212943"},
      {50, 204226, 10605564, "-0.00173137", "-0.0018351"},
  }};
  return rows;
}

std::string render_c_value(const BigFloat& value, int decimals) {
  // scale by 10^d and let mpfr_rint round to nearest, ties to even
  BigFloat scaled(value.prec());
  mpfr_ui_pow_ui(scaled.raw(), 10, static_cast<unsigned long>(decimals), MPFR_RNDN);
  mpfr_mul(scaled.raw(), scaled.raw(), value.raw(), MPFR_RNDN);
  mpz_class z = scaled.round_to_integer();
  const bool negative = z < 0;
  std::string digits = mpz_class(abs(z)).get_str();
  if (decimals == 0) return (negative ? "-" : "") + digits;
  if (static_cast<int>(digits.size()) <= decimals)
    digits.insert(0, decimals + 1 - digits.size(), '0');
  digits.insert(digits.size() - decimals, ".");
  if (z == 0) return digits;  // rounded to zero: no sign
  return (negative ? "-" : "") + digits;
}

namespace {
int decimals_of(const char* printed) {
  const char* dot = std::strchr(printed, '.');
  return dot ? static_cast<int>(std::strlen(dot + 1)) : 0;
}
}  // namespace

std::vector<Table1Cell> compute_table1(const PrecisionContext& prec) {
  SequenceTable& pt = shared_table(SequenceKind::partition_p);
  SequenceTable& ovt = shared_table(SequenceKind::overpartition);
  std::vector<Table1Cell> out;
  for (const Table1Row& row : table1_fixture()) {
    Table1Cell cell;
    cell.n = row.n;
    cell.p = pt.value(row.n);
    cell.ov = ovt.value(row.n);
    cell.c_p = render_c_value(c_operator(pt, row.n, prec), decimals_of(row.c_p));
    cell.c_ov = render_c_value(c_operator(ovt, row.n, prec), decimals_of(row.c_ov));
    cell.matches = cell.p == row.p && cell.ov == row.ov && cell.c_p == row.c_p &&
                   cell.c_ov == row.c_ov;
    out.push_back(std::move(cell));
  }
  return out;
}

bool table1_matches(const std::vector<Table1Cell>& cells) {
  for (const auto& c : cells)
    if (!c.matches) return false;
  return !cells.empty();
}

}  // namespace overpart
