#pragma once

#include <string>
#include <vector>

namespace overpart {

enum class Verdict { holds, violated, mixed };

const char* verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& s);

/* One verified (or merely observed) inequality over a scanned range.
 * Margins follow the convention "margin <= 0 means the inequality held
 * with that slack"; worst_margin is the maximum margin over the range and
 * witness is where it occurred.  Ranges and witnesses are doubles so the
 * same record covers integer sweeps and real grid sweeps. */
struct ClaimReport {
  std::string claim_id;
  double range_lo = 0;
  double range_hi = 0;
  Verdict verdict = Verdict::holds;
  double worst_margin = 0;
  double witness = 0;
};

/* Serialization: every number is rendered as a decimal string ("%.17g",
 * which round-trips doubles exactly), so consumers never need 64-bit
 * floats or integers to parse reports. */
std::string to_json(const ClaimReport& report);
std::string to_json(const std::vector<ClaimReport>& reports);
ClaimReport claim_from_json(const std::string& json);
std::vector<ClaimReport> claims_from_json(const std::string& json);

std::string csv_header();
std::string to_csv_row(const ClaimReport& report);
std::string to_csv(const std::vector<ClaimReport>& reports);

std::string format_number(double v);

}  // namespace overpart
