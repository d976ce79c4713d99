#include "overpart/claims.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace overpart {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::mixed: return "mixed";
  }
  return "?";
}

Verdict verdict_from_name(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "violated") return Verdict::violated;
  if (s == "mixed") return Verdict::mixed;
  throw std::invalid_argument("unknown verdict: " + s);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {
double parse_number(const std::string& s) { return std::stod(s); }

nlohmann::ordered_json claim_to_obj(const ClaimReport& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["range"] = {format_number(r.range_lo), format_number(r.range_hi)};
  j["verdict"] = verdict_name(r.verdict);
  j["worst_margin"] = format_number(r.worst_margin);
  j["witness"] = format_number(r.witness);
  return j;
}

ClaimReport claim_from_obj(const nlohmann::ordered_json& j) {
  ClaimReport r;
  r.claim_id = j.at("claim_id").get<std::string>();
  r.range_lo = parse_number(j.at("range").at(0).get<std::string>());
  r.range_hi = parse_number(j.at("range").at(1).get<std::string>());
  r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
  r.worst_margin = parse_number(j.at("worst_margin").get<std::string>());
  r.witness = parse_number(j.at("witness").get<std::string>());
  return r;
}
}  // namespace

std::string to_json(const ClaimReport& report) {
  return claim_to_obj(report).dump();
}

std::string to_json(const std::vector<ClaimReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(claim_to_obj(r));
  return arr.dump();
}

ClaimReport claim_from_json(const std::string& json) {
  return claim_from_obj(nlohmann::ordered_json::parse(json));
}

std::vector<ClaimReport> claims_from_json(const std::string& json) {
  auto arr = nlohmann::ordered_json::parse(json);
  std::vector<ClaimReport> out;
  for (const auto& j : arr) out.push_back(claim_from_obj(j));
  return out;
}

std::string csv_header() {
  return "claim_id,range_lo,range_hi,verdict,worst_margin,witness";
}

std::string to_csv_row(const ClaimReport& r) {
  return r.claim_id + "," + format_number(r.range_lo) + "," +
         format_number(r.range_hi) + "," + verdict_name(r.verdict) + "," +
         format_number(r.worst_margin) + "," + format_number(r.witness);
}

std::string to_csv(const std::vector<ClaimReport>& reports) {
  std::string out = csv_header() + "\n";
  for (const auto& r : reports) out += to_csv_row(r) + "\n";
  return out;
}

}  // namespace overpart
