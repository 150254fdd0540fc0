#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace parasphere {

// One per-angle row of a simulation table.
struct CorrelationRecord {
  double angle_deg = 0.0;        // theta (3-sphere) or eta (Mobius strip)
  double estimate = 0.0;
  double reference = 0.0;        // closed-form value at this angle
  double standard_error = 0.0;   // 1 / sqrt(n)
  std::uint64_t trials = 0;
  std::uint64_t c_pp = 0;
  std::uint64_t c_pm = 0;
  std::uint64_t c_mp = 0;
  std::uint64_t c_mm = 0;
  std::string estimator;         // "standard-score" or "coincidence"
};

inline constexpr const char* kCsvHeader =
    "theta_deg,estimate,reference,stderr,n,c_pp,c_pm,c_mp,c_mm,estimator";

struct RunMetadata {
  std::string command;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string version;
  // True when the raw-outcome product never varied across trials, i.e. the
  // coincidence estimator disagrees with the standard-score estimator.
  bool estimator_discrepancy = false;
};

// Fixed header plus one line per record; deterministic formatting, so equal
// inputs serialize to identical bytes.
std::string to_csv(std::span<const CorrelationRecord> records);

// Rows as an array of objects with the CSV field names, plus a metadata object.
std::string to_json(std::span<const CorrelationRecord> records, const RunMetadata& meta);

}  // namespace parasphere
