#include "parasphere/record.hpp"

#include <cstdio>

#include "json.hpp"

namespace parasphere {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_csv(std::span<const CorrelationRecord> records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += fmt(r.angle_deg);
    out += ',';
    out += fmt(r.estimate);
    out += ',';
    out += fmt(r.reference);
    out += ',';
    out += fmt(r.standard_error);
    out += ',';
    out += std::to_string(r.trials);
    out += ',';
    out += std::to_string(r.c_pp);
    out += ',';
    out += std::to_string(r.c_pm);
    out += ',';
    out += std::to_string(r.c_mp);
    out += ',';
    out += std::to_string(r.c_mm);
    out += ',';
    out += r.estimator;
    out += '\n';
  }
  return out;
}

std::string to_json(std::span<const CorrelationRecord> records, const RunMetadata& meta) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    rows.push_back({{"theta_deg", r.angle_deg},
                    {"estimate", r.estimate},
                    {"reference", r.reference},
                    {"stderr", r.standard_error},
                    {"n", r.trials},
                    {"c_pp", r.c_pp},
                    {"c_pm", r.c_pm},
                    {"c_mp", r.c_mp},
                    {"c_mm", r.c_mm},
                    {"estimator", r.estimator}});
  }
  nlohmann::ordered_json doc = {{"rows", rows},
                                {"metadata",
                                 {{"command", meta.command},
                                  {"seed", meta.seed},
                                  {"workers", meta.workers},
                                  {"version", meta.version},
                                  {"estimator_discrepancy", meta.estimator_discrepancy}}}};
  return doc.dump(2) + "\n";
}

}  // namespace parasphere
