#ifndef BDUAL_REPORT_HPP
#define BDUAL_REPORT_HPP

// JSON report assembly. Every CLI run emits one envelope:
//
//   {
//     "schema": 1,
//     "tool_version": "...",
//     "seed": <integer>,
//     "config": { subcommand parameters },
//     "checks": [ { "name", "status", "detail",
//                   optional "dimensions" / "points" / "wall_ms" }, ... ]
//   }
//
// Reports are deterministic: keys keep insertion order, integers only, and
// wall-clock timings are included solely when requested (they are the only
// nondeterministic field).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bdual/checks.hpp"

namespace bdual {

inline const char* tool_version() { return "1.0.0"; }

struct ReportEntry {
  CheckItem item;
  std::map<std::string, int64_t> dimensions;  // optional structured results
  std::vector<std::string> points;            // evaluation points, if any
  int64_t wall_ms = -1;                       // -1: not measured / suppressed
};

inline ReportEntry entry_of(CheckItem item) {
  ReportEntry e;
  e.item = std::move(item);
  return e;
}

inline std::vector<ReportEntry> entries_of(std::vector<CheckItem> items) {
  std::vector<ReportEntry> out;
  out.reserve(items.size());
  for (auto& it : items) out.push_back(entry_of(std::move(it)));
  return out;
}

inline bool any_failed(const std::vector<ReportEntry>& entries) {
  for (const auto& e : entries)
    if (e.item.status == "failed") return true;
  return false;
}

// config: subcommand parameters in fixed key order (caller builds it).
inline nlohmann::ordered_json build_report(
    const nlohmann::ordered_json& config, uint64_t seed,
    const std::vector<ReportEntry>& entries, bool with_timings) {
  nlohmann::ordered_json root;
  root["schema"] = 1;
  root["tool_version"] = tool_version();
  root["seed"] = seed;
  root["config"] = config;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json c;
    c["name"] = e.item.name;
    c["status"] = e.item.status;
    c["detail"] = e.item.detail;
    if (!e.dimensions.empty()) {
      nlohmann::ordered_json dims;
      for (const auto& [k, v] : e.dimensions) dims[k] = v;
      c["dimensions"] = dims;
    }
    if (!e.points.empty()) c["points"] = e.points;
    if (with_timings && e.wall_ms >= 0) c["wall_ms"] = e.wall_ms;
    checks.push_back(std::move(c));
  }
  root["checks"] = std::move(checks);
  return root;
}

inline std::string render_report(const nlohmann::ordered_json& report) {
  return report.dump(2) + "\n";
}

}  // namespace bdual

#endif  // BDUAL_REPORT_HPP
