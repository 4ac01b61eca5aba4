#ifndef BDUAL_CHECKS_HPP
#define BDUAL_CHECKS_HPP

// Uniform result record for verification routines. Every relation / law the
// library can verify reports one CheckItem; "skipped" marks checks that were
// deliberately not run (size caps, out-of-scope boundary cases) and never
// counts as a failure.

#include <string>
#include <vector>

namespace bdual {

struct CheckItem {
  std::string name;    // dotted path, e.g. "heckeB.braid3.H1H2"
  std::string status;  // "passed" | "failed" | "skipped"
  std::string detail;  // human-readable context or failure witness

  static CheckItem pass(std::string name, std::string detail = "") {
    return {std::move(name), "passed", std::move(detail)};
  }
  static CheckItem fail(std::string name, std::string detail = "") {
    return {std::move(name), "failed", std::move(detail)};
  }
  static CheckItem skip(std::string name, std::string detail = "") {
    return {std::move(name), "skipped", std::move(detail)};
  }
  static CheckItem require(bool ok, std::string name, std::string detail = "") {
    return ok ? pass(std::move(name), std::move(detail))
              : fail(std::move(name), std::move(detail));
  }
};

inline bool all_passed(const std::vector<CheckItem>& items) {
  for (const auto& it : items)
    if (it.status == "failed") return false;
  return true;
}

inline int count_status(const std::vector<CheckItem>& items,
                        const std::string& status) {
  int n = 0;
  for (const auto& it : items)
    if (it.status == status) ++n;
  return n;
}

}  // namespace bdual

#endif  // BDUAL_CHECKS_HPP
