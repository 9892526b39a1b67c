#pragma once

#include <string>
#include <vector>

namespace selman {

enum class Verdict { Pass, Fail, Unverified };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Unverified: return "UNVERIFIED";
  }
  return "?";
}

/// One validated condition. `id` is stable and unique within a report;
/// `tag` names the axiom it mechanizes ("a2", "b1", "c3", ...), empty for
/// plumbing checks. `detail` carries the witness on failure.
struct CheckResult {
  std::string id;
  Verdict verdict = Verdict::Pass;
  std::string tag;
  std::string detail;

  bool passed() const { return verdict == Verdict::Pass; }
};

struct Report {
  std::vector<CheckResult> checks;

  void add(std::string id, bool passed, std::string tag = {},
           std::string detail = {}) {
    checks.push_back({std::move(id), passed ? Verdict::Pass : Verdict::Fail,
                      std::move(tag), std::move(detail)});
  }
  void add_unverified(std::string id, std::string tag = {},
                      std::string detail = {}) {
    checks.push_back(
        {std::move(id), Verdict::Unverified, std::move(tag), std::move(detail)});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  /// Unverified entries are surfaced but do not fail the report.
  bool all_passed() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail) return &c;
    return nullptr;
  }
};

}  // namespace selman
