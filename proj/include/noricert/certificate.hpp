#pragma once

// Machine-checkable verification records shared by every module.

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noricert/rational.hpp"

namespace noricert {

/// Outcome of a certificate. Ordered by severity so that combining two
/// outcomes keeps the worse one.
enum class Verdict {
  certified,  ///< every check passed
  skipped,    ///< a prerequisite certificate was not available
  exhausted,  ///< subdivision budget ran out; nothing was claimed
  refuted,    ///< a check failed definitively
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::skipped: return "skipped";
    case Verdict::exhausted: return "exhausted";
    case Verdict::refuted: return "refuted";
  }
  return "unknown";
}

inline Verdict worst(Verdict a, Verdict b) { return std::max(a, b); }

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Certificate {
  std::string kind;
  std::optional<int> index;
  Verdict verdict = Verdict::certified;
  std::string failed_stage;
  std::vector<Check> checks;
  std::optional<Rational> margin;
  std::size_t subdivisions = 0;
  nlohmann::json evidence = nlohmann::json::object();

  Certificate() = default;
  explicit Certificate(std::string k, std::optional<int> idx = std::nullopt)
      : kind(std::move(k)), index(idx) {}

  [[nodiscard]] bool ok() const { return verdict == Verdict::certified; }

  /// Records a check; a failed check refutes the certificate.
  bool check(std::string name, bool passed, std::string detail = {}) {
    if (!passed) fail(Verdict::refuted, name);
    checks.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  }

  /// Downgrades the verdict, remembering the first stage that failed.
  void fail(Verdict v, const std::string& stage) {
    if (v == Verdict::certified) return;
    if (failed_stage.empty()) failed_stage = stage;
    verdict = worst(verdict, v);
  }

  /// Folds a sub-certificate in under the given stage name.
  void absorb(const Certificate& sub, const std::string& stage) {
    checks.push_back({stage, sub.ok(), sub.kind + ": " + to_string(sub.verdict)});
    fail(sub.verdict, stage);
  }

  void note_margin(const Rational& m) {
    if (!margin || m < *margin) margin = m;
  }
};

using CheckReport = Certificate;

inline void to_json(nlohmann::json& j, const Check& c) {
  j = nlohmann::json{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
}

inline void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json{{"kind", c.kind}, {"verdict", to_string(c.verdict)}};
  if (c.index) j["index"] = *c.index;
  if (!c.failed_stage.empty()) j["failed_stage"] = c.failed_stage;
  if (c.margin) j["margin"] = to_string(*c.margin);
  if (c.subdivisions != 0) j["subdivisions"] = c.subdivisions;
  j["checks"] = c.checks;
  if (!c.evidence.empty()) j["evidence"] = c.evidence;
}

}  // namespace noricert
