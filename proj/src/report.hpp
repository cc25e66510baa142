#pragma once

#include <optional>

#include "conjectures.hpp"

namespace charlab {

struct CheckerSelection {
  bool continuity_all = false;
  bool continuity_b0 = false;
  bool gap_frattini = false;
  bool gap_ppal = false;
  bool mckay = false;
  bool exponent = false;
  bool audit = false;

  static CheckerSelection all();
  // Comma-separated tokens: continuity (scope decides), continuity-all,
  // continuity-b0, gap-frattini, gap-ppal, mckay, exponent, audit, all.
  // scope is "all" or "b0" and applies to the plain "continuity" token.
  static CheckerSelection parse(const std::string& csv, const std::string& scope);
  bool any() const {
    return continuity_all || continuity_b0 || gap_frattini || gap_ppal || mckay || exponent ||
           audit;
  }
};

struct GroupReport {
  std::string group_id;
  u64 p = 0;
  u64 order = 0;
  int classes = 0;
  u64 exponent = 1;
  RationalityProfile profile;
  std::vector<Verdict> verdicts;
  std::optional<AuditReport> audit;
  std::optional<double> timing_ms;

  bool any_failed() const {
    for (const Verdict& v : verdicts)
      if (v.failed()) return true;
    if (audit && !audit->all_passed()) return true;
    return false;
  }
};

struct SweepError {
  std::string group_id;
  std::string message;
};

struct SweepReport {
  std::vector<GroupReport> reports;  // sorted by (group id, p)
  std::vector<SweepError> errors;    // sorted by group id
  std::optional<double> timing_ms;

  bool any_failed() const {
    for (const GroupReport& r : reports)
      if (r.any_failed()) return true;
    return false;
  }
};

// format is "json" or "text"; output ends with a newline.
std::string render_group_report(const GroupReport& r, const std::string& format);
std::string render_sweep_report(const SweepReport& r, const std::string& format);

}  // namespace charlab
