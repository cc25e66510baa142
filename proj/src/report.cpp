#include "report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace charlab {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kSigmaConvention =
    "fixes roots of unity of order coprime to p; raises p-power-order roots to their "
    "(1+p^alpha)-th power";

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = tok.find_last_not_of(" \t");
    out.push_back(tok.substr(a, b - a + 1));
  }
  return out;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["name"] = v.name;
  j["status"] = verdict_status_str(v.status);
  ordered_json flags = ordered_json::object();
  for (auto& [key, val] : v.subflags) flags[key] = val;
  j["subflags"] = flags;
  j["witnesses"] = v.witnesses;
  j["notes"] = v.notes;
  return j;
}

ordered_json audit_json(const AuditReport& a) {
  ordered_json items = ordered_json::array();
  for (const AuditItem& it : a.items) {
    ordered_json j;
    j["name"] = it.name;
    j["tried"] = it.tried;
    j["passed"] = it.passed;
    j["skipped"] = it.skipped;
    j["partial"] = it.partial;
    j["failures"] = it.failures;
    j["notes"] = it.notes;
    items.push_back(std::move(j));
  }
  return ordered_json{{"items", items}};
}

ordered_json profile_json(const RationalityProfile& prof) {
  ordered_json rows = ordered_json::array();
  for (const ProfileRow& r : prof.rows) {
    ordered_json j;
    j["index"] = r.index;
    j["degree"] = r.degree;
    j["conductor"] = r.conductor;
    j["level"] = r.level;
    j["p_prime_degree"] = r.p_prime_degree;
    j["in_b0"] = r.in_b0;
    rows.push_back(std::move(j));
  }
  ordered_json j;
  j["rows"] = rows;
  j["level_spectrum_all"] = prof.level_spectrum_all;
  j["level_spectrum_b0"] = prof.level_spectrum_b0;
  return j;
}

ordered_json group_report_json(const GroupReport& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["kind"] = "group";
  j["tool_version"] = kVersion;
  j["sigma_convention"] = kSigmaConvention;
  j["group"] = r.group_id;
  j["p"] = r.p;
  j["order"] = r.order;
  j["classes"] = r.classes;
  j["exponent"] = r.exponent;
  j["profile"] = profile_json(r.profile);
  ordered_json verdicts = ordered_json::array();
  for (const Verdict& v : r.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = verdicts;
  j["audit"] = r.audit ? audit_json(*r.audit) : ordered_json(nullptr);
  j["timing_ms"] = r.timing_ms ? ordered_json(*r.timing_ms) : ordered_json(nullptr);
  return j;
}

void render_profile_text(std::ostream& os, const RationalityProfile& prof) {
  os << "  idx  degree  conductor  level  p'-deg  B0\n";
  for (const ProfileRow& r : prof.rows) {
    os << "  " << std::setw(3) << r.index << "  " << std::setw(6) << r.degree << "  "
       << std::setw(9) << r.conductor << "  " << std::setw(5) << r.level << "  "
       << std::setw(6) << (r.p_prime_degree ? "yes" : "no") << "  "
       << (r.in_b0 ? "yes" : "no") << "\n";
  }
  auto spectrum = [](const std::set<int>& s) {
    std::ostringstream o;
    o << "{";
    bool first = true;
    for (int v : s) {
      if (!first) o << ",";
      first = false;
      o << v;
    }
    o << "}";
    return o.str();
  };
  os << "  p'-degree level spectrum: all=" << spectrum(prof.level_spectrum_all)
     << " b0=" << spectrum(prof.level_spectrum_b0) << "\n";
}

void render_verdict_text(std::ostream& os, const Verdict& v) {
  os << "  " << std::left << std::setw(22) << v.name << std::right << " "
     << verdict_status_str(v.status);
  if (!v.subflags.empty()) {
    os << "  [";
    bool first = true;
    for (auto& [k, val] : v.subflags) {
      if (!first) os << " ";
      first = false;
      os << k << "=" << (val ? "yes" : "no");
    }
    os << "]";
  }
  if (!v.notes.empty()) os << "  (" << v.notes << ")";
  os << "\n";
  for (const std::string& w : v.witnesses) os << "      " << w << "\n";
}

void render_audit_text(std::ostream& os, const AuditReport& a) {
  os << "audit:\n";
  for (const AuditItem& it : a.items) {
    os << "  " << std::left << std::setw(28) << it.name << std::right;
    if (it.skipped)
      os << " skipped";
    else
      os << " " << it.passed << "/" << it.tried;
    if (it.partial) os << " (partial)";
    if (!it.notes.empty()) os << "  (" << it.notes << ")";
    os << "\n";
    for (const std::string& f : it.failures) os << "      FAIL " << f << "\n";
  }
}

std::string group_report_text(const GroupReport& r) {
  std::ostringstream os;
  os << "group " << r.group_id << "  p=" << r.p << "  order=" << r.order
     << "  classes=" << r.classes << "  exponent=" << r.exponent << "\n";
  os << "profile:\n";
  render_profile_text(os, r.profile);
  if (!r.verdicts.empty()) {
    os << "verdicts:\n";
    for (const Verdict& v : r.verdicts) render_verdict_text(os, v);
  }
  if (r.audit) render_audit_text(os, *r.audit);
  if (r.timing_ms) os << "timing: " << *r.timing_ms << " ms\n";
  return os.str();
}

}  // namespace

CheckerSelection CheckerSelection::all() {
  CheckerSelection s;
  s.continuity_all = s.continuity_b0 = true;
  s.gap_frattini = s.gap_ppal = true;
  s.mckay = s.exponent = s.audit = true;
  return s;
}

CheckerSelection CheckerSelection::parse(const std::string& csv, const std::string& scope) {
  check(scope == "all" || scope == "b0", ErrKind::Input, "scope must be 'all' or 'b0'");
  if (csv.empty()) return all();
  CheckerSelection s;
  for (const std::string& tok : split_csv(csv)) {
    if (tok == "all")
      s = all();
    else if (tok == "continuity") {
      if (scope == "all")
        s.continuity_all = true;
      else
        s.continuity_b0 = true;
    } else if (tok == "continuity-all")
      s.continuity_all = true;
    else if (tok == "continuity-b0")
      s.continuity_b0 = true;
    else if (tok == "gap-frattini")
      s.gap_frattini = true;
    else if (tok == "gap-ppal")
      s.gap_ppal = true;
    else if (tok == "mckay")
      s.mckay = true;
    else if (tok == "exponent")
      s.exponent = true;
    else if (tok == "audit")
      s.audit = true;
    else
      fail_input("unknown checker token: " + tok);
  }
  return s;
}

std::string render_group_report(const GroupReport& r, const std::string& format) {
  if (format == "json") return group_report_json(r).dump(2) + "\n";
  check(format == "text", ErrKind::Input, "format must be 'json' or 'text'");
  return group_report_text(r);
}

std::string render_sweep_report(const SweepReport& r, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "sweep";
    j["tool_version"] = kVersion;
    j["sigma_convention"] = kSigmaConvention;
    ordered_json violations = ordered_json::array();
    for (const GroupReport& g : r.reports) {
      for (const Verdict& v : g.verdicts)
        if (v.failed())
          violations.push_back(
              ordered_json{{"group", g.group_id}, {"p", g.p}, {"checker", v.name}});
      if (g.audit && !g.audit->all_passed())
        violations.push_back(
            ordered_json{{"group", g.group_id}, {"p", g.p}, {"checker", "audit"}});
    }
    j["violations"] = violations;
    ordered_json errors = ordered_json::array();
    for (const SweepError& e : r.errors)
      errors.push_back(ordered_json{{"group", e.group_id}, {"error", e.message}});
    j["errors"] = errors;
    ordered_json reports = ordered_json::array();
    for (const GroupReport& g : r.reports) reports.push_back(group_report_json(g));
    j["reports"] = reports;
    j["timing_ms"] = r.timing_ms ? ordered_json(*r.timing_ms) : ordered_json(nullptr);
    return j.dump(2) + "\n";
  }
  check(format == "text", ErrKind::Input, "format must be 'json' or 'text'");
  std::ostringstream os;
  os << "sweep: " << r.reports.size() << " report(s), " << r.errors.size() << " error(s)\n";
  bool any = false;
  for (const GroupReport& g : r.reports) {
    for (const Verdict& v : g.verdicts)
      if (v.failed()) {
        os << "VIOLATION " << g.group_id << " p=" << g.p << " " << v.name << "\n";
        any = true;
      }
    if (g.audit && !g.audit->all_passed()) {
      os << "AUDIT FAILURE " << g.group_id << " p=" << g.p << "\n";
      any = true;
    }
  }
  if (!any) os << "no false verdicts\n";
  for (const SweepError& e : r.errors) os << "ERROR " << e.group_id << ": " << e.message << "\n";
  for (const GroupReport& g : r.reports) {
    os << "\n";
    os << group_report_text(g);
  }
  if (r.timing_ms) os << "total timing: " << *r.timing_ms << " ms\n";
  return os.str();
}

}  // namespace charlab
