#pragma once

#include <string>

#include "blocks.hpp"

namespace charlab {

enum class VerdictStatus { Holds, Fails, NotApplicable };

inline const char* verdict_status_str(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Fails: return "fails";
    default: return "not-applicable";
  }
}

struct Verdict {
  std::string name;
  u64 p = 0;
  VerdictStatus status = VerdictStatus::Holds;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, bool>> subflags;
  std::string notes;

  bool failed() const { return status == VerdictStatus::Fails; }
};

enum class Scope { All, PrincipalBlock };
enum class GapMode { Frattini, PrincipalBlock };

// Continuity of p-rationality levels over p'-degree rows: with alpha the
// largest scoped level, every beta in [2, alpha] must occur.
Verdict check_continuity(const RationalityProfile& prof, Scope scope);

// Local structure K = N_G(P)/Phi(P) (Frattini mode) or
// K = N_G(P)/(O_p'(N_G(P)) Phi(P)) (principal-block mode), with Q the image
// of P in K.
struct LocalData {
  PermGroup p_sylow;
  PermGroup normalizer_p;
  QuotientMap to_k;  // quotient of normalizer_p
  PermGroup q_image; // image of the Sylow subgroup in K
};
LocalData build_local_data(const PermGroup& g, u64 p, GapMode mode,
                           u64 bound = kDefaultEnumerationBound);

struct ConditionI {
  bool holds = true;
  std::vector<std::string> witnesses;
};
ConditionI level_one_condition_i(const RationalityProfile& prof, Scope scope);

struct ConditionII {
  bool vacuous = false;  // p = 2 or trivial Q
  bool holds_a = true;
  bool holds_b = true;
  std::vector<std::string> witnesses;
  bool holds() const { return holds_a && holds_b; }
};
ConditionII level_one_condition_ii(const PermGroup& g, u64 p, GapMode mode,
                                   u64 bound = kDefaultEnumerationBound);

// The level-1 gap equivalence: condition (i) (no p'-degree row of level
// exactly 1; scoped to the principal block in principal-block mode) must
// agree with the local condition (ii).
Verdict check_level_one_gap(const CharacterTable& t, const RationalityProfile& prof, u64 p,
                            GapMode mode, u64 bound = kDefaultEnumerationBound);

// Multisets of (p-part of conductor, principal-block flag) over p'-degree
// rows of G and of N_G(P) must coincide.
Verdict check_mckay_multiset(const CharacterTable& t, const RationalityProfile& prof, u64 p,
                             u64 bound = kDefaultEnumerationBound);

// When exp(P/P') >= p^2: the largest p'-degree level equals v_p(exp(P/P'))
// and is attained inside the principal block.
Verdict check_exponent_bound(const CharacterTable& t, const RationalityProfile& prof, u64 p,
                             u64 bound = kDefaultEnumerationBound);

struct AuditItem {
  std::string name;
  int tried = 0;
  int passed = 0;
  bool skipped = false;
  bool partial = false;
  std::vector<std::string> failures;
  std::string notes;
};

struct AuditReport {
  std::vector<AuditItem> items;
  bool all_passed() const {
    for (const AuditItem& it : items)
      if (!it.failures.empty()) return false;
    return true;
  }
};

// Instance checks of statements that are theorems: failures indicate engine
// bugs and carry replayable payloads. Inapplicable audits are reported as
// skipped.
AuditReport theorem_audit(const CharacterTable& t, const RationalityProfile& prof, u64 p,
                          u64 bound = kDefaultEnumerationBound);

}  // namespace charlab
