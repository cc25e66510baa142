#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conjectures.hpp"

using namespace charlab;

namespace {

PermGroup modular27() {
  // order 27, exponent 9: a = 9-cycle, b: x -> 4x mod 9.
  std::vector<int> a(9), b(9);
  for (int i = 0; i < 9; ++i) {
    a[i] = (i + 1) % 9;
    b[i] = (4 * i) % 9;
  }
  return PermGroup::from_generators(9, {Perm(std::move(a)), Perm(std::move(b))});
}

PermGroup g216() {
  return semidirect_elementary(3, 3, dihedral_group(8),
                               {{0, 2, 0, 1, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 2, 0, 0, 0, 1}});
}

bool subflag(const Verdict& v, const std::string& key) {
  for (auto& [k, val] : v.subflags)
    if (k == key) return val;
  FAIL("missing subflag " << key);
  return false;
}

}  // namespace

TEST_CASE("continuity checker") {
  CharacterTable c27 = character_table(cyclic_group(27));
  RationalityProfile prof = rationality_profile(c27, 3);
  CHECK(prof.level_spectrum_all == std::set<int>{0, 1, 2, 3});
  CHECK(check_continuity(prof, Scope::All).status == VerdictStatus::Holds);
  CHECK(check_continuity(prof, Scope::PrincipalBlock).status == VerdictStatus::Holds);

  CharacterTable d24 = character_table(dihedral_group(24));
  RationalityProfile d24p = rationality_profile(d24, 3);
  CHECK(check_continuity(d24p, Scope::PrincipalBlock).status == VerdictStatus::Holds);
  CHECK(check_continuity(d24p, Scope::All).status == VerdictStatus::Holds);

  // A manufactured gap: remove level 2 from a {0,2,3} spectrum and the
  // checker must fail with the missing level as witness.
  RationalityProfile fake;
  fake.p = 3;
  fake.level_spectrum_all = {0, 3};
  Verdict v = check_continuity(fake, Scope::All);
  CHECK(v.status == VerdictStatus::Fails);
  REQUIRE(v.witnesses.size() == (std::size_t)1);
  CHECK(v.witnesses[0].find("beta=2") != std::string::npos);
}

TEST_CASE("level-one condition (i)") {
  CharacterTable c3 = character_table(cyclic_group(3));
  ConditionI ci = level_one_condition_i(rationality_profile(c3, 3), Scope::All);
  CHECK(!ci.holds);
  CHECK(ci.witnesses.size() == 2);

  CharacterTable s3 = character_table(symmetric_group(3));
  CHECK(level_one_condition_i(rationality_profile(s3, 3), Scope::All).holds);

  CharacterTable d24 = character_table(dihedral_group(24));
  RationalityProfile prof = rationality_profile(d24, 3);
  CHECK(level_one_condition_i(prof, Scope::PrincipalBlock).holds);
  CHECK(!level_one_condition_i(prof, Scope::All).holds);
}

TEST_CASE("level-one condition (ii)") {
  // C3: N_K(<y>)/C_K(y) is trivial, not Aut(C3).
  ConditionII c3 = level_one_condition_ii(cyclic_group(3), 3, GapMode::Frattini);
  CHECK(!c3.holds_a);
  CHECK(!c3.holds());

  // D24 frattini mode: (a) holds, (b) fails (a reflection inverts C_K(y)/Q).
  ConditionII d24f = level_one_condition_ii(dihedral_group(24), 3, GapMode::Frattini);
  CHECK(d24f.holds_a);
  CHECK(!d24f.holds_b);

  // D24 principal-block mode: K = S3, everything holds.
  ConditionII d24p = level_one_condition_ii(dihedral_group(24), 3, GapMode::PrincipalBlock);
  CHECK(d24p.holds_a);
  CHECK(d24p.holds_b);

  // p = 2 is vacuous.
  CHECK(level_one_condition_ii(symmetric_group(4), 2, GapMode::Frattini).vacuous);
}

TEST_CASE("level-one gap equivalence") {
  auto run = [](const PermGroup& g, u64 p, GapMode mode) {
    CharacterTable t = character_table(g);
    return check_level_one_gap(t, rationality_profile(t, p), p, mode);
  };

  Verdict s3 = run(symmetric_group(3), 3, GapMode::Frattini);
  CHECK(s3.status == VerdictStatus::Holds);
  CHECK(subflag(s3, "i"));
  CHECK(subflag(s3, "ii.a"));
  CHECK(subflag(s3, "ii.b"));

  Verdict c3 = run(cyclic_group(3), 3, GapMode::Frattini);
  CHECK(c3.status == VerdictStatus::Holds);  // both sides fail -> equivalence
  CHECK(!subflag(c3, "i"));
  CHECK(!subflag(c3, "ii.a"));

  Verdict dic = run(semidirect_elementary(3, 1, cyclic_group(4), {{2}}), 3, GapMode::Frattini);
  CHECK(dic.status == VerdictStatus::Holds);
  CHECK(subflag(dic, "i"));
  CHECK(subflag(dic, "ii.a"));
  CHECK(subflag(dic, "ii.b"));

  Verdict d24f = run(dihedral_group(24), 3, GapMode::Frattini);
  CHECK(d24f.status == VerdictStatus::Holds);
  CHECK(!subflag(d24f, "i"));
  CHECK(subflag(d24f, "ii.a"));
  CHECK(!subflag(d24f, "ii.b"));

  Verdict d24p = run(dihedral_group(24), 3, GapMode::PrincipalBlock);
  CHECK(d24p.status == VerdictStatus::Holds);
  CHECK(subflag(d24p, "i"));
  CHECK(subflag(d24p, "ii.a"));
  CHECK(subflag(d24p, "ii.b"));
}

TEST_CASE("normal Sylow groups satisfy the gap equivalence") {
  // Theorem instances: every group here has a normal Sylow p-subgroup.
  std::vector<std::pair<PermGroup, u64>> cases;
  cases.push_back({cyclic_group(3), 3});
  cases.push_back({cyclic_group(9), 3});
  cases.push_back({cyclic_group(27), 3});
  cases.push_back({symmetric_group(3), 3});
  cases.push_back({dihedral_group(18), 3});
  cases.push_back({dihedral_group(24), 3});
  cases.push_back({semidirect_elementary(3, 1, cyclic_group(4), {{2}}), 3});
  cases.push_back({semidirect_elementary(3, 2, cyclic_group(3), {{1, 1, 0, 1}}), 3});
  cases.push_back({modular27(), 3});
  cases.push_back({semidirect_elementary(5, 1, cyclic_group(4), {{2}}), 5});
  for (auto& [g, p] : cases) {
    CharacterTable t = character_table(g);
    Verdict v = check_level_one_gap(t, rationality_profile(t, p), p, GapMode::Frattini);
    CHECK(v.status == VerdictStatus::Holds);
  }
}

TEST_CASE("the order-216 example has level-one rows and fails condition (ii)") {
  PermGroup g = g216();
  CharacterTable t = character_table(g);
  RationalityProfile prof = rationality_profile(t, 3);
  ConditionI ci = level_one_condition_i(prof, Scope::All);
  CHECK(!ci.holds);  // level-1 rows of 3'-degree exist
  Verdict v = check_level_one_gap(t, prof, 3, GapMode::Frattini);
  CHECK(v.status == VerdictStatus::Holds);  // normal Sylow -> equivalence
  CHECK(!subflag(v, "i"));
  bool ii = subflag(v, "ii.a") && subflag(v, "ii.b");
  CHECK(!ii);
}

TEST_CASE("mckay multiset checker") {
  auto run = [](const PermGroup& g, u64 p) {
    CharacterTable t = character_table(g);
    return check_mckay_multiset(t, rationality_profile(t, p), p);
  };
  CHECK(run(symmetric_group(4), 2).status == VerdictStatus::Holds);
  CHECK(run(dihedral_group(24), 3).status == VerdictStatus::Holds);
  CHECK(run(symmetric_group(3), 3).status == VerdictStatus::Holds);
  CHECK(run(alternating_group(4), 3).status == VerdictStatus::Holds);
  CHECK(run(symmetric_group(4), 3).status == VerdictStatus::Holds);
  CHECK(run(cyclic_group(100), 5).status == VerdictStatus::Holds);
}

TEST_CASE("exponent bound checker") {
  auto run_exp = [](const PermGroup& g, u64 p) {
    CharacterTable t = character_table(g);
    return check_exponent_bound(t, rationality_profile(t, p), p);
  };
  Verdict c9 = run_exp(cyclic_group(9), 3);
  CHECK(c9.status == VerdictStatus::Holds);

  Verdict d18 = run_exp(dihedral_group(18), 3);
  CHECK(d18.status == VerdictStatus::Holds);

  Verdict d24 = run_exp(dihedral_group(24), 3);
  CHECK(d24.status == VerdictStatus::NotApplicable);

  Verdict c100 = run_exp(cyclic_group(100), 5);
  CHECK(c100.status == VerdictStatus::Holds);
  Verdict c100at2 = run_exp(cyclic_group(100), 2);
  CHECK(c100at2.status == VerdictStatus::Holds);
}

TEST_CASE("theorem audits pass on theorem instances") {
  auto run = [](const PermGroup& g, u64 p) {
    CharacterTable t = character_table(g);
    return theorem_audit(t, rationality_profile(t, p), p);
  };

  // Alperin-Dade configuration: N = S3 inside S3 x C2 at p = 3.
  AuditReport s3c2 = run(direct_product(symmetric_group(3), cyclic_group(2)), 3);
  CHECK(s3c2.all_passed());
  bool bijection_ran = false;
  for (const AuditItem& it : s3c2.items)
    if (it.name == "restriction_block_bijection" && !it.skipped && it.tried > 0)
      bijection_ran = true;
  CHECK(bijection_ran);

  // D24 at 3: frattini characterization with Phi(P) = 1 plus the orbit
  // isomorphism audit.
  AuditReport d24 = run(dihedral_group(24), 3);
  CHECK(d24.all_passed());
  for (const AuditItem& it : d24.items) {
    if (it.name == "frattini_almost_rational") CHECK(!it.skipped);
    if (it.name == "orbit_permutation_iso") {
      CHECK(!it.skipped);
      CHECK(it.passed == it.tried);
    }
  }

  // C9 at 3: the p-group conductor fact for all three nontrivial linears.
  AuditReport c9 = run(cyclic_group(9), 3);
  CHECK(c9.all_passed());
  for (const AuditItem& it : c9.items)
    if (it.name == "pgroup_linear_conductor") {
      CHECK(it.tried == 9);
      CHECK(it.passed == 9);
    }

  CHECK(run(symmetric_group(4), 2).all_passed());
  CHECK(run(symmetric_group(4), 3).all_passed());
  CHECK(run(dihedral_group(8), 2).all_passed());
  CHECK(run(modular27(), 3).all_passed());
  CHECK(run(alternating_group(4), 2).all_passed());
  CHECK(run(semidirect_elementary(3, 1, cyclic_group(4), {{2}}), 3).all_passed());
}
