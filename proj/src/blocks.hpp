#pragma once

#include <set>

#include "char_table.hpp"
#include "modular.hpp"

namespace charlab {

u64 character_conductor(const CharacterTable& t, int row);
int p_level(const CharacterTable& t, int row, u64 p);

// True iff the row is fixed by sigma_alpha(p, alpha, exp G).
bool sigma_invariant(const CharacterTable& t, int row, u64 p, int alpha);

struct BlockPartition {
  u64 p = 0;
  std::vector<std::vector<int>> blocks;  // each sorted; ordered by least member
  int principal_index = -1;
  std::vector<int> block_of;

  bool in_principal(int row) const { return block_of[row] == principal_index; }
};

// p-block distribution via exact central characters reduced by the
// homomorphism zeta_{p^a} -> 1, zeta_m -> fixed primitive m-th root of F_q,
// q = p^(ord_m(p)). Two rows share a block iff all reduced central-character
// values agree.
BlockPartition block_partition(const CharacterTable& t, u64 p);

struct ProfileRow {
  int index = 0;
  u64 degree = 0;
  u64 conductor = 1;
  int level = 0;
  bool p_prime_degree = false;
  bool in_b0 = false;
};

struct RationalityProfile {
  u64 p = 0;
  u64 exponent = 1;
  std::vector<ProfileRow> rows;
  std::set<int> level_spectrum_all;  // levels over p'-degree rows
  std::set<int> level_spectrum_b0;   // same, restricted to the principal block
};

RationalityProfile rationality_profile(const CharacterTable& t, u64 p);
RationalityProfile rationality_profile(const CharacterTable& t, const BlockPartition& bp);

}  // namespace charlab
