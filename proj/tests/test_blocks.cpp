#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "blocks.hpp"

using namespace charlab;

namespace {

int faithful_row(const CharacterTable& t, u64 target_conductor) {
  for (int r = 0; r < t.num_chars(); ++r)
    if (character_conductor(t, r) == target_conductor) return r;
  return -1;
}

}  // namespace

TEST_CASE("character conductors") {
  CharacterTable c9 = character_table(cyclic_group(9));
  CHECK(character_conductor(c9, 0) == 1);
  CHECK(faithful_row(c9, 9) >= 0);

  CharacterTable c3 = character_table(cyclic_group(3));
  int with_level_one = 0;
  for (int r = 0; r < 3; ++r)
    if (character_conductor(c3, r) == 3) ++with_level_one;
  CHECK(with_level_one == 2);  // both nontrivial linear characters

  // p-levels.
  CHECK(p_level(c3, faithful_row(c3, 3), 3) == 1);
  CHECK(p_level(c9, faithful_row(c9, 9), 3) == 2);
  CharacterTable s4 = character_table(symmetric_group(4));
  for (int r = 0; r < s4.num_chars(); ++r)
    for (u64 p : {2, 3, 5}) CHECK(p_level(s4, r, p) == 0);
}

TEST_CASE("sigma invariance matches levels") {
  CharacterTable c9 = character_table(cyclic_group(9));
  int f9 = faithful_row(c9, 9);
  CHECK(!sigma_invariant(c9, f9, 3, 1));
  CHECK(sigma_invariant(c9, f9, 3, 2));
  CHECK(sigma_invariant(c9, 0, 3, 1));

  for (const PermGroup& g :
       {cyclic_group(9), symmetric_group(4), dihedral_group(24), cyclic_group(100),
        alternating_group(5), semidirect_elementary(3, 1, cyclic_group(4), {{2}})}) {
    CharacterTable t = character_table(g);
    for (u64 p : {2, 3, 5}) {
      int vmax = valuation(t.exponent, p);
      for (int r = 0; r < t.num_chars(); ++r) {
        int level = p_level(t, r, p);
        for (int alpha = 1; alpha <= std::max(vmax, 1); ++alpha)
          CHECK(sigma_invariant(t, r, p, alpha) == (level <= alpha));
      }
    }
  }
}

TEST_CASE("no character has 2-level exactly 1") {
  for (const PermGroup& g :
       {symmetric_group(4), dihedral_group(24), cyclic_group(8), cyclic_group(100),
        alternating_group(5), dihedral_group(8)}) {
    CharacterTable t = character_table(g);
    for (int r = 0; r < t.num_chars(); ++r) CHECK(p_level(t, r, 2) != 1);
  }
}

TEST_CASE("block partitions") {
  // p-groups have a single block.
  for (const PermGroup& g : {cyclic_group(9), dihedral_group(8), cyclic_group(27)}) {
    CharacterTable t = character_table(g);
    u64 p = factorize(g.order())[0].first;
    BlockPartition bp = block_partition(t, p);
    CHECK(bp.blocks.size() == 1);
    CHECK(bp.principal_index == 0);
  }

  // S3 at 3: everything is principal.
  BlockPartition s3b = block_partition(character_table(symmetric_group(3)), 3);
  CHECK(s3b.blocks.size() == 1);

  // D24 at 3: the principal block is the inflation of S3, three characters
  // of levels 0; the rest split off.
  CharacterTable d24 = character_table(dihedral_group(24));
  BlockPartition bp = block_partition(d24, 3);
  std::vector<int> b0 = bp.blocks[bp.principal_index];
  CHECK(b0.size() == 3);
  PermGroup o3 = o_pprime(d24.group, d24.classes, 3);
  for (int r : b0) {
    CHECK(p_level(d24, r, 3) == 0);
    CHECK(o3.is_subgroup_of(kernel_of_character(d24, r)));
  }

  // p coprime to |G|: every block is a singleton.
  BlockPartition coprime = block_partition(character_table(symmetric_group(3)), 5);
  CHECK(coprime.blocks.size() == (std::size_t)3);
  for (auto& b : coprime.blocks) CHECK(b.size() == 1);
  CHECK(coprime.blocks[coprime.principal_index] == std::vector<int>{0});

  // A5 at 2: principal block of four characters plus a defect-zero block.
  CharacterTable a5 = character_table(alternating_group(5));
  BlockPartition a5b = block_partition(a5, 2);
  CHECK(a5b.blocks.size() == 2);
  CHECK(a5b.blocks[a5b.principal_index].size() == 4);

  // Insertion-order independence: permuting the rows gives the same blocks.
  CharacterTable shuffled = d24;
  std::reverse(shuffled.irr.begin(), shuffled.irr.end());
  std::reverse(shuffled.degrees.begin(), shuffled.degrees.end());
  BlockPartition bp2 = block_partition(shuffled, 3);
  int k = d24.num_chars();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      CHECK((bp.block_of[i] == bp.block_of[j]) ==
            (bp2.block_of[k - 1 - i] == bp2.block_of[k - 1 - j]));
}

TEST_CASE("principal block is stable under Galois twists") {
  for (const PermGroup& g :
       {dihedral_group(24), symmetric_group(4), cyclic_group(9),
        semidirect_elementary(3, 1, cyclic_group(4), {{2}})}) {
    CharacterTable t = character_table(g);
    for (u64 p : {2, 3}) {
      BlockPartition bp = block_partition(t, p);
      std::set<int> b0(bp.blocks[bp.principal_index].begin(),
                       bp.blocks[bp.principal_index].end());
      for (u64 u : units_mod(t.exponent)) {
        GaloisAut tau(t.exponent, t.exponent == 1 ? 0 : u);
        for (int r : b0) CHECK(b0.count(twist_galois(t, r, tau)) == 1);
      }
    }
  }
}

TEST_CASE("rationality profiles") {
  // D24 at 3: two level-1 rows of degree 2 outside the principal block.
  CharacterTable d24 = character_table(dihedral_group(24));
  RationalityProfile prof = rationality_profile(d24, 3);
  CHECK(prof.level_spectrum_all == std::set<int>{0, 1});
  CHECK(prof.level_spectrum_b0 == std::set<int>{0});
  int level_one = 0;
  for (const ProfileRow& r : prof.rows)
    if (r.level == 1) {
      ++level_one;
      CHECK(r.degree == 2);
      CHECK(r.conductor == 12);
      CHECK(!r.in_b0);
    }
  CHECK(level_one == 2);

  RationalityProfile c9p = rationality_profile(character_table(cyclic_group(9)), 3);
  CHECK(c9p.level_spectrum_all == std::set<int>{0, 1, 2});

  RationalityProfile s4p = rationality_profile(character_table(symmetric_group(4)), 2);
  for (const ProfileRow& r : s4p.rows)
    if (r.p_prime_degree) CHECK(r.level == 0);

  // C100 exercises p = 2 and p = 5 spectra of a cyclic group.
  CharacterTable c100 = character_table(cyclic_group(100));
  RationalityProfile p2 = rationality_profile(c100, 2);
  CHECK(p2.level_spectrum_all == std::set<int>{0, 2});
  RationalityProfile p5 = rationality_profile(c100, 5);
  CHECK(p5.level_spectrum_all == std::set<int>{0, 1, 2});
}

TEST_CASE("p-group linear conductor fact") {
  // c(lambda) = |P/ker lambda| for odd p; for p = 2 an order-2 quotient has
  // conductor 1 instead.
  for (const PermGroup& g : {cyclic_group(9), cyclic_group(27),
                             semidirect_elementary(3, 2, cyclic_group(3), {{1, 1, 0, 1}})}) {
    CharacterTable t = character_table(g);
    for (int r = 0; r < t.num_chars(); ++r) {
      if (t.degrees[r] != 1) continue;
      PermGroup ker = kernel_of_character(t, r);
      CHECK(character_conductor(t, r) == g.order() / ker.order());
    }
  }
  for (const PermGroup& g : {dihedral_group(8), cyclic_group(8)}) {
    CharacterTable t = character_table(g);
    for (int r = 0; r < t.num_chars(); ++r) {
      if (t.degrees[r] != 1) continue;
      u64 q = g.order() / kernel_of_character(t, r).order();
      CHECK(character_conductor(t, r) == (q == 2 ? 1 : q));
    }
  }
}
