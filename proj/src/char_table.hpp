#pragma once

#include <memory>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace charlab {

// Exact irreducible character table. Owns the group and its class data so a
// table is self-contained. Rows are sorted: trivial character first, then by
// ascending degree and lexicographic canonical value encoding. All values are
// expressed in Q_exponent.
struct CharacterTable {
  PermGroup group;
  ConjClassData classes;
  u64 exponent = 1;
  std::vector<u64> degrees;
  std::vector<std::vector<CycNum>> irr;

  int num_classes() const { return classes.num_classes(); }
  int num_chars() const { return (int)irr.size(); }
  // Index of the row with these values; -1 when absent.
  int index_of(const std::vector<CycNum>& values) const;
  std::vector<std::string> row_encoding(int row) const;
};

// Burnside-Dixon-Schneider: class-matrix eigenvectors over F_ell with
// ell = 1 (mod exp G), lifted exactly via multiplicity DFT over power maps.
CharacterTable character_table(const PermGroup& g, u64 bound = kDefaultEnumerationBound);

// A class function over a table's classes (not necessarily a character).
struct ClassFunction {
  const CharacterTable* table = nullptr;
  std::vector<CycNum> values;
};

CycNum inner_product(const CharacterTable& t, const std::vector<CycNum>& a,
                     const std::vector<CycNum>& b);

// Exact orthogonality verification (throws Internal on violation).
void verify_orthogonality(const CharacterTable& t);

// chi restricted to the subgroup carried by `sub` (sub.group <= t.group).
ClassFunction restrict_to(const CharacterTable& t, int row, const CharacterTable& sub);
ClassFunction restrict_values(const CharacterTable& t, const std::vector<CycNum>& values,
                              const CharacterTable& sub);

// theta (a class function on sub) induced up to t.group.
ClassFunction induce_from(const CharacterTable& sub, const std::vector<CycNum>& theta,
                          const CharacterTable& t);

// Multiplicities <f, chi_i>; entries must be non-negative rational integers
// when `f` is a character (asserted).
std::vector<Int> decompose(const CharacterTable& t, const std::vector<CycNum>& f);

// Galois twist of a row; the automorphism modulus must be a multiple of the
// table exponent. Result is again a row (irreducibility is preserved).
int twist_galois(const CharacterTable& t, int row, const GaloisAut& tau);
std::vector<CycNum> twist_galois_values(const std::vector<CycNum>& values, const GaloisAut& tau);

// Conjugation twist theta^g of a row of the table of N by an element of the
// parent: theta^g(x) = theta(g x g^-1). g must normalize N.
std::vector<CycNum> conj_twist_values(const CharacterTable& nt, int row, const Perm& g);
int conj_twist(const CharacterTable& nt, int row, const Perm& g);

// {g : chi(g) = chi(1)} as a subgroup (asserted normal).
PermGroup kernel_of_character(const CharacterTable& t, int row);

// Pullback of a row of the quotient-image table along q; returns the row
// index in the source table (the inflation is again irreducible).
int inflate(const CharacterTable& image_table, int row, const QuotientMap& q,
            const CharacterTable& source_table);

struct InertiaData {
  PermGroup stabilizer;       // G_theta
  PermGroup semi_stabilizer;  // G*_theta
};

// Inertia and semi-inertia subgroups of a character of a normal subgroup.
InertiaData inertia_groups(const PermGroup& g, const CharacterTable& nt, int row,
                           u64 bound = kDefaultEnumerationBound);

}  // namespace charlab
