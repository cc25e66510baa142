#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "perm.hpp"
#include "rational.hpp"

namespace charlab {

// Finite permutation group with a deterministic base/strong-generating-set
// structure (Schreier-Sims without randomization). Immutable once built.
class PermGroup {
 public:
  PermGroup() : degree_(1) { order_big_ = 1; }
  static PermGroup trivial(int degree);
  static PermGroup from_generators(int degree, std::vector<Perm> gens);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  u64 order() const;  // throws Capacity when the order exceeds 2^63
  const Int& order_big() const { return order_big_; }
  bool is_trivial() const { return order_big_ == 1; }

  bool contains(const Perm& p) const;
  // All elements sorted lexicographically; throws Capacity above the bound.
  std::vector<Perm> elements(u64 bound = kDefaultEnumerationBound) const;

  bool is_subgroup_of(const PermGroup& g) const;
  bool is_normal_in(const PermGroup& g) const;
  bool same_subgroup(const PermGroup& other) const;
  bool is_abelian() const;
  bool is_p_group(u64 p) const;
  u64 exponent(u64 bound = kDefaultEnumerationBound) const;

  // This group extended by one more generator (no-op if already contained).
  PermGroup extended(const Perm& g) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;                     // BFS discovery order
    std::unordered_map<int, Perm> transversal;  // point -> u with u(base) = point
  };

  int degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  Int order_big_ = 1;

  std::vector<Perm> gens_at(int i) const;
  void rebuild_orbit(int i);
  void schreier_sims(int i);
  std::pair<Perm, int> sift(Perm g, int from_level) const;
};

struct ConjClassData {
  std::vector<Perm> elements;  // sorted ascending
  std::vector<Perm> reps;      // reps[i] = least element of class i
  std::vector<u64> sizes;
  std::vector<int> inverse_class;
  std::vector<std::vector<int>> members;  // class -> indices into elements
  std::unordered_map<Perm, int, PermHash> class_index;

  int num_classes() const { return (int)reps.size(); }
  int class_of(const Perm& p) const;
  int power_class(int c, i64 k) const;
};

ConjClassData conjugacy_classes(const PermGroup& g, u64 bound = kDefaultEnumerationBound);

PermGroup sylow_subgroup(const PermGroup& g, u64 p, u64 bound = kDefaultEnumerationBound);

enum class StabKind { NormalizerOfSubgroup, CentralizerOfElement, CentralizerOfSubgroup };
PermGroup normalizer(const PermGroup& g, const PermGroup& s, u64 bound = kDefaultEnumerationBound);
PermGroup centralizer(const PermGroup& g, const Perm& x, u64 bound = kDefaultEnumerationBound);
PermGroup centralizer(const PermGroup& g, const PermGroup& s, u64 bound = kDefaultEnumerationBound);

PermGroup normal_closure(const PermGroup& g, std::vector<Perm> seeds);
PermGroup derived_subgroup(const PermGroup& g);
PermGroup center(const PermGroup& g, u64 bound = kDefaultEnumerationBound);
// Frattini subgroup of a p-group (fails Domain otherwise).
PermGroup frattini_subgroup(const PermGroup& g);
// Largest normal subgroup of order coprime to p / of p-power order.
PermGroup o_pprime(const PermGroup& g, const ConjClassData& classes, u64 p);
PermGroup o_p(const PermGroup& g, const ConjClassData& classes, u64 p);

bool is_solvable(const PermGroup& g);
bool is_p_solvable(const PermGroup& g, u64 p, u64 bound = kDefaultEnumerationBound);

// Exponent of G/G'.
u64 abelianization_exponent(const PermGroup& g, u64 bound = kDefaultEnumerationBound);

struct QuotientMap {
  PermGroup source;
  PermGroup kernel;
  PermGroup image;
  std::vector<Perm> section_reps;  // coset id -> least source element
  std::unordered_map<Perm, int, PermHash> coset_id;

  int coset_of(const Perm& g) const;
  Perm forward(const Perm& g) const;          // source element -> image perm
  Perm section(const Perm& image_elt) const;  // image perm -> coset rep
};

// G/N acting regularly on the right cosets of N; N must be normal.
QuotientMap quotient_group(const PermGroup& g, const PermGroup& n,
                           u64 bound = kDefaultEnumerationBound);

// Subgroup generated by the union of two subgroups of the same parent.
PermGroup join_subgroups(const PermGroup& a, const PermGroup& b);

// All normal subgroups as joins of class normal-closures; nullopt when the
// count cap is exceeded. Sorted by (order, element list).
std::optional<std::vector<PermGroup>> normal_subgroups(const PermGroup& g,
                                                       const ConjClassData& classes,
                                                       std::size_t cap = 64);

// Builtin constructions.
PermGroup cyclic_group(int n);
PermGroup dihedral_group(int order);  // argument = group order (even)
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
// Elementary abelian p^k extended by the acting group via one invertible
// matrix (k x k over F_p, row-major) per generator of `acting`. Verified to
// respect the acting group's relations by the order check.
PermGroup semidirect_elementary(u64 p, int k, const PermGroup& acting,
                                const std::vector<std::vector<int>>& matrices);
PermGroup cayley_table_group(const std::vector<std::vector<int>>& table);

}  // namespace charlab
