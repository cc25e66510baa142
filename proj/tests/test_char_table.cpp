#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <numeric>

#include "blocks.hpp"
#include "char_table.hpp"

using namespace charlab;

namespace {

using cplx = std::complex<double>;
constexpr double kTol = 1e-7;

// ---------------------------------------------------------------------------
// Independent table oracle for |G| <= 24: class matrices recomputed by brute
// pair counting, simultaneous eigenspaces split numerically over C with
// exactly enumerated candidate eigenvalues (scaled sums of roots of unity),
// and values reconstructed exactly from integer-rounded DFT multiplicities.
// ---------------------------------------------------------------------------

std::vector<std::vector<cplx>> matmul_restrict(const std::vector<std::vector<double>>& m,
                                               const std::vector<std::vector<cplx>>& basis) {
  int k = (int)m.size();
  int d = (int)basis.size();
  std::vector<std::vector<cplx>> out(d, std::vector<cplx>(k, 0.0));
  for (int s = 0; s < d; ++s)
    for (int row = 0; row < k; ++row) {
      cplx acc = 0.0;
      for (int l = 0; l < k; ++l) acc += m[row][l] * basis[s][l];
      out[s][row] = acc;
    }
  return out;
}

// Solve for coordinates of v in the span of basis via least squares by
// Gaussian elimination on the stacked system (basis is well-conditioned here:
// it comes from orthonormalization).
void orthonormalize(std::vector<std::vector<cplx>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      cplx dot = 0.0;
      for (std::size_t l = 0; l < rows[i].size(); ++l) dot += rows[i][l] * std::conj(rows[j][l]);
      for (std::size_t l = 0; l < rows[i].size(); ++l) rows[i][l] -= dot * rows[j][l];
    }
    double norm = 0.0;
    for (const cplx& x : rows[i]) norm += std::norm(x);
    norm = std::sqrt(norm);
    REQUIRE(norm > kTol);
    for (cplx& x : rows[i]) x /= norm;
  }
}

// Kernel of (A - lambda I) for a small complex matrix, by row reduction.
std::vector<std::vector<cplx>> complex_kernel(std::vector<std::vector<cplx>> a) {
  int n = (int)a.size();
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    double best = 1e-9;
    for (int i = row; i < n; ++i)
      if (std::abs(a[i][col]) > best) { best = std::abs(a[i][col]); piv = i; }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    cplx inv = 1.0 / a[row][col];
    for (int j = 0; j < n; ++j) a[row][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      cplx f = a[i][col];
      if (std::abs(f) < 1e-14) continue;
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<char> is_piv(n, 0);
  for (int c : pivot_cols) is_piv[c] = 1;
  std::vector<std::vector<cplx>> kernel;
  for (int col = 0; col < n; ++col) {
    if (is_piv[col]) continue;
    std::vector<cplx> v(n, 0.0);
    v[col] = 1.0;
    for (int i = 0; i < (int)pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][col];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

struct OracleRow {
  u64 degree;
  std::vector<CycNum> values;
};

std::vector<OracleRow> oracle_table(const PermGroup& g, const ConjClassData& cls, u64 exponent) {
  int k = cls.num_classes();
  u64 n = g.order();
  REQUIRE(n <= 24);

  // Class matrices by brute pair counting: a_{ijl} += 1 whenever the product
  // of two elements equals the chosen class representative.
  std::vector<std::vector<std::vector<double>>> m(
      k, std::vector<std::vector<double>>(k, std::vector<double>(k, 0.0)));
  for (const Perm& x : cls.elements)
    for (const Perm& y : cls.elements) {
      Perm prod = x * y;
      int l = cls.class_of(prod);
      if (prod == cls.reps[l]) m[cls.class_of(x)][l][cls.class_of(y)] += 1.0;
    }
  // m[i][j? l][j]: reorganize to M_i[j][l] = a_{ijl}: entry above counted with
  // rows "class of y" and value class l; transpose into standard layout.
  std::vector<std::vector<std::vector<double>>> cm(
      k, std::vector<std::vector<double>>(k, std::vector<double>(k, 0.0)));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l)
      for (int j = 0; j < k; ++j) cm[i][j][l] = m[i][l][j];

  int maxdeg = 1;
  while ((maxdeg + 1) * (maxdeg + 1) <= (int)n) ++maxdeg;

  const double tau = 6.283185307179586476925287;
  std::vector<std::vector<std::vector<cplx>>> spaces;
  {
    std::vector<std::vector<cplx>> full(k, std::vector<cplx>(k, 0.0));
    for (int i = 0; i < k; ++i) full[i][i] = 1.0;
    spaces.push_back(std::move(full));
  }
  for (int mi = 1; mi < k; ++mi) {
    u64 o = cls.reps[mi].order();
    u64 ni = cls.sizes[mi];
    // Candidate eigenvalues: n_i * (sum of d o-th roots) / d, d <= maxdeg.
    std::vector<cplx> candidates;
    for (int d = 1; d <= maxdeg; ++d) {
      std::vector<int> pick(d, 0);
      while (true) {
        cplx sum = 0.0;
        for (int t : pick) sum += cplx(std::cos(tau * t / (double)o), std::sin(tau * t / (double)o));
        cplx lambda = sum * ((double)ni / (double)d);
        bool dup = false;
        for (const cplx& c : candidates)
          if (std::abs(c - lambda) < 1e-9) { dup = true; break; }
        if (!dup) candidates.push_back(lambda);
        // next non-decreasing tuple
        int pos = d - 1;
        while (pos >= 0 && pick[pos] == (int)o - 1) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int q = pos + 1; q < d; ++q) pick[q] = pick[pos];
      }
    }
    std::vector<std::vector<std::vector<cplx>>> next;
    for (auto& basis : spaces) {
      int d = (int)basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      orthonormalize(basis);
      auto images = matmul_restrict(cm[mi], basis);
      // A[r][s] = <image_s, basis_r> (orthonormal basis).
      std::vector<std::vector<cplx>> a(d, std::vector<cplx>(d, 0.0));
      for (int s = 0; s < d; ++s)
        for (int r = 0; r < d; ++r) {
          cplx dot = 0.0;
          for (int l = 0; l < k; ++l) dot += images[s][l] * std::conj(basis[r][l]);
          a[r][s] = dot;
        }
      int claimed = 0;
      for (const cplx& lambda : candidates) {
        auto shifted = a;
        for (int i = 0; i < d; ++i) shifted[i][i] -= lambda;
        auto kern = complex_kernel(shifted);
        if (kern.empty()) continue;
        std::vector<std::vector<cplx>> child;
        for (auto& coord : kern) {
          std::vector<cplx> vec(k, 0.0);
          for (int r = 0; r < d; ++r)
            for (int l = 0; l < k; ++l) vec[l] += coord[r] * basis[r][l];
          child.push_back(std::move(vec));
        }
        claimed += (int)child.size();
        next.push_back(std::move(child));
      }
      REQUIRE(claimed == d);
    }
    spaces = std::move(next);
  }

  std::vector<OracleRow> rows;
  for (auto& basis : spaces) {
    REQUIRE(basis.size() == 1);
    std::vector<cplx> v = basis[0];
    REQUIRE(std::abs(v[0]) > kTol);
    cplx v0 = v[0];
    for (cplx& x : v) x /= v0;  // omega vector
    double s = 0.0;
    for (int i = 0; i < k; ++i) {
      int ip = cls.inverse_class[i];
      s += std::real(v[i] * v[ip]) / (double)cls.sizes[ip];
    }
    double dref = std::sqrt((double)n / s);
    u64 deg = (u64)std::llround(dref);
    REQUIRE(std::abs(dref - (double)deg) < 1e-6);

    std::vector<cplx> chi(k);
    for (int i = 0; i < k; ++i) chi[i] = v[i] * ((double)deg / (double)cls.sizes[i]);

    OracleRow row;
    row.degree = deg;
    row.values.resize(k);
    for (int j = 0; j < k; ++j) {
      u64 o = cls.reps[j].order();
      std::map<i64, Rational> terms;
      u64 total = 0;
      for (u64 t = 0; t < o; ++t) {
        cplx acc = 0.0;
        for (u64 sp = 0; sp < o; ++sp) {
          int pc = cls.power_class(j, (i64)sp);
          double ang = -tau * (double)(sp * t % o) / (double)o;
          acc += chi[pc] * cplx(std::cos(ang), std::sin(ang));
        }
        acc /= (double)o;
        long mu = std::llround(std::real(acc));
        REQUIRE(std::abs(acc - cplx((double)mu, 0.0)) < 1e-5);
        REQUIRE(mu >= 0);
        total += (u64)mu;
        if (mu != 0) terms[(i64)t] = Rational(mu);
      }
      REQUIRE(total == deg);
      row.values[j] = CycNum::from_terms(o, terms).embedded(exponent);
    }
    rows.push_back(std::move(row));
  }
  // Same deterministic order as the engine: trivial first, then degree/lex.
  CycNum one(1l);
  std::stable_sort(rows.begin(), rows.end(), [&](const OracleRow& a, const OracleRow& b) {
    auto enc = [](const OracleRow& r) {
      std::vector<std::string> e;
      for (const CycNum& v : r.values) e.push_back(v.encode());
      return e;
    };
    bool a_triv = a.degree == 1 && std::all_of(a.values.begin(), a.values.end(),
                                               [&](const CycNum& v) { return v == one; });
    bool b_triv = b.degree == 1 && std::all_of(b.values.begin(), b.values.end(),
                                               [&](const CycNum& v) { return v == one; });
    if (a_triv != b_triv) return a_triv;
    if (a.degree != b.degree) return a.degree < b.degree;
    return enc(a) < enc(b);
  });
  return rows;
}

void check_against_oracle(const PermGroup& g) {
  CharacterTable t = character_table(g);
  auto oracle = oracle_table(t.group, t.classes, t.exponent);
  REQUIRE((int)oracle.size() == t.num_chars());
  for (int r = 0; r < t.num_chars(); ++r) {
    CHECK(oracle[r].degree == t.degrees[r]);
    CHECK(oracle[r].values == t.irr[r]);
  }
}

}  // namespace

TEST_CASE("small tables match the independent oracle") {
  check_against_oracle(cyclic_group(3));
  check_against_oracle(cyclic_group(9));
  check_against_oracle(symmetric_group(3));
  check_against_oracle(symmetric_group(4));
  check_against_oracle(alternating_group(4));
  check_against_oracle(dihedral_group(8));
  check_against_oracle(dihedral_group(18));
  check_against_oracle(dihedral_group(24));
  check_against_oracle(semidirect_elementary(3, 1, cyclic_group(4), {{2}}));  // dicyclic 12
}

TEST_CASE("canonical table shapes") {
  CharacterTable c3 = character_table(cyclic_group(3));
  CHECK(c3.degrees == std::vector<u64>{1, 1, 1});
  CycNum z3 = CycNum::root_of_unity(3, 1);
  CycNum z32 = CycNum::root_of_unity(3, 2);
  bool seen_z = false, seen_z2 = false;
  for (int r = 1; r < 3; ++r) {
    if (c3.irr[r][1] == z3) seen_z = true;
    if (c3.irr[r][1] == z32) seen_z2 = true;
  }
  CHECK(seen_z);
  CHECK(seen_z2);

  CharacterTable s3 = character_table(symmetric_group(3));
  CHECK(s3.degrees == std::vector<u64>{1, 1, 2});
  for (const auto& row : s3.irr)
    for (const CycNum& v : row) CHECK(v.is_rational());

  CHECK(character_table(dihedral_group(8)).degrees == std::vector<u64>{1, 1, 1, 1, 2});
  CHECK(character_table(PermGroup::trivial(1)).degrees == std::vector<u64>{1});
}

TEST_CASE("orthogonality and algebraic integrality") {
  for (const PermGroup& g : {symmetric_group(4), dihedral_group(24), alternating_group(5),
                             cyclic_group(12), semidirect_elementary(3, 2, cyclic_group(3), {{1, 1, 0, 1}})}) {
    CharacterTable t = character_table(g);
    verify_orthogonality(t);
    u64 sq = 0;
    for (u64 d : t.degrees) sq += d * d;
    CHECK(sq == g.order());
    CHECK(t.num_chars() == t.num_classes());
    for (const auto& row : t.irr)
      for (const CycNum& v : row) CHECK(v.has_integer_coeffs());
  }
}

TEST_CASE("inner products") {
  CharacterTable s3 = character_table(symmetric_group(3));
  for (int r = 0; r < 3; ++r)
    CHECK(inner_product(s3, s3.irr[r], s3.irr[r]) == CycNum(1l));
  // Regular character: |G| at the identity, zero elsewhere.
  std::vector<CycNum> reg(s3.num_classes(), CycNum());
  reg[0] = CycNum((long)s3.group.order());
  for (int r = 0; r < 3; ++r)
    CHECK(inner_product(s3, reg, s3.irr[r]) == CycNum((long)s3.degrees[r]));
}

TEST_CASE("induction and restriction") {
  PermGroup s3g = symmetric_group(3);
  CharacterTable s3 = character_table(s3g);
  PermGroup c3g = PermGroup::from_generators(3, {Perm::parse_cycles("(1 2 3)", 3)});
  CharacterTable c3 = character_table(c3g);

  // induce(1_C3, S3) is the coset permutation character on 2 points:
  // trivial + sign.
  ClassFunction ind = induce_from(c3, c3.irr[0], s3);
  auto mult = decompose(s3, ind.values);
  CHECK(mult[0] == 1);
  CHECK(mult[1] == 1);
  CHECK(mult[2] == 0);
  // induce(1_C2, S3) is the natural 3-point permutation character:
  // trivial + degree 2.
  PermGroup c2g = PermGroup::from_generators(3, {Perm::parse_cycles("(1 2)", 3)});
  CharacterTable c2 = character_table(c2g);
  auto mult2 = decompose(s3, induce_from(c2, c2.irr[0], s3).values);
  CHECK(mult2[0] == 1);
  CHECK(mult2[1] == 0);
  CHECK(mult2[2] == 1);

  // restrict(degree-2 of S3, C3) = faithful + conjugate.
  ClassFunction res = restrict_to(s3, 2, c3);
  auto rmult = decompose(c3, res.values);
  CHECK(rmult[0] == 0);
  CHECK(rmult[1] == 1);
  CHECK(rmult[2] == 1);

  // Degree formula for induction.
  ClassFunction ind_faithful = induce_from(c3, c3.irr[1], s3);
  CHECK(ind_faithful.values[0] == CycNum(2l));

  // <induce(faithful of C3), degree-2 of S3> = 1.
  CHECK(inner_product(s3, ind_faithful.values, s3.irr[2]) == CycNum(1l));

  // Frobenius reciprocity across all pairs.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      ClassFunction up = induce_from(c3, c3.irr[a], s3);
      ClassFunction down = restrict_to(s3, b, c3);
      CHECK(inner_product(s3, up.values, s3.irr[b]) ==
            inner_product(c3, c3.irr[a], down.values));
    }
}

TEST_CASE("twists") {
  PermGroup c3g = cyclic_group(3);
  CharacterTable c3 = character_table(c3g);
  int faithful = -1;
  for (int r = 0; r < 3; ++r)
    if (c3.irr[r][1] == CycNum::root_of_unity(3, 1)) faithful = r;
  REQUIRE(faithful >= 0);
  int twisted = twist_galois(c3, faithful, GaloisAut(3, 2));
  CHECK(c3.irr[twisted][1] == CycNum::root_of_unity(3, 2));

  // Rational rows are fixed by every automorphism.
  CharacterTable s4 = character_table(symmetric_group(4));
  for (int r = 0; r < s4.num_chars(); ++r)
    for (u64 t : units_mod(s4.exponent))
      CHECK(twist_galois(s4, r, GaloisAut(s4.exponent, t)) == r);

  // Conjugation by a transposition swaps the faithful characters of C3 < S3.
  PermGroup c3sub = PermGroup::from_generators(3, {Perm::parse_cycles("(1 2 3)", 3)});
  CharacterTable c3s = character_table(c3sub);
  int f2 = -1;
  for (int r = 0; r < 3; ++r)
    if (c3s.irr[r][1] == CycNum::root_of_unity(3, 1)) f2 = r;
  Perm transposition = Perm::parse_cycles("(1 2)", 3);
  int conj = conj_twist(c3s, f2, transposition);
  CHECK(c3s.irr[conj][1] == CycNum::root_of_unity(3, 2));

  // Galois twist permutes rows; conjugation by members fixes each row.
  CharacterTable d8 = character_table(dihedral_group(8));
  for (u64 t : units_mod(d8.exponent)) {
    std::set<int> image;
    for (int r = 0; r < d8.num_chars(); ++r)
      image.insert(twist_galois(d8, r, GaloisAut(d8.exponent, t)));
    CHECK((int)image.size() == d8.num_chars());
  }
  for (const Perm& g : d8.group.generators())
    for (int r = 0; r < d8.num_chars(); ++r) CHECK(conj_twist(d8, r, g) == r);
}

TEST_CASE("kernels and inflation") {
  CharacterTable c9 = character_table(cyclic_group(9));
  CHECK(kernel_of_character(c9, 0).order() == 9);
  int faithful9 = -1;
  for (int r = 0; r < 9; ++r)
    if (character_conductor(c9, r) == 9) { faithful9 = r; break; }
  REQUIRE(faithful9 >= 0);
  CHECK(kernel_of_character(c9, faithful9).is_trivial());

  // D24 / O_3' = S3; inflate its degree-2 character: kernel of order 4.
  PermGroup d24 = dihedral_group(24);
  CharacterTable dt = character_table(d24);
  PermGroup o3p = o_pprime(d24, dt.classes, 3);
  QuotientMap q = quotient_group(d24, o3p);
  CharacterTable s3q = character_table(q.image);
  REQUIRE(s3q.degrees == std::vector<u64>{1, 1, 2});
  int lifted = inflate(s3q, 2, q, dt);
  CHECK(dt.degrees[lifted] == 2);
  CHECK(kernel_of_character(dt, lifted).order() == 4);
  CHECK(character_conductor(dt, lifted) == character_conductor(s3q, 2));
  CHECK(inflate(s3q, 0, q, dt) == 0);
  for (int r = 0; r < s3q.num_chars(); ++r) {
    int up = inflate(s3q, r, q, dt);
    CHECK(inner_product(dt, dt.irr[up], dt.irr[up]) == CycNum(1l));
  }
}

TEST_CASE("inertia and semi-inertia") {
  PermGroup s3g = symmetric_group(3);
  PermGroup c3sub = PermGroup::from_generators(3, {Perm::parse_cycles("(1 2 3)", 3)});
  CharacterTable c3 = character_table(c3sub);
  int faithful = -1;
  for (int r = 0; r < 3; ++r)
    if (c3.irr[r][1] == CycNum::root_of_unity(3, 1)) faithful = r;

  InertiaData data = inertia_groups(s3g, c3, faithful);
  CHECK(data.stabilizer.order() == 3);
  CHECK(data.semi_stabilizer.order() == 6);

  // Trivial character: both groups are all of G.
  InertiaData triv = inertia_groups(s3g, c3, 0);
  CHECK(triv.stabilizer.order() == 6);
  CHECK(triv.semi_stabilizer.order() == 6);

  // C6 over C3: conjugation is trivial, Galois orbit matched by identity.
  PermGroup c6 = cyclic_group(6);
  PermGroup c3in6 = PermGroup::from_generators(6, {Perm::parse_cycles("(1 3 5)(2 4 6)", 6)});
  CharacterTable c3t = character_table(c3in6);
  int f6 = -1;
  for (int r = 0; r < 3; ++r)
    if (character_conductor(c3t, r) == 3) { f6 = r; break; }
  InertiaData d6 = inertia_groups(c6, c3t, f6);
  CHECK(d6.stabilizer.order() == 6);
  CHECK(d6.semi_stabilizer.order() == 6);
}
