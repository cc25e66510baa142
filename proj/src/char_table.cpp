#include "char_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "modular.hpp"

namespace charlab {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> echelonize(const Fp& F, std::vector<std::vector<u64>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  int cols = (int)rows[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < (int)rows.size(); ++c) {
    int pr = -1;
    for (int i = r; i < (int)rows.size(); ++i)
      if (rows[i][c] != 0) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(rows[pr], rows[r]);
    u64 inv = F.inv(rows[r][c]);
    for (int j = 0; j < cols; ++j) rows[r][j] = F.mul(rows[r][j], inv);
    for (int i = 0; i < (int)rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 f = rows[i][c];
      for (int j = 0; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

struct DixonContext {
  const ConjClassData* cls;
  int k;
  u64 group_order;
  std::vector<FpMatrix> class_matrices;  // a_{ijl} with M_i.at(j, l)
};

// One attempt at the full table modulo ell; returns false when an eigenspace
// fails to split to dimension one (then the caller retries with the next ell).
bool dixon_attempt(const DixonContext& ctx, u64 ell, u64 exponent,
                   std::vector<std::vector<u64>>* omega_out) {
  const Fp F{ell};
  int k = ctx.k;
  struct Space {
    std::vector<std::vector<u64>> basis;  // reduced echelon rows
    std::vector<int> pivots;
  };
  std::vector<Space> spaces(1);
  spaces[0].basis.assign(k, std::vector<u64>(k, 0));
  for (int i = 0; i < k; ++i) spaces[0].basis[i][i] = 1;
  for (int i = 0; i < k; ++i) spaces[0].pivots.push_back(i);

  for (int mi = 1; mi < k; ++mi) {
    const FpMatrix& M = ctx.class_matrices[mi];
    std::vector<Space> next;
    for (Space& sp : spaces) {
      int d = (int)sp.basis.size();
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // Matrix of M restricted to the subspace (columns act on basis coords).
      std::vector<std::vector<u64>> images(d, std::vector<u64>(k, 0));
      for (int s = 0; s < d; ++s)
        for (int row = 0; row < k; ++row) {
          u64 acc = 0;
          for (int l = 0; l < k; ++l)
            if (sp.basis[s][l] != 0) acc = F.add(acc, F.mul(M.at(row, l), sp.basis[s][l]));
          images[s][row] = acc;
        }
      FpMatrix a(d, d);
      for (int s = 0; s < d; ++s) {
        // coords of image in the reduced-echelon basis = entries at pivots
        std::vector<u64> coord(d);
        for (int r = 0; r < d; ++r) coord[r] = images[s][sp.pivots[r]];
        // invariance check: residual must vanish
        for (int l = 0; l < k; ++l) {
          u64 acc = images[s][l];
          for (int r = 0; r < d; ++r)
            acc = F.sub(acc, F.mul(coord[r], sp.basis[r][l]));
          check(acc == 0, ErrKind::Internal, "class matrix does not preserve subspace");
        }
        for (int r = 0; r < d; ++r) a.at(r, s) = coord[r];
      }
      FpPoly cp = charpoly(F, a);
      std::vector<u64> roots = poly_roots(F, cp);
      for (u64 lambda : roots) {
        FpMatrix shifted = a;
        for (int i = 0; i < d; ++i) shifted.at(i, i) = F.sub(shifted.at(i, i), lambda);
        auto kernel = nullspace(F, shifted);
        if (kernel.empty()) continue;
        Space child;
        for (auto& coord : kernel) {
          std::vector<u64> vec(k, 0);
          for (int r = 0; r < d; ++r)
            if (coord[r] != 0)
              for (int l = 0; l < k; ++l)
                vec[l] = F.add(vec[l], F.mul(coord[r], sp.basis[r][l]));
          child.basis.push_back(std::move(vec));
        }
        child.pivots = echelonize(F, child.basis);
        next.push_back(std::move(child));
      }
    }
    spaces = std::move(next);
    check((int)std::accumulate(spaces.begin(), spaces.end(), (std::size_t)0,
                               [](std::size_t acc, const Space& s) {
                                 return acc + s.basis.size();
                               }) == k,
          ErrKind::Internal, "eigenspace splitting lost dimensions");
  }
  for (const Space& sp : spaces)
    if (sp.basis.size() != 1) return false;

  omega_out->clear();
  for (const Space& sp : spaces) {
    std::vector<u64> v = sp.basis[0];
    check(v[0] != 0, ErrKind::Internal, "eigenvector vanishes at the identity class");
    u64 inv = F.inv(v[0]);
    for (u64& x : v) x = F.mul(x, inv);
    omega_out->push_back(std::move(v));
  }
  (void)exponent;
  return true;
}

}  // namespace

int CharacterTable::index_of(const std::vector<CycNum>& values) const {
  for (int r = 0; r < num_chars(); ++r)
    if (irr[r] == values) return r;
  return -1;
}

std::vector<std::string> CharacterTable::row_encoding(int row) const {
  std::vector<std::string> enc;
  enc.reserve(irr[row].size());
  for (const CycNum& v : irr[row]) enc.push_back(v.encode());
  return enc;
}

CharacterTable character_table(const PermGroup& g, u64 bound) {
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(g, bound);
  const ConjClassData& cls = t.classes;
  int k = cls.num_classes();
  u64 n = g.order();

  t.exponent = 1;
  for (int c = 0; c < k; ++c) t.exponent = lcm_u64(t.exponent, cls.reps[c].order());

  if (k == 1) {
    t.degrees = {1};
    t.irr = {{CycNum(1l)}};
    return t;
  }

  DixonContext ctx;
  ctx.cls = &cls;
  ctx.k = k;
  ctx.group_order = n;
  ctx.class_matrices.assign(k, FpMatrix(k, k));
  for (int i = 0; i < k; ++i) {
    for (int l = 0; l < k; ++l) {
      const Perm& zl = cls.reps[l];
      for (int idx : cls.members[i]) {
        const Perm& x = cls.elements[idx];
        int j = cls.class_of(x.inverse() * zl);
        ++ctx.class_matrices[i].at(j, l);
      }
    }
  }

  u64 max_class = *std::max_element(cls.sizes.begin(), cls.sizes.end());
  u64 isqrt = 1;
  while ((isqrt + 1) * (isqrt + 1) <= n) ++isqrt;
  u64 threshold = 2 * isqrt * max_class;

  std::vector<std::vector<u64>> omega;
  u64 ell = 0;
  bool done = false;
  u64 candidate = (threshold / t.exponent + 1) * t.exponent + 1;
  for (int attempt = 0; attempt < 8 && !done; ++candidate) {
    if (candidate % t.exponent != 1) continue;
    if (!is_prime_u64(candidate) || n % candidate == 0) continue;
    ++attempt;
    if (dixon_attempt(ctx, candidate, t.exponent, &omega)) {
      ell = candidate;
      done = true;
    }
  }
  check(done, ErrKind::Internal, "character table: eigenspace splitting failed");

  const Fp F{ell};
  u64 gen = primitive_root(F);
  u64 w = F.pow(gen, (ell - 1) / t.exponent);  // primitive e-th root mod ell

  std::vector<u64> inv_size(k);
  for (int c = 0; c < k; ++c) inv_size[c] = F.inv(cls.sizes[c] % ell);

  // Power maps and root-of-unity powers, shared across all rows.
  std::vector<std::vector<int>> power_classes(k);
  std::vector<std::vector<u64>> zpows(k);
  for (int j = 0; j < k; ++j) {
    u64 o = cls.reps[j].order();
    power_classes[j].resize(o);
    for (u64 s = 0; s < o; ++s) power_classes[j][s] = cls.power_class(j, (i64)s);
    u64 z = F.pow(w, t.exponent / o);
    zpows[j].resize(o);
    zpows[j][0] = 1;
    for (u64 x = 1; x < o; ++x) zpows[j][x] = F.mul(zpows[j][x - 1], z);
  }

  struct Row {
    u64 degree;
    std::vector<CycNum> values;
    std::vector<std::string> enc;
  };
  std::vector<Row> rows;
  u64 degree_square_sum = 0;
  for (const auto& v : omega) {
    // d^2 = |G| / sum_i omega_i * omega_{i'} / n_{i'}
    u64 s = 0;
    for (int i = 0; i < k; ++i) {
      int ip = cls.inverse_class[i];
      s = F.add(s, F.mul(F.mul(v[i], v[ip]), inv_size[ip]));
    }
    u64 d2 = F.mul(n % ell, F.inv(s));
    u64 r = sqrt_mod(F, d2);
    u64 d = std::min(r, ell - r);
    check(d >= 1 && d * d <= n, ErrKind::Internal, "character degree out of range");

    std::vector<u64> chibar(k);
    for (int i = 0; i < k; ++i) chibar[i] = F.mul(F.mul(d % ell, v[i]), inv_size[i]);

    Row row;
    row.degree = d;
    row.values.resize(k);
    for (int j = 0; j < k; ++j) {
      u64 o = cls.reps[j].order();
      u64 inv_o = F.inv(o % ell);
      std::map<i64, Rational> terms;
      u64 mu_total = 0;
      for (u64 tpow = 0; tpow < o; ++tpow) {
        u64 acc = 0;
        for (u64 spow = 0; spow < o; ++spow) {
          u64 zexp = (o - (spow * tpow) % o) % o;
          acc = F.add(acc, F.mul(chibar[power_classes[j][spow]], zpows[j][zexp]));
        }
        u64 mu = F.mul(acc, inv_o);
        check(mu <= d, ErrKind::Internal, "character lift multiplicity out of range");
        mu_total += mu;
        if (mu != 0) terms[(i64)tpow] = Rational((long)mu);
      }
      check(mu_total == d, ErrKind::Internal, "character lift multiplicities do not sum to degree");
      row.values[j] = CycNum::from_terms(o, terms).embedded(t.exponent);
    }
    check(row.values[0] == CycNum((long)d), ErrKind::Internal,
          "character value at identity differs from degree");
    degree_square_sum += d * d;
    rows.push_back(std::move(row));
  }
  check(degree_square_sum == n, ErrKind::Internal, "sum of squared degrees mismatch");

  for (Row& row : rows) {
    row.enc.reserve(row.values.size());
    for (const CycNum& v : row.values) row.enc.push_back(v.encode());
  }
  CycNum one(1l);
  std::vector<CycNum> trivial_values(k, one.embedded(1));
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    bool at = a.degree == 1, bt = b.degree == 1;
    if (at || bt) {
      bool a_triv = at && std::all_of(a.values.begin(), a.values.end(),
                                      [&](const CycNum& v) { return v == one; });
      bool b_triv = bt && std::all_of(b.values.begin(), b.values.end(),
                                      [&](const CycNum& v) { return v == one; });
      if (a_triv != b_triv) return a_triv;
    }
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.enc < b.enc;
  });
  for (Row& row : rows) {
    t.degrees.push_back(row.degree);
    t.irr.push_back(std::move(row.values));
  }
  return t;
}

CycNum inner_product(const CharacterTable& t, const std::vector<CycNum>& a,
                     const std::vector<CycNum>& b) {
  check(a.size() == b.size() && (int)a.size() == t.num_classes(), ErrKind::Domain,
        "inner product: class function length mismatch");
  CycNum acc;
  for (int c = 0; c < t.num_classes(); ++c) {
    CycNum term = a[c] * b[c].conj();
    acc = acc + term * Rational((long)t.classes.sizes[c]);
  }
  return acc * Rational(1, (long)t.group.order());
}

void verify_orthogonality(const CharacterTable& t) {
  int k = t.num_chars();
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      CycNum ip = inner_product(t, t.irr[i], t.irr[j]);
      check(ip == CycNum(i == j ? 1l : 0l), ErrKind::Internal, "row orthogonality violated");
    }
  // Column orthogonality: sum_chi chi(g) conj(chi(h)) = delta |C(g)|.
  for (int c = 0; c < t.num_classes(); ++c)
    for (int d = c; d < t.num_classes(); ++d) {
      CycNum acc;
      for (int r = 0; r < k; ++r) acc = acc + t.irr[r][c] * t.irr[r][d].conj();
      CycNum expect(c == d ? (long)(t.group.order() / t.classes.sizes[c]) : 0l);
      check(acc == expect, ErrKind::Internal, "column orthogonality violated");
    }
}

ClassFunction restrict_values(const CharacterTable& t, const std::vector<CycNum>& values,
                              const CharacterTable& sub) {
  check(sub.group.is_subgroup_of(t.group), ErrKind::Domain, "restrict: not a subgroup");
  ClassFunction f;
  f.table = &sub;
  f.values.reserve(sub.num_classes());
  for (int c = 0; c < sub.num_classes(); ++c)
    f.values.push_back(values[t.classes.class_of(sub.classes.reps[c])]);
  return f;
}

ClassFunction restrict_to(const CharacterTable& t, int row, const CharacterTable& sub) {
  return restrict_values(t, t.irr[row], sub);
}

ClassFunction induce_from(const CharacterTable& sub, const std::vector<CycNum>& theta,
                          const CharacterTable& t) {
  check(sub.group.is_subgroup_of(t.group), ErrKind::Domain, "induce: not a subgroup");
  ClassFunction f;
  f.table = &t;
  f.values.assign(t.num_classes(), CycNum());
  u64 h_order = sub.group.order();
  for (int c = 0; c < sub.num_classes(); ++c) {
    int gc = t.classes.class_of(sub.classes.reps[c]);
    f.values[gc] = f.values[gc] + theta[c] * Rational((long)sub.classes.sizes[c]);
  }
  for (int j = 0; j < t.num_classes(); ++j) {
    u64 cent = t.group.order() / t.classes.sizes[j];
    f.values[j] = f.values[j] * make_rational((long)cent, (long)h_order);
  }
  return f;
}

std::vector<Int> decompose(const CharacterTable& t, const std::vector<CycNum>& f) {
  std::vector<Int> mult;
  mult.reserve(t.num_chars());
  for (int r = 0; r < t.num_chars(); ++r) {
    CycNum m = inner_product(t, f, t.irr[r]);
    check(m.is_rational() && is_integer(m.rational_value()), ErrKind::Internal,
          "decomposition multiplicity is not a rational integer");
    mult.push_back(m.rational_value().get_num());
  }
  return mult;
}

std::vector<CycNum> twist_galois_values(const std::vector<CycNum>& values, const GaloisAut& tau) {
  std::vector<CycNum> out;
  out.reserve(values.size());
  for (const CycNum& v : values) out.push_back(v.galois(tau));
  return out;
}

int twist_galois(const CharacterTable& t, int row, const GaloisAut& tau) {
  check(tau.modulus % t.exponent == 0, ErrKind::Domain,
        "twist: automorphism modulus incompatible with table exponent");
  int idx = t.index_of(twist_galois_values(t.irr[row], tau));
  check(idx >= 0, ErrKind::Internal, "galois twist left the table");
  return idx;
}

std::vector<CycNum> conj_twist_values(const CharacterTable& nt, int row, const Perm& g) {
  std::vector<CycNum> out;
  out.reserve(nt.num_classes());
  Perm ginv = g.inverse();
  for (int c = 0; c < nt.num_classes(); ++c) {
    Perm moved = g * nt.classes.reps[c] * ginv;
    out.push_back(nt.irr[row][nt.classes.class_of(moved)]);
  }
  return out;
}

int conj_twist(const CharacterTable& nt, int row, const Perm& g) {
  int idx = nt.index_of(conj_twist_values(nt, row, g));
  check(idx >= 0, ErrKind::Internal, "conjugation twist left the table");
  return idx;
}

PermGroup kernel_of_character(const CharacterTable& t, int row) {
  CycNum deg((long)t.degrees[row]);
  PermGroup ker = PermGroup::trivial(t.group.degree());
  for (int c = 0; c < t.num_classes(); ++c) {
    if (!(t.irr[row][c] == deg)) continue;
    for (int idx : t.classes.members[c]) {
      const Perm& x = t.classes.elements[idx];
      if (!ker.contains(x)) ker = ker.extended(x);
    }
  }
  check(ker.is_normal_in(t.group), ErrKind::Internal, "character kernel is not normal");
  return ker;
}

int inflate(const CharacterTable& image_table, int row, const QuotientMap& q,
            const CharacterTable& source_table) {
  std::vector<CycNum> values;
  values.reserve(source_table.num_classes());
  for (int c = 0; c < source_table.num_classes(); ++c) {
    Perm img = q.forward(source_table.classes.reps[c]);
    CycNum v = image_table.irr[row][image_table.classes.class_of(img)];
    values.push_back(v.embedded(lcm_u64(v.order(), source_table.exponent)));
  }
  int idx = source_table.index_of(values);
  check(idx >= 0, ErrKind::Internal, "inflation is not a row of the source table");
  return idx;
}

InertiaData inertia_groups(const PermGroup& g, const CharacterTable& nt, int row, u64 bound) {
  const PermGroup& n = nt.group;
  check(n.is_normal_in(g), ErrKind::Domain, "inertia: subgroup is not normal");

  // Galois orbit of the character as a set of value-row encodings.
  std::set<std::vector<std::string>> orbit;
  for (u64 t : units_mod(nt.exponent)) {
    GaloisAut tau(nt.exponent, nt.exponent == 1 ? 0 : t);
    auto twisted = twist_galois_values(nt.irr[row], tau);
    std::vector<std::string> enc;
    for (const CycNum& v : twisted) enc.push_back(v.encode());
    orbit.insert(std::move(enc));
  }

  PermGroup stab = n;
  PermGroup semi = n;
  std::vector<Perm> coset_reps;
  for (const Perm& x : g.elements(bound)) {
    bool covered = false;
    for (const Perm& r : coset_reps)
      if (n.contains(x * r.inverse())) { covered = true; break; }
    if (covered) continue;
    coset_reps.push_back(x);
    auto twisted = conj_twist_values(nt, row, x);
    if (twisted == nt.irr[row]) {
      if (!stab.contains(x)) stab = stab.extended(x);
      if (!semi.contains(x)) semi = semi.extended(x);
      continue;
    }
    std::vector<std::string> enc;
    for (const CycNum& v : twisted) enc.push_back(v.encode());
    if (orbit.count(enc) && !semi.contains(x)) semi = semi.extended(x);
  }
  check(n.is_subgroup_of(stab) && stab.is_subgroup_of(semi) && semi.is_subgroup_of(g),
        ErrKind::Internal, "inertia tower violated");
  return {std::move(stab), std::move(semi)};
}

}  // namespace charlab
