#include "blocks.hpp"

#include <map>

namespace charlab {

u64 character_conductor(const CharacterTable& t, int row) {
  return conductor_of_values(t.irr[row], t.exponent);
}

int p_level(const CharacterTable& t, int row, u64 p) {
  return valuation(character_conductor(t, row), p);
}

bool sigma_invariant(const CharacterTable& t, int row, u64 p, int alpha) {
  GaloisAut tau = sigma_alpha(p, alpha, t.exponent);
  if (tau.is_identity()) return true;
  for (const CycNum& v : t.irr[row])
    if (v.galois(tau) != v) return false;
  return true;
}

BlockPartition block_partition(const CharacterTable& t, u64 p) {
  check(is_prime_u64(p), ErrKind::Domain, "block partition: p must be prime");
  BlockPartition bp;
  bp.p = p;
  int k = t.num_chars();
  bp.block_of.assign(k, -1);

  u64 e = t.exponent;
  u64 pa = p_part(e, p);
  u64 m = e / pa;
  int r = (int)multiplicative_order(p % m, m);
  check(r < 62, ErrKind::Capacity, "block reduction field degree out of range");
  Fq field = Fq::make(p, r);
  u64 q_order = 1;
  for (int i = 0; i < r; ++i) {
    check(q_order <= UINT64_MAX / p, ErrKind::Capacity, "block reduction field too large");
    q_order *= p;
  }

  // Deterministic primitive m-th root: the first element (in base-p code
  // order) whose multiplicative order is divisible by m, powered down to
  // exact order m.
  Fq::Elt zroot = field.one();
  if (m > 1) {
    check((q_order - 1) % m == 0, ErrKind::Internal, "m does not divide q-1");
    bool found = false;
    for (u64 code = 1; code < q_order && !found; ++code) {
      Fq::Elt cand = field.zero();
      u64 rest = code;
      for (int i = 0; i < field.degree(); ++i) { cand[i] = rest % p; rest /= p; }
      if (field.is_zero(cand)) continue;
      u64 ord = field.elt_order(cand, q_order - 1);
      if (ord % m == 0) {
        zroot = field.pow(cand, ord / m);
        found = true;
      }
    }
    check(found, ErrKind::Internal, "no primitive m-th root in the reduction field");
  }
  // zeta_e maps to zroot^A with A = (p^a)^(-1) mod m.
  u64 a_exp = m == 1 ? 0 : mod_inverse(pa % m, m);
  Fq::Elt zeta_image = m == 1 ? field.one() : field.pow(zroot, a_exp);
  std::vector<Fq::Elt> zeta_pow(e, field.one());
  for (u64 i = 1; i < e; ++i) zeta_pow[i] = field.mul(zeta_pow[i - 1], zeta_image);
  {
    // zeta_image must be a root of Phi_e mod p for the substitution to be a
    // ring homomorphism.
    const auto& phi = cyclotomic_poly(e);
    Fq::Elt acc = field.zero();
    Fq::Elt xpow = field.one();
    for (const Int& ci : phi) {
      Int red = ci % (long)p;
      long c = red.get_si();
      if (c < 0) c += (long)p;
      if (c != 0) {
        Fq::Elt scaled = field.zero();
        for (int d = 0; d < field.degree(); ++d) scaled[d] = field.base.mul(xpow[d], (u64)c);
        acc = field.add(acc, scaled);
      }
      xpow = field.mul(xpow, zeta_image);
    }
    check(field.is_zero(acc), ErrKind::Internal, "cyclotomic reduction map ill-defined");
  }

  auto reduce = [&](const CycNum& v) {
    CycNum w = v.embedded(e);
    check(w.has_integer_coeffs(), ErrKind::Internal,
          "central character value is not an algebraic integer");
    Fq::Elt acc = field.zero();
    for (auto& [kexp, coeff] : w.coeffs()) {
      Int num = coeff.get_num();
      Int red = num % (long)p;
      long c = red.get_si();
      if (c < 0) c += (long)p;
      if (c == 0) continue;
      Fq::Elt term = zeta_pow[(u64)kexp];
      Fq::Elt scaled = field.zero();
      for (int i = 0; i < field.degree(); ++i)
        scaled[i] = field.base.mul(term[i], (u64)c);
      acc = field.add(acc, scaled);
    }
    return acc;
  };

  std::map<std::vector<std::vector<u64>>, int> signature_to_block;
  for (int row = 0; row < k; ++row) {
    std::vector<std::vector<u64>> sig;
    sig.reserve(t.num_classes());
    for (int c = 0; c < t.num_classes(); ++c) {
      CycNum omega =
          t.irr[row][c] * make_rational((long)t.classes.sizes[c], (long)t.degrees[row]);
      sig.push_back(reduce(omega));
    }
    auto [it, inserted] = signature_to_block.insert({std::move(sig), (int)bp.blocks.size()});
    if (inserted) bp.blocks.push_back({});
    bp.block_of[row] = it->second;
    bp.blocks[it->second].push_back(row);
  }
  bp.principal_index = bp.block_of[0];
  return bp;
}

RationalityProfile rationality_profile(const CharacterTable& t, const BlockPartition& bp) {
  RationalityProfile prof;
  prof.p = bp.p;
  prof.exponent = t.exponent;
  for (int row = 0; row < t.num_chars(); ++row) {
    ProfileRow r;
    r.index = row;
    r.degree = t.degrees[row];
    r.conductor = character_conductor(t, row);
    r.level = valuation(r.conductor, bp.p);
    r.p_prime_degree = r.degree % bp.p != 0;
    r.in_b0 = bp.in_principal(row);
    if (r.p_prime_degree) {
      prof.level_spectrum_all.insert(r.level);
      if (r.in_b0) prof.level_spectrum_b0.insert(r.level);
    }
    prof.rows.push_back(r);
  }
  return prof;
}

RationalityProfile rationality_profile(const CharacterTable& t, u64 p) {
  return rationality_profile(t, block_partition(t, p));
}

}  // namespace charlab
