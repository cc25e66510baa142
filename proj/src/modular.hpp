#pragma once

#include <vector>

#include "numtheory.hpp"

namespace charlab {

// Arithmetic mod a word-sized prime ell.
struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return (unsigned __int128)a * b % p; }
  u64 neg(u64 a) const { return a ? p - a : 0; }
  u64 pow(u64 a, u64 e) const { return mod_pow(a, e, p); }
  u64 inv(u64 a) const { return mod_inverse(a, p); }
  u64 from_int(i64 v) const {
    i64 r = v % (i64)p;
    if (r < 0) r += (i64)p;
    return (u64)r;
  }
};

// Deterministic square root mod p (Tonelli-Shanks with scanned non-residue);
// fails Internal if a is not a square.
u64 sqrt_mod(const Fp& F, u64 a);

// Least generator of the multiplicative group mod p.
u64 primitive_root(const Fp& F);

// Dense polynomials over F_p, coefficient index = degree, normalized so the
// leading coefficient is nonzero (empty = zero polynomial).
using FpPoly = std::vector<u64>;

FpPoly poly_trim(FpPoly a);
FpPoly poly_mul_mod(const Fp& F, const FpPoly& a, const FpPoly& b, const FpPoly& mod);
FpPoly poly_mod(const Fp& F, FpPoly a, const FpPoly& mod);
FpPoly poly_gcd(const Fp& F, FpPoly a, FpPoly b);  // monic result
FpPoly poly_powmod(const Fp& F, FpPoly base, u64 e, const FpPoly& mod);
FpPoly poly_divexact(const Fp& F, FpPoly a, const FpPoly& b);

// All roots (without multiplicity) of a nonzero polynomial, ascending.
// Deterministic: splits gcd(f, (x - s)^((p-1)/2) - 1) over s = 0,1,2,...
std::vector<u64> poly_roots(const Fp& F, const FpPoly& f);

// Row-major square/rectangular matrix over F_p.
struct FpMatrix {
  int rows = 0, cols = 0;
  std::vector<u64> a;
  FpMatrix() = default;
  FpMatrix(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, 0) {}
  u64& at(int r, int c) { return a[(std::size_t)r * cols + c]; }
  u64 at(int r, int c) const { return a[(std::size_t)r * cols + c]; }
};

// Basis of the null space (row vectors), reduced-echelon, deterministic.
std::vector<std::vector<u64>> nullspace(const Fp& F, FpMatrix m);

// Characteristic polynomial of a square matrix via Hessenberg reduction.
FpPoly charpoly(const Fp& F, FpMatrix m);

// Elements of F_q = F_p[x]/(f) as coefficient vectors of size deg(f).
// The modulus f is chosen deterministically: the lexicographically least
// monic irreducible of the requested degree (coefficients scanned low to
// high). Used for the block-distribution reduction map.
struct Fq {
  Fp base;
  FpPoly modulus;  // monic irreducible, degree r >= 1
  int degree() const { return (int)modulus.size() - 1; }

  static Fq make(u64 p, int r);

  using Elt = std::vector<u64>;  // size = degree(), little-endian coeffs
  Elt zero() const { return Elt(degree(), 0); }
  Elt one() const;
  Elt from_scalar(u64 v) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(Elt a, u64 e) const;
  bool is_zero(const Elt& a) const;

  // Multiplicative order (element must be nonzero).
  u64 elt_order(const Elt& a, u64 group_order) const;
};

}  // namespace charlab
