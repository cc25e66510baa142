#pragma once

#include <map>
#include <string>
#include <vector>

#include "numtheory.hpp"
#include "rational.hpp"

namespace charlab {

// n-th cyclotomic polynomial as a dense monic integer coefficient vector
// (index = exponent). Cached per n; the cache is synchronized.
const std::vector<Int>& cyclotomic_poly(u64 n);

// A Galois automorphism of Q_n, acting as zeta_n -> zeta_n^residue.
struct GaloisAut {
  u64 modulus = 1;
  u64 residue = 0;  // residue mod modulus, coprime to it (0 when modulus == 1)

  GaloisAut() = default;
  GaloisAut(u64 n, u64 t);

  bool is_identity() const { return modulus == 1 || residue == 1; }
  GaloisAut compose(const GaloisAut& other) const;  // residue multiplication
  u64 order() const { return multiplicative_order(residue == 0 ? 1 : residue, modulus); }
};

// sigma_alpha: fixes p'-order roots of unity, raises p-power order roots to
// their (1+p^alpha)-th power; realized as a residue mod n by CRT.
GaloisAut sigma_alpha(u64 p, int alpha, u64 n);

// An exact element of Q_n in the power basis {zeta_n^k : 0 <= k < phi(n)},
// kept reduced modulo the n-th cyclotomic polynomial. Canonical form is
// unique: equal elements of a fixed Q_n have identical coefficient maps.
class CycNum {
 public:
  CycNum() : order_(1) {}
  explicit CycNum(const Rational& r);
  explicit CycNum(long v) : CycNum(Rational(v)) {}

  static CycNum root_of_unity(u64 n, i64 k);
  // Builds sum of c_k * zeta_n^k from an arbitrary exponent map and reduces.
  static CycNum from_terms(u64 n, const std::map<i64, Rational>& terms);

  u64 order() const { return order_; }
  const std::map<i64, Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  bool has_integer_coeffs() const;

  // Re-expresses the element in Q_m for a multiple m of the current order.
  CycNum embedded(u64 m) const;

  CycNum operator-() const;
  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator*(const Rational& r) const;
  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // Image under a Galois automorphism; the element's order must divide the
  // modulus (it is embedded up first). Throws Domain otherwise.
  CycNum galois(const GaloisAut& t) const;
  CycNum conj() const;  // complex conjugation: zeta -> zeta^(-1)

  // Conductor of Q(this): the least n0 with the element inside Q_{n0}.
  u64 conductor() const;

  // Canonical string at the element's own order, e.g. "12|1:1/2|7:-3".
  std::string encode() const;
  static CycNum decode(const std::string& s);
  // Human-readable form using E(n) for a primitive n-th root of unity.
  std::string str() const;

 private:
  u64 order_;
  std::map<i64, Rational> coeffs_;  // exponent -> nonzero coefficient

  void reduce();
};

// Residues t in (Z/n)^x whose Galois action fixes every value. Result is
// ascending and closed under multiplication.
std::vector<u64> fixing_group(const std::vector<CycNum>& values, u64 n);

// Least divisor d of n such that every unit t = 1 (mod d) fixes all values.
u64 conductor_of_values(const std::vector<CycNum>& values, u64 n);

}  // namespace charlab
