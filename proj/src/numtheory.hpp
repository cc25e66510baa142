#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "common.hpp"

namespace charlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

inline std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> f;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      f.push_back({p, e});
    }
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

inline u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline std::vector<u64> divisors_sorted(u64 n) {
  std::vector<u64> d{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t m = d.size();
    u64 q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
      for (std::size_t j = 0; j < m; ++j) d.push_back(d[j] * q);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

inline int valuation(u64 n, u64 p) {
  int v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

inline u64 p_part(u64 n, u64 p) {
  u64 r = 1;
  while (n % p == 0) { n /= p; r *= p; }
  return r;
}

inline u64 pow_u64(u64 b, int e) {
  u64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline u64 mod_pow(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = (unsigned __int128)r * b % m;
    b = (unsigned __int128)b * b % m;
    e >>= 1;
  }
  return r;
}

// Extended gcd on signed values; returns g and x,y with a*x + b*y = g.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) { x = 1; y = 0; return a; }
  i64 x1, y1;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline u64 mod_inverse(u64 a, u64 m) {
  i64 x, y;
  i64 g = ext_gcd((i64)(a % m), (i64)m, x, y);
  check(g == 1 || g == -1, ErrKind::Domain, "element not invertible in Z/m");
  i64 r = x % (i64)m;
  if (r < 0) r += (i64)m;
  return (u64)r;
}

// Solves x = r1 mod m1, x = r2 mod m2 for coprime moduli.
inline u64 crt_pair(u64 r1, u64 m1, u64 r2, u64 m2) {
  if (m1 == 1) return r2 % m2;
  if (m2 == 1) return r1 % m1;
  u64 inv = mod_inverse(m1 % m2, m2);
  u64 diff = (r2 + m2 - r1 % m2) % m2;
  u64 t = (unsigned __int128)diff * inv % m2;
  return r1 + m1 * t;
}

inline u64 multiplicative_order(u64 a, u64 n) {
  if (n == 1) return 1;
  check(gcd_u64(a % n, n) == 1, ErrKind::Domain, "order of non-unit mod n");
  u64 ord = euler_phi(n);
  for (auto [p, e] : factorize(ord)) {
    for (int i = 0; i < e && mod_pow(a, ord / p, n) == 1; ++i) ord /= p;
  }
  return ord;
}

// Units of Z/n in ascending order ({0} for n = 1).
inline std::vector<u64> units_mod(u64 n) {
  std::vector<u64> u;
  for (u64 t = 1; t <= n; ++t)
    if (gcd_u64(t, n) == 1) u.push_back(t % n);
  return u;
}

}  // namespace charlab
