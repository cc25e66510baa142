#include "modular.hpp"

namespace charlab {

u64 sqrt_mod(const Fp& F, u64 a) {
  u64 p = F.p;
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  check(F.pow(a, (p - 1) / 2) == 1, ErrKind::Internal, "sqrt_mod: not a square");
  if (p % 4 == 3) return F.pow(a, (p + 1) / 4);
  // Tonelli-Shanks with the least quadratic non-residue.
  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  u64 z = 2;
  while (F.pow(z, (p - 1) / 2) != p - 1) ++z;
  u64 m = (u64)s;
  u64 c = F.pow(z, q);
  u64 t = F.pow(a, q);
  u64 r = F.pow(a, (q + 1) / 2);
  while (t != 1) {
    u64 t2 = t;
    u64 i = 0;
    while (t2 != 1) { t2 = F.mul(t2, t2); ++i; }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = F.mul(b, b);
    m = i;
    c = F.mul(b, b);
    t = F.mul(t, c);
    r = F.mul(r, b);
  }
  return r;
}

u64 primitive_root(const Fp& F) {
  u64 p = F.p;
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fac)
      if (F.pow(g, (p - 1) / q) == 1) { ok = false; break; }
    if (ok) return g;
  }
  fail_internal("primitive_root: none found");
}

FpPoly poly_trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

static FpPoly poly_mul(const Fp& F, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return c;
}

FpPoly poly_mod(const Fp& F, FpPoly a, const FpPoly& mod) {
  a = poly_trim(std::move(a));
  int dm = (int)mod.size() - 1;
  u64 lead_inv = F.inv(mod[dm]);
  while ((int)a.size() - 1 >= dm) {
    int k = (int)a.size() - 1 - dm;
    u64 c = F.mul(a.back(), lead_inv);
    if (c != 0)
      for (int j = 0; j <= dm; ++j) a[k + j] = F.sub(a[k + j], F.mul(c, mod[j]));
    a.pop_back();
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

FpPoly poly_mul_mod(const Fp& F, const FpPoly& a, const FpPoly& b, const FpPoly& mod) {
  return poly_mod(F, poly_mul(F, a, b), mod);
}

FpPoly poly_gcd(const Fp& F, FpPoly a, FpPoly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    FpPoly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = F.inv(a.back());
    for (u64& c : a) c = F.mul(c, inv);
  }
  return a;
}

FpPoly poly_powmod(const Fp& F, FpPoly base, u64 e, const FpPoly& mod) {
  FpPoly r{1};
  base = poly_mod(F, std::move(base), mod);
  while (e) {
    if (e & 1) r = poly_mul_mod(F, r, base, mod);
    base = poly_mul_mod(F, base, base, mod);
    e >>= 1;
  }
  return r;
}

FpPoly poly_divexact(const Fp& F, FpPoly a, const FpPoly& b) {
  a = poly_trim(std::move(a));
  int db = (int)b.size() - 1;
  int da = (int)a.size() - 1;
  if (da < db) return {};
  u64 lead_inv = F.inv(b[db]);
  FpPoly q(da - db + 1, 0);
  for (int k = da - db; k >= 0; --k) {
    u64 c = F.mul(a[k + db], lead_inv);
    q[k] = c;
    if (c != 0)
      for (int j = 0; j <= db; ++j) a[k + j] = F.sub(a[k + j], F.mul(c, b[j]));
  }
  return q;
}

static void collect_roots(const Fp& F, FpPoly g, std::vector<u64>& out) {
  g = poly_trim(std::move(g));
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(F.mul(F.neg(g[0]), F.inv(g[1])));
    return;
  }
  for (u64 s = 0;; ++s) {
    check(s < F.p, ErrKind::Internal, "poly_roots: split scan exhausted");
    // Try factor (x - s) directly first.
    u64 val = 0;
    for (std::size_t i = g.size(); i-- > 0;) val = F.add(F.mul(val, s), g[i]);
    if (val == 0) {
      out.push_back(s);
      g = poly_divexact(F, g, FpPoly{F.neg(s), 1});
      g = poly_trim(std::move(g));
      if (g.size() <= 1) return;
      if (g.size() == 2) {
        out.push_back(F.mul(F.neg(g[0]), F.inv(g[1])));
        return;
      }
      continue;
    }
    FpPoly t = poly_powmod(F, FpPoly{F.neg(s), 1}, (F.p - 1) / 2, g);
    if (t.empty())
      t = FpPoly{F.p - 1};
    else
      t[0] = F.sub(t[0], 1);
    FpPoly h = poly_gcd(F, g, t);
    if (!h.empty() && h.size() > 1 && h.size() < g.size()) {
      collect_roots(F, h, out);
      collect_roots(F, poly_divexact(F, g, h), out);
      return;
    }
  }
}

std::vector<u64> poly_roots(const Fp& F, const FpPoly& f) {
  FpPoly g = poly_trim(f);
  check(!g.empty(), ErrKind::Internal, "poly_roots: zero polynomial");
  // Restrict to distinct roots in F_p: gcd(f, x^p - x).
  FpPoly xp = poly_powmod(F, FpPoly{0, 1}, F.p, g);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = F.sub(xp[1], 1);
  FpPoly sf = poly_gcd(F, g, xp);
  std::vector<u64> out;
  collect_roots(F, sf, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<u64>> nullspace(const Fp& F, FpMatrix m) {
  int r = m.rows, c = m.cols;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int pr = -1;
    for (int i = row; i < r; ++i)
      if (m.at(i, col) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < c; ++j) std::swap(m.at(pr, j), m.at(row, j));
    u64 inv = F.inv(m.at(row, col));
    for (int j = 0; j < c; ++j) m.at(row, j) = F.mul(m.at(row, j), inv);
    for (int i = 0; i < r; ++i) {
      if (i == row) continue;
      u64 f = m.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < c; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(c, 0);
  for (int pc : pivot_col) is_pivot[pc] = 1;
  std::vector<std::vector<u64>> basis;
  for (int col = 0; col < c; ++col) {
    if (is_pivot[col]) continue;
    std::vector<u64> v(c, 0);
    v[col] = 1;
    for (int i = 0; i < (int)pivot_col.size(); ++i)
      v[pivot_col[i]] = F.neg(m.at(i, col));
    basis.push_back(std::move(v));
  }
  return basis;
}

FpPoly charpoly(const Fp& F, FpMatrix m) {
  int n = m.rows;
  check(n == m.cols, ErrKind::Internal, "charpoly: square matrix required");
  if (n == 0) return FpPoly{1};
  // Hessenberg reduction.
  for (int k = 0; k < n - 2; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i)
      if (m.at(i, k) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k + 1, j));
      for (int i = 0; i < n; ++i) std::swap(m.at(i, piv), m.at(i, k + 1));
    }
    u64 inv = F.inv(m.at(k + 1, k));
    for (int i = k + 2; i < n; ++i) {
      u64 f = F.mul(m.at(i, k), inv);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(k + 1, j)));
      for (int j = 0; j < n; ++j) m.at(j, k + 1) = F.add(m.at(j, k + 1), F.mul(f, m.at(j, i)));
    }
  }
  // charpoly of Hessenberg by the standard recurrence; p[i] = charpoly of
  // leading i x i block.
  std::vector<FpPoly> p(n + 1);
  p[0] = FpPoly{1};
  for (int i = 1; i <= n; ++i) {
    // p[i] = (x - m[i-1][i-1]) * p[i-1] - sum over trailing products
    FpPoly t(p[i - 1].size() + 1, 0);
    for (std::size_t j = 0; j < p[i - 1].size(); ++j) {
      t[j + 1] = F.add(t[j + 1], p[i - 1][j]);
      t[j] = F.sub(t[j], F.mul(m.at(i - 1, i - 1), p[i - 1][j]));
    }
    u64 prod = 1;
    for (int k = i - 1; k >= 1; --k) {
      prod = F.mul(prod, m.at(k, k - 1));
      u64 coef = F.mul(prod, m.at(k - 1, i - 1));
      if (coef == 0) continue;
      for (std::size_t j = 0; j < p[k - 1].size(); ++j)
        t[j] = F.sub(t[j], F.mul(coef, p[k - 1][j]));
    }
    p[i] = std::move(t);
  }
  return p[n];
}

Fq Fq::make(u64 p, int r) {
  Fq f;
  f.base = Fp{p};
  check(r >= 1, ErrKind::Internal, "Fq: degree must be >= 1");
  if (r == 1) {
    f.modulus = FpPoly{0, 1};  // plain F_p, modulus x
    return f;
  }
  // Lexicographically least monic irreducible of degree r, scanning constant
  // term upward (coefficient vector read as a base-p number, low digit first).
  auto fac = factorize((u64)r);
  u64 total = 1;
  for (int i = 0; i < r; ++i) total *= p;  // p^r candidate lower parts
  for (u64 code = 0; code < total; ++code) {
    FpPoly cand(r + 1, 0);
    u64 rest = code;
    for (int i = 0; i < r; ++i) { cand[i] = rest % p; rest /= p; }
    cand[r] = 1;
    // Irreducible iff x^(p^r) = x mod cand and gcd(x^(p^(r/q)) - x, cand) = 1.
    Fp F{p};
    FpPoly x{0, 1};
    FpPoly xq = x;
    for (int i = 0; i < r; ++i) xq = poly_powmod(F, xq, p, cand);
    FpPoly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = F.sub(diff[1], 1);
    if (!poly_trim(diff).empty()) continue;
    bool ok = true;
    for (auto [q, e] : fac) {
      FpPoly xs = x;
      for (int i = 0; i < r / (int)q; ++i) xs = poly_powmod(F, xs, p, cand);
      FpPoly d2 = xs;
      if (d2.size() < 2) d2.resize(2, 0);
      d2[1] = F.sub(d2[1], 1);
      FpPoly g = poly_gcd(F, cand, d2);
      if (g.size() != 1) { ok = false; break; }
    }
    if (!ok) continue;
    f.modulus = cand;
    return f;
  }
  fail_internal("Fq: no irreducible polynomial found");
}

Fq::Elt Fq::one() const {
  Elt e = zero();
  e[0] = 1;
  return e;
}

Fq::Elt Fq::from_scalar(u64 v) const {
  Elt e = zero();
  e[0] = v % base.p;
  return e;
}

Fq::Elt Fq::add(const Elt& a, const Elt& b) const {
  Elt c = zero();
  for (int i = 0; i < degree(); ++i) c[i] = base.add(a[i], b[i]);
  return c;
}

Fq::Elt Fq::mul(const Elt& a, const Elt& b) const {
  if (degree() == 1) {
    Elt c = zero();
    c[0] = base.mul(a[0], b[0]);
    return c;
  }
  FpPoly prod = poly_mul_mod(base, poly_trim(a), poly_trim(b), modulus);
  Elt c = zero();
  for (std::size_t i = 0; i < prod.size(); ++i) c[i] = prod[i];
  return c;
}

Fq::Elt Fq::pow(Elt a, u64 e) const {
  Elt r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool Fq::is_zero(const Elt& a) const {
  for (u64 v : a)
    if (v != 0) return false;
  return true;
}

u64 Fq::elt_order(const Elt& a, u64 group_order) const {
  u64 ord = group_order;
  for (auto [q, e] : factorize(group_order)) {
    for (int i = 0; i < e; ++i) {
      Elt t = pow(a, ord / q);
      if (t == one())
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

}  // namespace charlab
