#include "cyclotomic.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace charlab {

namespace {

// Exact division of dense integer polynomials (b monic divides a).
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
  int db = (int)b.size() - 1;
  int da = (int)a.size() - 1;
  std::vector<Int> q(da - db + 1, 0);
  for (int k = da - db; k >= 0; --k) {
    Int c = a[k + db];
    if (c != 0) {
      q[k] = c;
      for (int j = 0; j <= db; ++j) a[k + j] -= c * b[j];
    }
  }
  return q;
}

std::vector<Int> compute_cyclotomic(u64 n) {
  // x^n - 1 divided by Phi_d for all proper divisors d of n.
  std::vector<Int> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (u64 d : divisors_sorted(n)) {
    if (d == n) continue;
    poly = poly_div_exact(std::move(poly), cyclotomic_poly(d));
  }
  return poly;
}

std::mutex g_phi_mutex;
std::unordered_map<u64, std::vector<Int>*> g_phi_cache;

}  // namespace

const std::vector<Int>& cyclotomic_poly(u64 n) {
  check(n >= 1, ErrKind::Domain, "cyclotomic_poly: n must be positive");
  {
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return *it->second;
  }
  // Computed outside the lock; recursion reaches smaller n only.
  auto* fresh = new std::vector<Int>(compute_cyclotomic(n));
  std::lock_guard<std::mutex> lk(g_phi_mutex);
  auto [it, inserted] = g_phi_cache.insert({n, fresh});
  if (!inserted) delete fresh;
  return *it->second;
}

GaloisAut::GaloisAut(u64 n, u64 t) : modulus(n) {
  check(n >= 1, ErrKind::Domain, "GaloisAut: modulus must be positive");
  residue = n == 1 ? 0 : ((t % n) + n) % n;
  if (n > 1)
    check(gcd_u64(residue, n) == 1, ErrKind::Domain,
          "GaloisAut: residue not coprime to modulus");
}

GaloisAut GaloisAut::compose(const GaloisAut& other) const {
  check(modulus == other.modulus, ErrKind::Domain, "GaloisAut: modulus mismatch");
  if (modulus == 1) return *this;
  return GaloisAut(modulus, (unsigned __int128)residue * other.residue % modulus);
}

GaloisAut sigma_alpha(u64 p, int alpha, u64 n) {
  check(alpha >= 1, ErrKind::Domain, "sigma_alpha: alpha must be >= 1");
  u64 pa = p_part(n, p);
  u64 m = n / pa;
  u64 lift = (mod_pow(p, (u64)alpha, pa) + 1) % pa;  // 1 + p^alpha mod p^a
  u64 t = crt_pair(lift, pa, 1 % m, m);
  if (n == 1) return GaloisAut(1, 0);
  return GaloisAut(n, t % n);
}

CycNum::CycNum(const Rational& r) : order_(1) {
  if (r != 0) coeffs_[0] = r;
}

CycNum CycNum::root_of_unity(u64 n, i64 k) {
  check(n >= 1, ErrKind::Domain, "root_of_unity: order must be positive");
  CycNum c;
  c.order_ = n;
  i64 e = ((k % (i64)n) + (i64)n) % (i64)n;
  c.coeffs_[e] = Rational(1);
  c.reduce();
  return c;
}

CycNum CycNum::from_terms(u64 n, const std::map<i64, Rational>& terms) {
  CycNum c;
  c.order_ = n;
  for (auto& [k, v] : terms) {
    if (v == 0) continue;
    i64 e = ((k % (i64)n) + (i64)n) % (i64)n;
    c.coeffs_[e] += v;
  }
  c.reduce();
  return c;
}

void CycNum::reduce() {
  const std::vector<Int>& phi = cyclotomic_poly(order_);
  i64 deg = (i64)phi.size() - 1;
  while (!coeffs_.empty()) {
    auto it = std::prev(coeffs_.end());
    i64 k = it->first;
    if (k < deg) break;
    Rational c = it->second;
    coeffs_.erase(it);
    if (c == 0) continue;
    for (i64 j = 0; j < deg; ++j) {
      if (phi[j] == 0) continue;
      coeffs_[k - deg + j] -= c * Rational(phi[j]);
    }
  }
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

bool CycNum::is_rational() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational CycNum::rational_value() const {
  check(is_rational(), ErrKind::Domain, "rational_value on irrational element");
  return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
}

bool CycNum::has_integer_coeffs() const {
  for (auto& [k, v] : coeffs_)
    if (!is_integer(v)) return false;
  return true;
}

CycNum CycNum::embedded(u64 m) const {
  check(m % order_ == 0, ErrKind::Domain, "embedded: target order not a multiple");
  if (m == order_) return *this;
  CycNum c;
  c.order_ = m;
  u64 scale = m / order_;
  for (auto& [k, v] : coeffs_) c.coeffs_[k * (i64)scale] = v;
  c.reduce();
  return c;
}

CycNum CycNum::operator-() const {
  CycNum c(*this);
  for (auto& [k, v] : c.coeffs_) v = -v;
  return c;
}

CycNum CycNum::operator+(const CycNum& o) const {
  u64 n = lcm_u64(order_, o.order_);
  CycNum a = embedded(n), b = o.embedded(n);
  for (auto& [k, v] : b.coeffs_) {
    auto [it, inserted] = a.coeffs_.insert({k, v});
    if (!inserted) {
      it->second += v;
      if (it->second == 0) a.coeffs_.erase(it);
    }
  }
  return a;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
  u64 n = lcm_u64(order_, o.order_);
  CycNum a = embedded(n), b = o.embedded(n);
  CycNum c;
  c.order_ = n;
  for (auto& [ka, va] : a.coeffs_)
    for (auto& [kb, vb] : b.coeffs_) {
      Rational prod = va * vb;
      auto [it, inserted] = c.coeffs_.insert({ka + kb, prod});
      if (!inserted) it->second += prod;
    }
  c.reduce();
  return c;
}

CycNum CycNum::operator*(const Rational& r) const {
  if (r == 0) return CycNum();
  CycNum c(*this);
  for (auto& [k, v] : c.coeffs_) v *= r;
  return c;
}

bool CycNum::operator==(const CycNum& o) const {
  if (order_ == o.order_) return coeffs_ == o.coeffs_;
  u64 n = lcm_u64(order_, o.order_);
  return embedded(n).coeffs_ == o.embedded(n).coeffs_;
}

CycNum CycNum::galois(const GaloisAut& t) const {
  check(t.modulus % order_ == 0, ErrKind::Domain,
        "galois: automorphism modulus is not a multiple of the element order");
  CycNum a = embedded(t.modulus);
  if (t.is_identity()) return a;
  CycNum c;
  c.order_ = a.order_;
  for (auto& [k, v] : a.coeffs_) {
    i64 e = (i64)((unsigned __int128)(u64)k * t.residue % a.order_);
    c.coeffs_[e] += v;
  }
  c.reduce();
  return c;
}

CycNum CycNum::conj() const {
  if (order_ <= 2) return *this;
  return galois(GaloisAut(order_, order_ - 1));
}

u64 CycNum::conductor() const { return conductor_of_values({*this}, order_); }

std::string CycNum::encode() const {
  std::ostringstream os;
  os << order_;
  for (auto& [k, v] : coeffs_) os << '|' << k << ':' << rational_str(v);
  return os.str();
}

CycNum CycNum::decode(const std::string& s) {
  std::istringstream is(s);
  std::string part;
  check((bool)std::getline(is, part, '|'), ErrKind::Input, "CycNum::decode: empty");
  CycNum c;
  try {
    c.order_ = std::stoull(part);
  } catch (const std::exception&) {
    fail_input("CycNum::decode: bad order");
  }
  check(c.order_ >= 1, ErrKind::Input, "CycNum::decode: bad order");
  while (std::getline(is, part, '|')) {
    auto colon = part.find(':');
    check(colon != std::string::npos, ErrKind::Input, "CycNum::decode: bad term");
    i64 k;
    Rational v;
    try {
      k = std::stoll(part.substr(0, colon));
      v = Rational(part.substr(colon + 1));
      v.canonicalize();
    } catch (const std::exception&) {
      fail_input("CycNum::decode: bad term");
    }
    if (v != 0) c.coeffs_[k] = v;
  }
  c.reduce();
  return c;
}

std::string CycNum::str() const {
  if (is_rational()) return rational_str(rational_value());
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : coeffs_) {
    std::string vs = rational_str(v);
    if (!first && vs[0] != '-') os << '+';
    first = false;
    if (k == 0) {
      os << vs;
      continue;
    }
    if (v == 1) {
    } else if (v == -1) {
      os << '-';
    } else {
      os << vs << '*';
    }
    os << "E(" << order_ << ")";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

std::vector<u64> fixing_group(const std::vector<CycNum>& values, u64 n) {
  std::vector<u64> fixed;
  for (u64 t : units_mod(n)) {
    GaloisAut tau(n, n == 1 ? 0 : t);
    bool ok = true;
    for (const CycNum& v : values) {
      if (v.galois(tau) != v) {
        ok = false;
        break;
      }
    }
    if (ok) fixed.push_back(t);
  }
  return fixed;
}

u64 conductor_of_values(const std::vector<CycNum>& values, u64 n) {
  std::vector<u64> fixed = fixing_group(values, n);
  std::vector<char> in_fix(n + 1, 0);
  for (u64 t : fixed) in_fix[t] = 1;
  for (u64 d : divisors_sorted(n)) {
    bool ok = true;
    for (u64 t = 1; t <= n && ok; t += d) {
      if (gcd_u64(t % n == 0 ? n : t % n, n) != 1) continue;
      if (!in_fix[t % n]) ok = false;
    }
    if (ok) return d;
  }
  return n;
}

}  // namespace charlab
