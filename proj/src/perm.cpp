#include "perm.hpp"

#include <cctype>
#include <sstream>

namespace charlab {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= (int)img_.size() || seen[v])
      fail_input("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  Perm p;
  p.img_ = std::move(im);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  check(degree() == o.degree(), ErrKind::Domain, "permutation degree mismatch");
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm Perm::power(i64 k) const {
  u64 o = order();
  i64 e = k % (i64)o;
  if (e < 0) e += (i64)o;
  Perm r = identity(degree());
  Perm b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this) * g; }

u64 Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  u64 o = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    u64 len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j];
      ++len;
    }
    o = lcm_u64(o, len);
  }
  return o;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = 1;
      continue;
    }
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      first = false;
      os << (j + 1);
      j = img_[j];
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') fail_input("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit((unsigned char)text[pos]))) ++pos;
      if (start == pos) fail_input("expected point in cycle notation: " + text);
      int v = std::stoi(text.substr(start, pos - start));
      if (v < 1 || v > degree) fail_input("cycle point out of range: " + text);
      cyc.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (im[from] != from) fail_input("point repeated across cycles: " + text);
      im[from] = to;
    }
    any = true;
    skip_ws();
  }
  (void)any;
  return Perm(std::move(im));
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int v : img_) {
    h ^= (std::size_t)v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace charlab
