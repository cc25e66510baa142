#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "common.hpp"
#include "numtheory.hpp"

namespace charlab {

// A permutation of {0..deg-1} by its image vector. Products apply the left
// factor first: (a*b)(x) = b(a(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return (int)img_.size(); }
  int operator[](int p) const { return img_[p]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm power(i64 k) const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * (*this) * g
  u64 order() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  auto operator<=>(const Perm& o) const { return img_ <=> o.img_; }

  // 1-based disjoint cycle notation, e.g. "(1 2 3)(4 5)"; identity is "()".
  std::string cycles() const;
  static Perm parse_cycles(const std::string& text, int degree);

  std::size_t hash() const;

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace charlab
