#include "group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace charlab {

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = std::max(degree, 1);
  g.order_big_ = 1;
  return g;
}

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens) {
  PermGroup g;
  g.degree_ = std::max(degree, 1);
  for (auto& p : gens) {
    check(p.degree() == g.degree_, ErrKind::Input, "generator degree mismatch");
    if (!p.is_identity()) g.gens_.push_back(p);
  }
  if (!g.gens_.empty()) {
    Level l0;
    int b = g.degree_;
    for (const Perm& p : g.gens_)
      for (int i = 0; i < g.degree_; ++i)
        if (p[i] != i) { b = std::min(b, i); break; }
    l0.base = b;
    l0.gens = g.gens_;
    g.levels_.push_back(std::move(l0));
    g.schreier_sims(0);
  }
  g.order_big_ = 1;
  for (auto& l : g.levels_) g.order_big_ *= (long)l.transversal.size();
  return g;
}

std::vector<Perm> PermGroup::gens_at(int i) const {
  // Strong generators of the i-th stabilizer: everything stored at level i
  // or deeper (those fix all earlier base points).
  std::vector<Perm> out;
  for (int k = i; k < (int)levels_.size(); ++k)
    for (const Perm& s : levels_[k].gens) out.push_back(s);
  return out;
}

void PermGroup::rebuild_orbit(int i) {
  std::vector<Perm> gens = gens_at(i);
  Level& l = levels_[i];
  l.orbit.clear();
  l.transversal.clear();
  l.orbit.push_back(l.base);
  l.transversal.emplace(l.base, Perm::identity(degree_));
  for (std::size_t qi = 0; qi < l.orbit.size(); ++qi) {
    int x = l.orbit[qi];
    const Perm ux = l.transversal.at(x);
    for (const Perm& s : gens) {
      int y = s[x];
      if (!l.transversal.count(y)) {
        l.orbit.push_back(y);
        l.transversal.emplace(y, ux * s);
      }
    }
  }
}

std::pair<Perm, int> PermGroup::sift(Perm g, int from_level) const {
  for (int i = from_level; i < (int)levels_.size(); ++i) {
    int im = g[levels_[i].base];
    auto it = levels_[i].transversal.find(im);
    if (it == levels_[i].transversal.end()) return {std::move(g), i};
    g = g * it->second.inverse();
  }
  return {std::move(g), (int)levels_.size()};
}

void PermGroup::schreier_sims(int i) {
  // levels_ may be resized by deeper recursion; index it fresh each access.
  while (true) {
    rebuild_orbit(i);
    bool changed = false;
    std::vector<Perm> gens = gens_at(i);
    std::size_t orbit_size = levels_[i].orbit.size();
    for (std::size_t qi = 0; qi < orbit_size && !changed; ++qi) {
      int x = levels_[i].orbit[qi];
      Perm ux = levels_[i].transversal.at(x);
      for (std::size_t si = 0; si < gens.size() && !changed; ++si) {
        Perm ws = ux * gens[si];
        Perm uy = levels_[i].transversal.at(ws[levels_[i].base]);
        Perm schreier = ws * uy.inverse();
        if (schreier.is_identity()) continue;
        auto [residue, j] = sift(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        if (j == (int)levels_.size()) {
          Level nl;
          nl.base = degree_;
          for (int pt = 0; pt < degree_; ++pt)
            if (residue[pt] != pt) { nl.base = pt; break; }
          levels_.push_back(std::move(nl));
        }
        levels_[j].gens.push_back(std::move(residue));
        // Re-close every level the new generator participates in.
        for (int k = j; k > i; --k) schreier_sims(k);
        changed = true;
      }
    }
    if (!changed) return;
  }
}

u64 PermGroup::order() const {
  check(order_big_.fits_ulong_p() || order_big_.fits_slong_p(), ErrKind::Capacity,
        "group order exceeds machine range");
  return order_big_.get_ui();
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [res, lvl] = sift(p, 0);
  (void)lvl;
  return res.is_identity();
}

std::vector<Perm> PermGroup::elements(u64 bound) const {
  check(order_big_ <= (long)bound, ErrKind::Capacity,
        "group too large for element enumeration");
  std::vector<Perm> elems{Perm::identity(degree_)};
  for (int i = (int)levels_.size() - 1; i >= 0; --i) {
    std::vector<Perm> next;
    next.reserve(elems.size() * levels_[i].transversal.size());
    for (const Perm& h : elems)
      for (int pt : levels_[i].orbit) next.push_back(h * levels_[i].transversal.at(pt));
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  for (const Perm& s : gens_)
    if (!g.contains(s)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
  if (!is_subgroup_of(g)) return false;
  for (const Perm& x : g.generators())
    for (const Perm& s : gens_)
      if (!contains(s.conjugated_by(x))) return false;
  return true;
}

bool PermGroup::same_subgroup(const PermGroup& other) const {
  return order_big_ == other.order_big_ && other.is_subgroup_of(*this);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

bool PermGroup::is_p_group(u64 p) const {
  Int n = order_big_;
  while (n % (long)p == 0) n /= (long)p;
  return n == 1;
}

u64 PermGroup::exponent(u64 bound) const {
  u64 e = 1;
  for (const Perm& x : elements(bound)) e = lcm_u64(e, x.order());
  return e;
}

PermGroup PermGroup::extended(const Perm& g) const {
  if (contains(g)) return *this;
  std::vector<Perm> gens = gens_;
  gens.push_back(g);
  return from_generators(degree_, std::move(gens));
}

int ConjClassData::class_of(const Perm& p) const {
  auto it = class_index.find(p);
  check(it != class_index.end(), ErrKind::Domain, "element not in group");
  return it->second;
}

int ConjClassData::power_class(int c, i64 k) const {
  return class_of(reps[c].power(k));
}

ConjClassData conjugacy_classes(const PermGroup& g, u64 bound) {
  ConjClassData d;
  d.elements = g.elements(bound);
  std::unordered_map<Perm, int, PermHash> position;
  position.reserve(d.elements.size() * 2);
  for (std::size_t i = 0; i < d.elements.size(); ++i) position.emplace(d.elements[i], (int)i);

  std::vector<int> cls(d.elements.size(), -1);
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    if (cls[i] >= 0) continue;
    int c = (int)d.reps.size();
    d.reps.push_back(d.elements[i]);
    std::vector<int> mem;
    std::deque<int> queue{(int)i};
    cls[i] = c;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      mem.push_back(cur);
      for (const Perm& s : g.generators()) {
        Perm conj = d.elements[cur].conjugated_by(s);
        int pos = position.at(conj);
        if (cls[pos] < 0) {
          cls[pos] = c;
          queue.push_back(pos);
        }
      }
    }
    std::sort(mem.begin(), mem.end());
    d.members.push_back(std::move(mem));
    d.sizes.push_back(d.members.back().size());
  }
  d.class_index.reserve(d.elements.size() * 2);
  for (std::size_t i = 0; i < d.elements.size(); ++i)
    d.class_index.emplace(d.elements[i], cls[i]);
  d.inverse_class.resize(d.reps.size());
  for (int c = 0; c < d.num_classes(); ++c)
    d.inverse_class[c] = d.class_index.at(d.reps[c].inverse());
  return d;
}

namespace {

// Collects the subgroup {x in G : pred(x)}; the predicate set must be a
// subgroup for this to be exact.
template <typename Pred>
PermGroup collect_subgroup(const PermGroup& g, u64 bound, Pred pred) {
  PermGroup h = PermGroup::trivial(g.degree());
  for (const Perm& x : g.elements(bound)) {
    if (x.is_identity() || h.contains(x)) continue;
    if (pred(x)) h = h.extended(x);
  }
  return h;
}

}  // namespace

PermGroup normalizer(const PermGroup& g, const PermGroup& s, u64 bound) {
  return collect_subgroup(g, bound, [&](const Perm& x) {
    for (const Perm& t : s.generators())
      if (!s.contains(t.conjugated_by(x))) return false;
    return true;
  });
}

PermGroup centralizer(const PermGroup& g, const Perm& x0, u64 bound) {
  return collect_subgroup(g, bound, [&](const Perm& x) { return x * x0 == x0 * x; });
}

PermGroup centralizer(const PermGroup& g, const PermGroup& s, u64 bound) {
  return collect_subgroup(g, bound, [&](const Perm& x) {
    for (const Perm& t : s.generators())
      if (!(x * t == t * x)) return false;
    return true;
  });
}

PermGroup normal_closure(const PermGroup& g, std::vector<Perm> seeds) {
  PermGroup h = PermGroup::trivial(g.degree());
  std::deque<Perm> queue;
  for (Perm& s : seeds) {
    if (!h.contains(s)) {
      h = h.extended(s);
      queue.push_back(std::move(s));
    }
  }
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const Perm& x : g.generators()) {
      Perm conj = cur.conjugated_by(x);
      if (!h.contains(conj)) {
        h = h.extended(conj);
        queue.push_back(std::move(conj));
      }
    }
  }
  return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (const Perm& a : gens)
    for (const Perm& b : gens) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, std::move(comms));
}

PermGroup center(const PermGroup& g, u64 bound) {
  return centralizer(g, g, bound);
}

PermGroup frattini_subgroup(const PermGroup& g) {
  auto fac = factorize(g.order());
  check(fac.size() <= 1, ErrKind::Domain, "frattini subgroup requires a p-group");
  if (fac.empty()) return PermGroup::trivial(g.degree());
  u64 p = fac[0].first;
  std::vector<Perm> seeds;
  const auto& gens = g.generators();
  for (const Perm& a : gens)
    for (const Perm& b : gens) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  for (const Perm& a : gens) {
    Perm ap = a.power((i64)p);
    if (!ap.is_identity()) seeds.push_back(std::move(ap));
  }
  return normal_closure(g, std::move(seeds));
}

namespace {

PermGroup o_pi(const PermGroup& g, const ConjClassData& classes, u64 p, bool want_pprime) {
  std::vector<Perm> gens;
  for (int c = 0; c < classes.num_classes(); ++c) {
    const Perm& rep = classes.reps[c];
    if (rep.is_identity()) continue;
    u64 o = rep.order();
    bool eligible = want_pprime ? (o % p != 0) : (p_part(o, p) == o);
    if (!eligible) continue;
    PermGroup ncl = normal_closure(g, {rep});
    u64 n = ncl.order();
    bool good = want_pprime ? (n % p != 0) : (p_part(n, p) == n);
    if (good)
      for (const Perm& x : ncl.generators()) gens.push_back(x);
  }
  return PermGroup::from_generators(g.degree(), std::move(gens));
}

}  // namespace

PermGroup o_pprime(const PermGroup& g, const ConjClassData& classes, u64 p) {
  return o_pi(g, classes, p, true);
}

PermGroup o_p(const PermGroup& g, const ConjClassData& classes, u64 p) {
  return o_pi(g, classes, p, false);
}

PermGroup sylow_subgroup(const PermGroup& g, u64 p, u64 bound) {
  u64 target = p_part(g.order(), p);
  PermGroup sub = PermGroup::trivial(g.degree());
  while (sub.order() < target) {
    PermGroup n = normalizer(g, sub, bound);
    bool grew = false;
    for (const Perm& x : n.elements(bound)) {
      u64 o = x.order();
      u64 pp = p_part(o, p);
      if (pp == 1) continue;
      Perm y = x.power((i64)(o / pp));
      if (!sub.contains(y)) {
        sub = sub.extended(y);
        grew = true;
        break;
      }
    }
    check(grew, ErrKind::Internal, "sylow ascent stalled");
  }
  return sub;
}

bool is_solvable(const PermGroup& g) {
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    PermGroup next = derived_subgroup(cur);
    if (next.order_big() == cur.order_big()) return false;
    cur = next;
  }
  return true;
}

bool is_p_solvable(const PermGroup& g, u64 p, u64 bound) {
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    ConjClassData classes = conjugacy_classes(cur, bound);
    PermGroup op = o_pprime(cur, classes, p);
    if (op.is_trivial()) op = o_p(cur, classes, p);
    if (op.is_trivial()) return false;
    cur = quotient_group(cur, op, bound).image;
  }
  return true;
}

u64 abelianization_exponent(const PermGroup& g, u64 bound) {
  PermGroup d = derived_subgroup(g);
  if (d.is_trivial()) return g.exponent(bound);
  return quotient_group(g, d, bound).image.exponent(bound);
}

int QuotientMap::coset_of(const Perm& g) const {
  auto it = coset_id.find(g);
  check(it != coset_id.end(), ErrKind::Domain, "element not in quotient source");
  return it->second;
}

Perm QuotientMap::forward(const Perm& g) const {
  std::vector<int> im(section_reps.size());
  for (std::size_t c = 0; c < section_reps.size(); ++c)
    im[c] = coset_of(section_reps[c] * g);
  return Perm(std::move(im));
}

Perm QuotientMap::section(const Perm& image_elt) const {
  return section_reps[image_elt[0]];
}

QuotientMap quotient_group(const PermGroup& g, const PermGroup& n, u64 bound) {
  check(n.is_normal_in(g), ErrKind::Domain, "quotient by a non-normal subgroup");
  QuotientMap q;
  q.source = g;
  q.kernel = n;
  std::vector<Perm> elems = g.elements(bound);
  std::vector<Perm> n_elems = n.elements(bound);
  q.coset_id.reserve(elems.size() * 2);
  for (const Perm& e : elems) {
    if (q.coset_id.count(e)) continue;
    int c = (int)q.section_reps.size();
    q.section_reps.push_back(e);
    for (const Perm& x : n_elems) q.coset_id.emplace(x * e, c);
  }
  std::vector<Perm> image_gens;
  for (const Perm& s : g.generators()) image_gens.push_back(q.forward(s));
  q.image = PermGroup::from_generators((int)q.section_reps.size(), std::move(image_gens));
  check(q.image.order_big() * n.order_big() == g.order_big(), ErrKind::Internal,
        "quotient order mismatch");
  return q;
}

PermGroup join_subgroups(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> gens = a.generators();
  for (const Perm& x : b.generators()) gens.push_back(x);
  return PermGroup::from_generators(a.degree(), std::move(gens));
}

std::optional<std::vector<PermGroup>> normal_subgroups(const PermGroup& g,
                                                       const ConjClassData& classes,
                                                       std::size_t cap) {
  std::vector<PermGroup> found{PermGroup::trivial(g.degree())};
  auto known = [&](const PermGroup& h) {
    for (const PermGroup& k : found)
      if (k.same_subgroup(h)) return true;
    return false;
  };
  for (int c = 0; c < classes.num_classes(); ++c) {
    if (classes.reps[c].is_identity()) continue;
    PermGroup ncl = normal_closure(g, {classes.reps[c]});
    if (!known(ncl)) found.push_back(std::move(ncl));
    if (found.size() > cap) return std::nullopt;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t m = found.size();
    for (std::size_t i = 0; i < m && !grew; ++i)
      for (std::size_t j = i + 1; j < m && !grew; ++j) {
        PermGroup join = join_subgroups(found[i], found[j]);
        if (!known(join)) {
          found.push_back(std::move(join));
          if (found.size() > cap) return std::nullopt;
          grew = true;
        }
      }
  }
  std::sort(found.begin(), found.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order_big() != b.order_big()) return a.order_big() < b.order_big();
    return a.elements() < b.elements();
  });
  return found;
}

PermGroup cyclic_group(int n) {
  check(n >= 1, ErrKind::Input, "cyclic: order must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return PermGroup::from_generators(n, {Perm(std::move(im))});
}

PermGroup dihedral_group(int order) {
  check(order >= 2 && order % 2 == 0, ErrKind::Input, "dihedral: order must be even and >= 2");
  int n = order / 2;
  if (n == 1) return cyclic_group(2);
  if (n == 2) return direct_product(cyclic_group(2), cyclic_group(2));
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup::from_generators(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

PermGroup symmetric_group(int n) {
  check(n >= 1, ErrKind::Input, "symmetric: n must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> cyc(n), swap01(n);
  for (int i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    swap01[i] = i;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return PermGroup::from_generators(n, {Perm(std::move(swap01)), Perm(std::move(cyc))});
}

PermGroup alternating_group(int n) {
  check(n >= 1, ErrKind::Input, "alternating: n must be positive");
  if (n <= 2) return PermGroup::trivial(std::max(n, 1));
  std::vector<int> three(n), big(n);
  for (int i = 0; i < n; ++i) {
    three[i] = i;
    big[i] = i;
  }
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;
  } else {
    for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;
  }
  return PermGroup::from_generators(n, {Perm(std::move(three)), Perm(std::move(big))});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  int da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const Perm& p : a.generators()) {
    std::vector<int> im(da + db);
    for (int i = 0; i < da; ++i) im[i] = p[i];
    for (int i = 0; i < db; ++i) im[da + i] = da + i;
    gens.push_back(Perm(std::move(im)));
  }
  for (const Perm& p : b.generators()) {
    std::vector<int> im(da + db);
    for (int i = 0; i < da; ++i) im[i] = i;
    for (int i = 0; i < db; ++i) im[da + i] = da + p[i];
    gens.push_back(Perm(std::move(im)));
  }
  return PermGroup::from_generators(da + db, std::move(gens));
}

PermGroup semidirect_elementary(u64 p, int k, const PermGroup& acting,
                                const std::vector<std::vector<int>>& matrices) {
  check(is_prime_u64(p), ErrKind::Input, "semidirect: p must be prime");
  check(k >= 1, ErrKind::Input, "semidirect: k must be >= 1");
  check(matrices.size() == acting.generators().size(), ErrKind::Input,
        "semidirect: one matrix per acting generator required");
  u64 vp = 1;
  for (int i = 0; i < k; ++i) {
    vp *= p;
    check(vp <= kDefaultEnumerationBound, ErrKind::Capacity, "semidirect: p^k too large");
  }
  int nv = (int)vp;
  int deg = nv + acting.degree();

  auto decode = [&](int x) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) { v[i] = x % (int)p; x /= (int)p; }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * (int)p + v[i];
    return x;
  };

  // Invertibility check mod p via Gaussian elimination.
  for (const auto& m : matrices) {
    check((int)m.size() == k * k, ErrKind::Input, "semidirect: matrix must be k x k");
    std::vector<std::vector<i64>> a(k, std::vector<i64>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[i][j] = ((m[i * k + j] % (i64)p) + (i64)p) % (i64)p;
    int rank = 0;
    for (int col = 0; col < k; ++col) {
      int piv = -1;
      for (int r = rank; r < k; ++r)
        if (a[r][col] != 0) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(a[piv], a[rank]);
      i64 inv = (i64)mod_inverse((u64)a[rank][col], p);
      for (int j = 0; j < k; ++j) a[rank][j] = a[rank][j] * inv % (i64)p;
      for (int r = 0; r < k; ++r) {
        if (r == rank || a[r][col] == 0) continue;
        i64 f = a[r][col];
        for (int j = 0; j < k; ++j)
          a[r][j] = ((a[r][j] - f * a[rank][j]) % (i64)p + (i64)p) % (i64)p;
      }
      ++rank;
    }
    check(rank == k, ErrKind::Input, "semidirect: matrix not invertible mod p");
  }

  std::vector<Perm> gens;
  for (int basis = 0; basis < k; ++basis) {
    std::vector<int> im(deg);
    for (int x = 0; x < nv; ++x) {
      std::vector<int> v = decode(x);
      v[basis] = (v[basis] + 1) % (int)p;
      im[x] = encode(v);
    }
    for (int i = 0; i < acting.degree(); ++i) im[nv + i] = nv + i;
    gens.push_back(Perm(std::move(im)));
  }
  for (std::size_t gi = 0; gi < matrices.size(); ++gi) {
    const auto& m = matrices[gi];
    const Perm& act = acting.generators()[gi];
    std::vector<int> im(deg);
    for (int x = 0; x < nv; ++x) {
      std::vector<int> v = decode(x);
      std::vector<int> w(k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) w[i] = (w[i] + m[i * k + j] * v[j]) % (int)p;
      for (int i = 0; i < k; ++i) w[i] = ((w[i] % (int)p) + (int)p) % (int)p;
      im[x] = encode(w);
    }
    for (int i = 0; i < acting.degree(); ++i) im[nv + i] = nv + act[i];
    gens.push_back(Perm(std::move(im)));
  }
  PermGroup g = PermGroup::from_generators(deg, std::move(gens));
  check(g.order_big() == acting.order_big() * (long)vp, ErrKind::Input,
        "semidirect: matrices do not respect the acting group's relations");
  return g;
}

PermGroup cayley_table_group(const std::vector<std::vector<int>>& table) {
  int n = (int)table.size();
  check(n >= 1, ErrKind::Input, "cayley: empty table");
  check(n <= 300, ErrKind::Capacity, "cayley: table too large");
  for (const auto& row : table)
    check((int)row.size() == n, ErrKind::Input, "cayley: table must be square");
  for (const auto& row : table)
    for (int v : row)
      check(v >= 1 && v <= n, ErrKind::Input, "cayley: entries must be in 1..n");
  // Identity element.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (table[i][j] != j + 1 || table[j][i] != j + 1) { ok = false; break; }
    if (ok) e = i;
  }
  check(e >= 0, ErrKind::Input, "cayley: no identity element");
  // Associativity.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        check(table[table[a][b] - 1][c] == table[a][table[b][c] - 1], ErrKind::Input,
              "cayley: table is not associative");
  std::vector<Perm> gens;
  for (int gcol = 0; gcol < n; ++gcol) {
    std::vector<int> im(n);
    for (int x = 0; x < n; ++x) im[x] = table[x][gcol] - 1;
    gens.push_back(Perm(std::move(im)));  // validates bijection per column
  }
  PermGroup g = PermGroup::from_generators(n, std::move(gens));
  check(g.order_big() == (long)n, ErrKind::Input, "cayley: table rows do not close");
  return g;
}

}  // namespace charlab
