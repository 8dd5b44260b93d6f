#include "sringkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "sringkit/errors.hpp"

namespace sringkit {

Perm::Perm(std::vector<Elem> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Elem y : images_) {
    if (y >= images_.size() || hit[y]) throw Error("image array is not a permutation");
    hit[y] = 1;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Elem> img(n);
  std::iota(img.begin(), img.end(), Elem{0});
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::operator*(const Perm& next) const {
  std::vector<Elem> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[x] = next.images_[images_[x]];
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::inverse() const {
  std::vector<Elem> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[images_[x]] = static_cast<Elem>(x);
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::pow(std::int64_t m) const {
  Perm base = m < 0 ? inverse() : *this;
  std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-m) : static_cast<std::uint64_t>(m);
  Perm acc = identity(degree());
  while (e) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

Perm Perm::conjugate_by(const Perm& k) const {
  // x -> k(this(k^-1(x)))
  std::vector<Elem> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[k.images_[x]] = k.images_[images_[x]];
  return Perm(std::move(img), Unchecked{});
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Perm::fixed_point_free() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == x) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (Elem y : p.images()) {
    h ^= y;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- PermGroup

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> gens,
                                   std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup k;
  k.degree_ = degree;
  k.gens_ = std::move(gens);
  k.order_ = elements.size();
  k.elements_ = std::move(elements);
  return k;
}

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Perm> gens, BigOrder order) {
  PermGroup k;
  k.degree_ = degree;
  k.gens_ = std::move(gens);
  k.order_ = std::move(order);
  if (k.order_ == 1) k.elements_ = {Perm::identity(degree)};
  return k;
}

std::uint64_t PermGroup::small_order() const {
  if (order_ > BigOrder(std::numeric_limits<std::uint64_t>::max()))
    throw CapExceeded("closure", "group order " + order_.str() + " does not fit 64 bits");
  return order_.convert_to<std::uint64_t>();
}

const std::vector<Perm>& PermGroup::elements() const {
  if (!is_enumerated()) throw Error("permutation group of order " + order_.str() + " is not enumerated");
  return elements_;
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  const auto& els = elements();
  auto it = std::lower_bound(els.begin(), els.end(), p);
  if (it == els.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - els.begin());
}

PermGroup PermGroup::enumerated(const Caps& caps) const {
  if (is_enumerated()) return *this;
  if (order_ > BigOrder(caps.closure))
    throw CapExceeded("closure", "group of order " + order_.str() + " exceeds " +
                                     std::to_string(caps.closure));
  PermGroup k = group_closure(degree_, gens_, caps);
  if (k.order() != order_)
    throw InvariantFailure("closure order " + k.order().str() + " differs from search order " +
                           order_.str());
  return k;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

// ---------------------------------------------------------------- builders

Perm translation(const FinAbGroup& g, Elem t) {
  g.check(t);
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < g.order(); ++x) img[x] = g.mul(x, t);
  return Perm(std::move(img));
}

Perm aut_perm(const GroupAut& a) { return Perm(a.table()); }

PermGroup right_regular(const FinAbGroup& g) {
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(translation(g, g.generator(i)));
  std::vector<Perm> els;
  els.reserve(g.order());
  for (Elem t = 0; t < g.order(); ++t) els.push_back(translation(g, t));
  return PermGroup::from_elements(g.order(), std::move(gens), std::move(els));
}

HolElement HolElement::then(const HolElement& next) const {
  // x -> (x^a1 t1)^a2 t2 = x^(a1 a2) (t1^a2 t2)
  const FinAbGroup& g = aut.owner();
  if (!(g == next.aut.owner())) throw Error("holomorph owner mismatch");
  return HolElement{g.mul(next.aut(translation), next.translation), aut.then(next.aut)};
}

Perm hol_to_perm(const HolElement& h) {
  const FinAbGroup& g = h.aut.owner();
  g.check(h.translation);
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < g.order(); ++x) img[x] = g.mul(h.aut(x), h.translation);
  return Perm(std::move(img));
}

std::optional<HolElement> perm_to_hol(const FinAbGroup& g, const Perm& p) {
  if (p.degree() != g.order()) return std::nullopt;
  const Elem t = p[0];
  std::vector<Elem> images(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) images[i] = g.div(p[g.generator(i)], t);
  try {
    HolElement h{t, GroupAut::from_images(g, std::move(images))};
    if (hol_to_perm(h) == p) return h;
  } catch (const Error&) {
  }
  return std::nullopt;
}

PermGroup holomorph(const FinAbGroup& g, const Caps& caps) {
  const auto auts = aut_elements(g, caps);
  if (static_cast<std::uint64_t>(auts.size()) * g.order() > caps.closure)
    throw CapExceeded("closure", "|Hol(" + g.name() + ")| = " +
                                     std::to_string(auts.size() * g.order()));
  std::vector<Perm> els;
  els.reserve(auts.size() * g.order());
  for (const auto& a : auts)
    for (Elem t = 0; t < g.order(); ++t) els.push_back(hol_to_perm(HolElement{t, a}));
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(translation(g, g.generator(i)));
  for (const auto& a : auts)
    if (!a.is_identity()) gens.push_back(aut_perm(a));
  return PermGroup::from_elements(g.order(), std::move(gens), std::move(els));
}

PermGroup group_closure(std::size_t degree, std::vector<Perm> gens, const Caps& caps) {
  for (const auto& p : gens)
    if (p.degree() != degree) throw Error("generator degree mismatch");
  const Perm id = Perm::identity(degree);
  std::vector<Perm> elements{id};
  std::unordered_set<Perm, PermHash> member{id};
  auto add = [&](Perm p) {
    if (elements.size() >= caps.closure)
      throw CapExceeded("closure", "group has more than " + std::to_string(caps.closure) +
                                       " elements (lower bound " + std::to_string(elements.size()) + ")");
    member.insert(p);
    elements.push_back(std::move(p));
  };

  // Dimino: extend the subgroup generated by gens[0..i) one generator at a
  // time, adding whole cosets of the previous subgroup.
  std::vector<Perm> used;
  for (const auto& s : gens) {
    if (member.count(s)) {
      used.push_back(s);
      continue;
    }
    used.push_back(s);
    const std::size_t prev_size = elements.size();
    std::vector<Perm> reps{id};
    auto add_coset = [&](const Perm& r) {
      for (std::size_t i = 0; i < prev_size; ++i) add(elements[i] * r);
    };
    add_coset(s);
    reps.push_back(s);
    for (std::size_t ri = 0; ri < reps.size(); ++ri) {
      for (const auto& u : used) {
        Perm c = reps[ri] * u;
        if (member.count(c)) continue;
        add_coset(c);
        reps.push_back(std::move(c));
      }
    }
  }
  return PermGroup::from_elements(degree, std::move(gens), std::move(elements));
}

namespace {

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Elem{0}); }
  Elem find(Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<Elem>> orbits(const PermGroup& k) {
  return orbits(k.degree(), k.generators());
}

std::vector<std::vector<Elem>> orbits(std::size_t degree, const std::vector<Perm>& gens) {
  UnionFind uf(degree);
  for (const auto& g : gens)
    for (Elem x = 0; x < degree; ++x) uf.unite(x, g[x]);
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> slot(degree, static_cast<std::size_t>(-1));
  for (Elem x = 0; x < degree; ++x) {
    const Elem r = uf.find(x);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

std::vector<Elem> orbit_of(const PermGroup& k, Elem x) {
  std::vector<char> seen(k.degree(), 0);
  std::vector<Elem> orb{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : k.generators()) {
      const Elem y = g[orb[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

PermGroup point_stabilizer(const PermGroup& k, Elem x, const Caps& caps) {
  const PermGroup e = k.enumerated(caps);
  std::vector<Perm> stab;
  for (const auto& p : e.elements())
    if (p[x] == x) stab.push_back(p);
  const auto orb = orbit_of(e, x);
  if (stab.size() * orb.size() != e.elements().size())
    throw InvariantFailure("orbit-stabilizer count mismatch");
  std::vector<Perm> gens;
  for (const auto& p : stab)
    if (!p.is_identity()) gens.push_back(p);
  return PermGroup::from_elements(k.degree(), std::move(gens), std::move(stab));
}

bool is_regular_iso(const PermGroup& r, const FinAbGroup& g) {
  if (r.degree() != g.order() || r.order() != g.order()) return false;
  if (orbit_of(r, 0).size() != g.order()) return false;
  if (!r.is_abelian()) return false;
  // Abelian groups of equal order are isomorphic iff their element-order
  // multisets agree.
  const auto& els = r.elements();
  std::vector<std::uint64_t> ro, go;
  for (const auto& p : els) ro.push_back(p.order());
  for (Elem x = 0; x < g.order(); ++x) go.push_back(g.elem_order(x));
  std::sort(ro.begin(), ro.end());
  std::sort(go.begin(), go.end());
  if (ro != go) return false;
  // Explicit witness: generators of the factor orders spanning R.
  const auto& f = g.factors();
  std::vector<Perm> chosen;
  auto search = [&](auto&& self, std::size_t depth, const PermGroup& span) -> bool {
    if (depth == f.size()) return true;
    for (const auto& p : els) {
      if (p.order() != f[depth] || span.contains(p)) continue;
      std::vector<Perm> gens = chosen;
      gens.push_back(p);
      PermGroup next = group_closure(r.degree(), gens);
      if (next.order() != span.order() * f[depth]) continue;
      chosen.push_back(p);
      if (self(self, depth + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0, group_closure(r.degree(), {}));
}

std::optional<Perm> are_conjugate_subgroups(const PermGroup& k, const PermGroup& a,
                                            const PermGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const auto& bset = b.elements();
  for (const auto& x : k.elements()) {
    bool ok = true;
    for (const auto& gen : a.generators())
      if (!std::binary_search(bset.begin(), bset.end(), gen.conjugate_by(x))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace sringkit
