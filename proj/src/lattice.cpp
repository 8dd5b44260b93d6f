#include "sringkit/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sringkit/errors.hpp"

namespace sringkit {

AutTable AutTable::build(const FinAbGroup& g, const Caps& caps) {
  Caps c = caps;
  c.aut_elements = std::min(caps.aut_elements, caps.aut_lattice);
  AutTable t;
  t.group_ = g;
  try {
    t.auts_ = aut_elements(g, c);
  } catch (const CapExceeded& e) {
    throw CapExceeded("aut_lattice", "aut(" + g.name() + ") is larger than " +
                                         std::to_string(caps.aut_lattice) + " (" + e.what() + ")");
  }
  const std::size_t m = t.auts_.size();
  t.table_.resize(m * m);
  t.inv_.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (t.auts_[i].is_identity()) t.id_ = i;
    for (std::uint32_t j = 0; j < m; ++j) t.table_[i * m + j] = t.index_of(t.auts_[i].then(t.auts_[j]));
  }
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j)
      if (t.table_[i * m + j] == t.id_) t.inv_[i] = j;
  return t;
}

std::uint32_t AutTable::index_of(const GroupAut& a) const {
  auto it = std::lower_bound(auts_.begin(), auts_.end(), a);
  if (it == auts_.end() || !(*it == a)) throw Error("automorphism not in table");
  return static_cast<std::uint32_t>(it - auts_.begin());
}

std::vector<std::uint32_t> table_closure(const AutTable& t, const std::vector<std::uint32_t>& gens) {
  std::vector<char> in(t.size(), 0);
  std::vector<std::uint32_t> els{t.identity()};
  in[t.identity()] = 1;
  for (std::size_t i = 0; i < els.size(); ++i)
    for (auto s : gens) {
      const auto y = t.mul(els[i], s);
      if (!in[y]) {
        in[y] = 1;
        els.push_back(y);
      }
    }
  std::sort(els.begin(), els.end());
  return els;
}

std::vector<AutSubgroup> aut_subgroup_classes(const AutTable& t) {
  // Every subgroup is <H, g> for a proper subgroup H and some g, and every
  // conjugate of H gives a conjugate join, so extending class representatives
  // reaches every class.
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<AutSubgroup> reps;
  auto add = [&](std::vector<std::uint32_t> els, std::vector<std::uint32_t> gens) {
    if (seen.count(els)) return;
    std::size_t conj = 0;
    for (std::uint32_t k = 0; k < t.size(); ++k) {
      std::vector<std::uint32_t> c;
      c.reserve(els.size());
      for (auto h : els) c.push_back(t.mul(t.mul(t.inv(k), h), k));
      std::sort(c.begin(), c.end());
      if (seen.insert(std::move(c)).second) ++conj;
    }
    reps.push_back({std::move(els), std::move(gens), conj});
  };
  // It is enough to join H with x such that x^q lies in H for a prime q:
  // if H is maximal in <H, y>, a suitable power of y has that property.
  // Elements h x^j (h in H, j coprime to |x|) give the same join as x.
  const std::size_t m = t.size();
  std::vector<std::uint32_t> order(m, 1);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = x; y != t.identity(); y = t.mul(y, x)) ++order[x];
  auto power = [&](std::uint32_t x, std::uint32_t k) {
    std::uint32_t y = t.identity();
    for (std::uint32_t i = 0; i < k; ++i) y = t.mul(y, x);
    return y;
  };
  add({t.identity()}, {});
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::vector<std::uint32_t> h = reps[i].elements;
    std::vector<char> in(m, 0), done(m, 0);
    for (auto e : h) in[e] = 1;
    for (std::uint32_t x = 0; x < m; ++x) {
      if (in[x] || done[x]) continue;
      bool prime_step = false;
      for (auto q : prime_divisors(order[x]))
        if (in[power(x, static_cast<std::uint32_t>(q))]) prime_step = true;
      if (!prime_step) continue;
      for (std::uint32_t j = 1; j < order[x]; ++j) {
        if (std::gcd(j, order[x]) != 1) continue;
        const std::uint32_t xj = power(x, j);
        for (auto e : h) done[t.mul(e, xj)] = 1;
      }
      auto gens = reps[i].generators;
      gens.push_back(x);
      auto els = table_closure(t, gens);
      add(std::move(els), std::move(gens));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const AutSubgroup& a, const AutSubgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return reps;
}

}  // namespace sringkit
