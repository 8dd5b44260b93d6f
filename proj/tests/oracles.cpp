#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

Partition canonical(Partition p) {
  for (auto& c : p) std::sort(c.begin(), c.end());
  std::sort(p.begin(), p.end());
  return p;
}

bool is_sring(const FinAbGroup& g, const Partition& p) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cls(n, n);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (Elem x : p[i]) cls[x] = i;
  if (cls[0] == n || p[cls[0]].size() != 1) return false;
  for (const auto& c : p) {
    const std::size_t ic = cls[g.inv(c.front())];
    if (p[ic].size() != c.size()) return false;
    for (Elem x : c)
      if (cls[g.inv(x)] != ic) return false;
  }
  for (const auto& x : p)
    for (const auto& y : p) {
      std::vector<std::size_t> count(n, 0);
      for (Elem a : x)
        for (Elem b : y) ++count[g.mul(a, b)];
      for (const auto& z : p)
        for (Elem c : z)
          if (count[c] != count[z.front()]) return false;
    }
  return true;
}

std::vector<Partition> partitions_with_e(const FinAbGroup& g) {
  const std::size_t n = g.order();
  std::vector<Partition> out;
  // Restricted growth strings over the non-identity elements.
  std::vector<std::size_t> label(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      Partition p(used + 1);
      p[0] = {0};
      for (std::size_t x = 1; x < n; ++x) p[label[x]].push_back(static_cast<Elem>(x));
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t c = 1; c <= used + 1; ++c) {
      label[i] = c;
      self(self, i + 1, std::max(used, c));
    }
  };
  if (n == 1) return {Partition{{0}}};
  rec(rec, 1, 0);
  return out;
}

std::vector<std::vector<Elem>> subgroups(const FinAbGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Elem>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<char> in(n, 0);
    in[0] = 1;
    std::vector<Elem> members{0};
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1 && !in[x]) in[x] = 1, members.push_back(static_cast<Elem>(x));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem z = g.mul(members[i], members[j]);
        if (!in[z]) in[z] = 1, members.push_back(z);
      }
    std::sort(members.begin(), members.end());
    found.insert(members);
  }
  return {found.begin(), found.end()};
}

namespace {

template <class F>
void for_each_bijection_fixing_e(std::size_t n, F&& f) {
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do f(perm);
  while (std::next_permutation(perm.begin() + 1, perm.end()));
}

std::vector<std::size_t> class_index(const FinAbGroup& g, const Partition& p) {
  std::vector<std::size_t> cls(g.order());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (Elem x : p[i]) cls[x] = i;
  return cls;
}

bool preserves(const FinAbGroup& g, const std::vector<std::size_t>& cls, const std::vector<Elem>& f) {
  const std::size_t n = g.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (cls[g.div(y, x)] != cls[g.div(f[y], f[x])]) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Elem>> automorphisms(const FinAbGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Elem>> out;
  for_each_bijection_fixing_e(n, [&](const std::vector<Elem>& f) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (f[g.mul(x, y)] != g.mul(f[x], f[y])) return;
    out.push_back(f);
  });
  return out;
}

std::vector<std::vector<Elem>> automorphisms_by_generators(const FinAbGroup& g) {
  const std::size_t n = g.order(), k = g.rank();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> img(k);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      std::vector<Elem> f(n);
      std::vector<char> hit(n, 0);
      for (Elem x = 0; x < n; ++x) {
        const auto d = g.digits(x);
        Elem y = 0;
        for (std::size_t j = 0; j < k; ++j) y = g.mul(y, g.pow(img[j], d[j]));
        if (hit[y]) return;
        hit[y] = 1;
        f[x] = y;
      }
      out.push_back(std::move(f));
      return;
    }
    for (Elem y = 0; y < n; ++y)
      if (g.pow(y, g.factors()[i]) == 0) {
        img[i] = y;
        self(self, i + 1);
      }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elem>> color_stabilizer(const FinAbGroup& g, const Partition& p) {
  const auto cls = class_index(g, p);
  std::vector<std::vector<Elem>> out;
  for_each_bijection_fixing_e(g.order(), [&](const std::vector<Elem>& f) {
    if (preserves(g, cls, f)) out.push_back(f);
  });
  return out;
}

bool image_is_cayley(const FinAbGroup& g, const Partition& p, const std::vector<Elem>& f) {
  const std::size_t n = g.order();
  for (const auto& c : p) {
    std::vector<char> diff(n, 0);
    std::size_t distinct = 0;
    for (Elem x = 0; x < n; ++x)
      for (Elem s : c) {
        const Elem d = g.div(f[g.mul(s, x)], f[x]);
        if (!diff[d]) diff[d] = 1, ++distinct;
      }
    if (distinct != c.size()) return false;
  }
  return true;
}

bool image_matched_by_group_aut(const FinAbGroup& g, const Partition& p, const std::vector<Elem>& f,
                                const std::vector<std::vector<Elem>>& auts) {
  std::vector<std::vector<Elem>> want;
  for (const auto& c : p) {
    std::vector<Elem> img;
    for (Elem x : c) img.push_back(f[x]);
    std::sort(img.begin(), img.end());
    want.push_back(std::move(img));
  }
  for (const auto& phi : auts) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) {
      std::vector<Elem> img;
      for (Elem x : p[i]) img.push_back(phi[x]);
      std::sort(img.begin(), img.end());
      ok = img == want[i];
    }
    if (ok) return true;
  }
  return false;
}

bool is_ci_by_definition(const FinAbGroup& g, const Partition& p) {
  const std::size_t n = g.order();
  const auto auts = automorphisms(g);
  const auto stab = color_stabilizer(g, p);
  std::set<std::vector<Elem>> product;
  for (const auto& a : stab)
    for (const auto& phi : auts) {
      std::vector<Elem> f(n);
      for (Elem x = 0; x < n; ++x) f[x] = phi[a[x]];
      product.insert(std::move(f));
    }
  bool ci = true;
  for_each_bijection_fixing_e(n, [&](const std::vector<Elem>& f) {
    if (ci && image_is_cayley(g, p, f) && !product.count(f)) ci = false;
  });
  return ci;
}

}  // namespace oracle
