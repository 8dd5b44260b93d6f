#include "sringkit/construct.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_set>

#include "sringkit/errors.hpp"
#include "sringkit/kernels.hpp"

namespace sringkit {

SRing cyclotomic(const FinAbGroup& g, const std::vector<GroupAut>& gens) {
  std::vector<Perm> perms;
  for (const auto& a : gens) {
    if (!(a.owner() == g)) throw Error("automorphism of " + a.owner().name() + " used over " + g.name());
    perms.push_back(aut_perm(a));
  }
  return make_sring(g, orbits(g.order(), perms), "cyclotomic ring");
}

SRing orbit_ring(const FinAbGroup& g, const std::vector<Perm>& stabilizer_gens) {
  for (const auto& p : stabilizer_gens)
    if (p.degree() != g.order() || p[0] != 0) throw Error("generator does not fix e");
  return make_sring(g, orbits(g.order(), stabilizer_gens), "orbit ring of a point stabilizer");
}

SRing transitivity_module(const FinAbGroup& g, const PermGroup& k, const Caps& caps) {
  if (k.degree() != g.order()) throw Error("permutation degree differs from |G|");
  const PermGroup ke = k.enumerated(caps);
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (!ke.contains(translation(g, g.generator(i)))) throw Error("K does not contain G_r");
  const PermGroup stab = point_stabilizer(ke, 0, caps);
  return make_sring(g, orbits(stab), "transitivity module");
}

FinAbGroup direct_product(const FinAbGroup& g1, const FinAbGroup& g2) {
  if (g1.order() == 1) return g2;
  if (g2.order() == 1) return g1;
  std::vector<std::uint32_t> f = g1.factors();
  f.insert(f.end(), g2.factors().begin(), g2.factors().end());
  Caps caps;
  caps.group_order = std::numeric_limits<std::uint64_t>::max();
  return FinAbGroup::make(std::move(f), caps);
}

SRing tensor(const SRing& a1, const SRing& a2) {
  const FinAbGroup g = direct_product(a1.group(), a2.group());
  const Elem n2 = static_cast<Elem>(a2.group().order());
  std::vector<std::vector<Elem>> classes;
  for (const auto& x1 : a1.classes())
    for (const auto& x2 : a2.classes()) {
      std::vector<Elem> c;
      for (Elem u : x1)
        for (Elem v : x2) c.push_back(u * n2 + v);
      classes.push_back(std::move(c));
    }
  return make_sring(g, std::move(classes), "tensor product");
}

SRing gen_wreath(const Subgroup& u, const Subgroup& l, const SRing& a_u, const SRing& a_q) {
  const FinAbGroup& g = u.owner();
  const Subgroup whole = Subgroup::whole(g);
  const Quotient qu = section_quotient(u, Subgroup::trivial(g));
  const Quotient qg = section_quotient(whole, l);
  if (!(a_u.group() == qu.group)) throw Error("A_U is not over " + qu.group.name());
  if (!(a_q.group() == qg.group)) throw Error("A_Q is not over " + qg.group.name());

  std::vector<char> in_pu(qg.group.order(), 0);
  for (Elem x : u.members()) in_pu[qg.projection[x]] = 1;

  std::vector<std::vector<Elem>> classes;
  // Inside U: A_U classes, and their images in G/L must be A_Q classes.
  std::map<std::vector<Elem>, int> images;
  for (const auto& c : a_u.classes()) {
    std::vector<Elem> lifted, img;
    for (Elem y : c) {
      lifted.push_back(qu.lift[y]);
      img.push_back(qg.projection[qu.lift[y]]);
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    images[img] = 1;
    classes.push_back(std::move(lifted));
  }
  std::vector<std::vector<Elem>> q_inside;
  for (const auto& y : a_q.classes()) {
    const bool first_in = in_pu[y.front()];
    for (Elem e : y)
      if (static_cast<bool>(in_pu[e]) != first_in)
        throw Error("U/L is not an A_Q-subgroup of G/L");
    if (first_in) {
      q_inside.push_back(y);
      continue;
    }
    std::vector<Elem> pre;
    std::vector<char> in_y(qg.group.order(), 0);
    for (Elem e : y) in_y[e] = 1;
    for (Elem x = 0; x < g.order(); ++x)
      if (in_y[qg.projection[x]]) pre.push_back(x);
    classes.push_back(std::move(pre));
  }
  std::vector<std::vector<Elem>> img_list;
  for (const auto& [img, _] : images) img_list.push_back(img);
  std::sort(q_inside.begin(), q_inside.end());
  if (img_list != q_inside)
    throw Error("quotient of A_U by L differs from the restriction of A_Q to U/L");

  auto r = verify_sring(g, std::move(classes));
  if (!r.ok()) throw Error("generalized wreath product fails axiom " + std::to_string(r.violation->axiom) + ": " + r.violation->detail);
  return std::move(*r.ring);
}

std::vector<GwreathWitness> detect_gwreath(const SRing& a) {
  const FinAbGroup& g = a.group();
  const auto subs = a_subgroups(a);
  std::vector<Subgroup> rads;
  for (const auto& c : a.classes()) rads.push_back(rad(g, c));
  std::vector<GwreathWitness> out;
  for (const auto& uu : subs) {
    // Intersection of rad(X) over classes outside U.
    Bitset common(g.order());
    common.fill();
    for (ClassId c = 0; c < a.rank(); ++c)
      if (!uu.contains(a.cls(c).front())) common &= rads[c].mask();
    for (const auto& ll : subs) {
      if (!ll.is_subgroup_of(uu) || !ll.mask().subset_of(common)) continue;
      out.push_back({uu, ll, ll.size() > 1 && uu.size() < g.order()});
    }
  }
  std::sort(out.begin(), out.end(), [](const GwreathWitness& x, const GwreathWitness& y) {
    if (x.u.size() != y.u.size()) return x.u.size() < y.u.size();
    if (x.l.size() != y.l.size()) return x.l.size() < y.l.size();
    if (x.u.members() != y.u.members()) return x.u.members() < y.u.members();
    return x.l.members() < y.l.members();
  });
  return out;
}

SylowResult sylow_decompose(const SRing& a) {
  const FinAbGroup& g = a.group();
  const std::uint64_t n = g.order();
  SylowResult res;
  const auto primes = prime_divisors(n);
  std::vector<std::int64_t> proj_power;
  for (auto p : primes) {
    const Subgroup gp = sylow_subgroup(g, p);
    if (!is_A_subgroup(a, gp)) {
      res.failure = "Sylow " + std::to_string(p) + "-subgroup is not an A-subgroup";
      return res;
    }
    SectionRing rp = restrict_to(a, gp);
    if (!is_p_sring(rp.ring, p)) {
      res.failure = "restriction to the Sylow " + std::to_string(p) + "-subgroup is not a p-S-ring";
      return res;
    }
    // x -> x^m with m = 1 mod |G_p| and m = 0 mod n/|G_p| projects onto G_p.
    const std::int64_t q = static_cast<std::int64_t>(gp.size());
    const std::int64_t r = static_cast<std::int64_t>(n) / q;
    std::int64_t m = 0;
    for (std::int64_t t = 0; t < q; ++t)
      if ((t * r) % q == 1 % q) {
        m = t * r;
        break;
      }
    proj_power.push_back(m);
    res.factors.push_back({p, std::move(rp)});
  }
  for (ClassId c = 0; c < a.rank(); ++c) {
    const auto& x = a.cls(c);
    std::size_t product = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      std::vector<Elem> proj;
      for (Elem e : x) proj.push_back(g.pow(e, proj_power[i]));
      std::sort(proj.begin(), proj.end());
      proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
      if (!is_A_set(a, proj) || a.cls(a.class_of(proj.front())).size() != proj.size()) {
        res.failure = "projection of class " + std::to_string(c) + " to the Sylow " +
                      std::to_string(primes[i]) + "-subgroup is not a basic set";
        res.factors.clear();
        return res;
      }
      product *= proj.size();
    }
    if (product != x.size()) {
      res.failure = "class " + std::to_string(c) + " is not the product of its Sylow projections";
      res.factors.clear();
      return res;
    }
  }
  res.ok = true;
  return res;
}

namespace {

std::vector<ClassId> join_partition(const std::vector<ClassId>& cmap, const GroupAut& phi) {
  const std::size_t n = cmap.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  std::vector<std::uint32_t> first(n, static_cast<std::uint32_t>(-1));
  for (std::uint32_t x = 0; x < n; ++x) {
    if (first[cmap[x]] == static_cast<std::uint32_t>(-1)) first[cmap[x]] = x;
    else unite(first[cmap[x]], x);
  }
  for (std::uint32_t x = 0; x < n; ++x) unite(x, phi(x));
  std::vector<ClassId> out(n);
  for (std::uint32_t x = 0; x < n; ++x) out[x] = find(x);
  kernels::canonical_classes(out);
  return out;
}

struct MapHash {
  std::size_t operator()(const std::vector<ClassId>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

std::vector<CyclotomicClass> cyclotomic_ring_classes(const FinAbGroup& g, const Caps& caps) {
  const auto auts = aut_elements(g, caps);
  const std::size_t n = g.order();
  std::vector<const GroupAut*> steps;
  for (const auto& a : auts) {
    const auto o = a.order();
    if (o > 1 && prime_divisors(o).size() == 1) steps.push_back(&a);
  }
  std::unordered_set<std::vector<ClassId>, MapHash> seen;
  std::vector<std::vector<ClassId>> reps;
  std::vector<std::vector<GroupAut>> gens;
  auto add = [&](std::vector<ClassId> cmap, std::vector<GroupAut> gs) {
    if (seen.count(cmap)) return;
    for (const auto& psi : auts) {
      std::vector<ClassId> c(n);
      for (Elem x = 0; x < n; ++x) c[psi(x)] = cmap[x];
      kernels::canonical_classes(c);
      seen.insert(std::move(c));
    }
    reps.push_back(std::move(cmap));
    gens.push_back(std::move(gs));
  };
  std::vector<ClassId> discrete(n);
  std::iota(discrete.begin(), discrete.end(), 0);
  add(discrete, {});
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto* phi : steps) {
      const auto& cmap = reps[i];
      bool inside = true;
      for (Elem x = 0; x < n && inside; ++x) inside = cmap[(*phi)(x)] == cmap[x];
      if (inside) continue;
      auto joined = join_partition(cmap, *phi);
      if (seen.count(joined)) continue;
      auto gs = gens[i];
      gs.push_back(*phi);
      add(std::move(joined), std::move(gs));
    }
  }
  std::vector<CyclotomicClass> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    SRing a = cyclotomic(g, gens[i]);
    if (a.class_map() != reps[i]) throw InvariantFailure("ring lattice walk produced a non-orbit partition");
    out.push_back({std::move(a), std::move(gens[i])});
  }
  std::sort(out.begin(), out.end(), [](const CyclotomicClass& x, const CyclotomicClass& y) {
    if (x.ring.rank() != y.ring.rank()) return x.ring.rank() > y.ring.rank();
    return x.ring.class_map() < y.ring.class_map();
  });
  return out;
}

}  // namespace sringkit
