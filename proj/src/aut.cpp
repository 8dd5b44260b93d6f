#include "sringkit/aut.hpp"

#include <algorithm>
#include <functional>

#include "sringkit/construct.hpp"
#include "sringkit/errors.hpp"

namespace sringkit {

namespace {

// Color table and per-(vertex, color) neighbourhoods of the Cayley color
// graph. Vertex count is capped, so the n x n table is small.
struct ColorGraph {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::vector<ClassId> color;        // n * n
  std::vector<Bitset> nbr;           // n * rank: {v : color(w, v) = c}
  std::vector<std::size_t> class_size;
  std::vector<ClassId> class_of;

  explicit ColorGraph(const SRing& a) : n(a.group().order()), rank(a.rank()) {
    const FinAbGroup& g = a.group();
    color.resize(n * n);
    nbr.assign(n * rank, Bitset(n));
    for (Elem x = 0; x < n; ++x) {
      const Elem xi = g.inv(x);
      for (Elem y = 0; y < n; ++y) {
        const ClassId c = a.class_of(g.mul(y, xi));
        color[x * n + y] = c;
        nbr[x * rank + c].set(y);
      }
    }
    for (const auto& c : a.classes()) class_size.push_back(c.size());
    class_of = a.class_map();
  }
  ClassId col(Elem x, Elem y) const { return color[x * n + y]; }
};

struct State {
  std::vector<Bitset> dom;
  std::vector<Elem> img;
  std::size_t assigned = 0;
};

class Search {
 public:
  Search(const ColorGraph& cg, std::uint64_t budget) : cg_(cg), budget_(budget) {}

  std::uint64_t nodes() const { return nodes_; }

  State root() const {
    State s;
    Bitset all(cg_.n);
    all.fill();
    s.dom.assign(cg_.n, all);
    s.img.assign(cg_.n, kNoElem);
    return s;
  }

  // x -> y with forward checking and singleton propagation.
  bool assign(State& s, Elem x, Elem y) {
    if (++nodes_ > budget_)
      throw CapExceeded("search_nodes", "automorphism search used more than " +
                                            std::to_string(budget_) + " nodes");
    std::vector<std::pair<Elem, Elem>> queue{{x, y}};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto [u0, v0] = queue[qi];
      if (s.img[u0] != kNoElem) {
        if (s.img[u0] != v0) return false;
        continue;
      }
      if (!s.dom[u0].test(v0)) return false;
      s.img[u0] = v0;
      ++s.assigned;
      for (Elem u = 0; u < cg_.n; ++u) {
        if (s.img[u] != kNoElem) continue;
        Bitset& d = s.dom[u];
        d &= cg_.nbr[v0 * cg_.rank + cg_.col(u0, u)];
        d.reset(v0);
        const std::size_t c = d.count();
        if (c == 0) return false;
        if (c == 1) queue.emplace_back(u, static_cast<Elem>(d.first()));
      }
    }
    return true;
  }

  // Undecided vertex with the smallest domain; ties by (class size, class id).
  Elem branch_vertex(const State& s) const {
    Elem best = kNoElem;
    std::size_t best_cnt = 0;
    for (Elem u = 0; u < cg_.n; ++u) {
      if (s.img[u] != kNoElem) continue;
      const std::size_t c = s.dom[u].count();
      if (best == kNoElem || c < best_cnt ||
          (c == best_cnt && std::make_pair(cg_.class_size[cg_.class_of[u]], cg_.class_of[u]) <
                                std::make_pair(cg_.class_size[cg_.class_of[best]], cg_.class_of[best]))) {
        best = u;
        best_cnt = c;
      }
    }
    return best;
  }

  // Any color automorphism extending s.
  std::optional<Perm> complete(const State& s) {
    const Elem u = branch_vertex(s);
    if (u == kNoElem) {
      Perm p(s.img);
      for (Elem x = 0; x < cg_.n; ++x)
        for (Elem y = 0; y < cg_.n; ++y)
          if (cg_.col(x, y) != cg_.col(p[x], p[y]))
            throw InvariantFailure("automorphism search produced a map that breaks a color");
      return p;
    }
    for (std::size_t v = s.dom[u].first(); v < cg_.n; v = s.dom[u].next(v + 1)) {
      State child = s;
      if (!assign(child, u, static_cast<Elem>(v))) continue;
      if (auto p = complete(child)) return p;
    }
    return std::nullopt;
  }

 private:
  const ColorGraph& cg_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

Bitset orbit_mask(std::size_t n, Elem x, const std::vector<Perm>& gens) {
  Bitset seen(n);
  std::vector<Elem> stack{x};
  seen.set(x);
  while (!stack.empty()) {
    const Elem y = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      const Elem z = g[y];
      if (!seen.test(z)) {
        seen.set(z);
        stack.push_back(z);
      }
    }
  }
  return seen;
}

// Returns false if on_gen asked to stop.
bool run_stabilizer(const SRing& a, const Caps& caps, StabilizerResult& out,
                    const std::function<bool(const Perm&)>& on_gen) {
  const std::size_t n = a.group().order();
  if (n > caps.aut_search_order)
    throw CapExceeded("aut_search_order", a.group().name() + " has " + std::to_string(n) +
                                              " vertices, cap " + std::to_string(caps.aut_search_order));
  const ColorGraph cg(a);
  Search search(cg, caps.search_nodes);

  // Identity path: fix e, then repeatedly individualize a base point.
  std::vector<State> path;
  State s = search.root();
  if (!search.assign(s, 0, 0)) throw InvariantFailure("identity map rejected by the search");
  std::vector<Elem> base;
  while (true) {
    const Elem b = search.branch_vertex(s);
    if (b == kNoElem) break;
    path.push_back(s);
    base.push_back(b);
    if (!search.assign(s, b, b)) throw InvariantFailure("identity map rejected by the search");
  }

  std::vector<Perm> gens;
  std::vector<std::uint64_t> orbit_sizes(base.size(), 1);
  bool stopped = false;
  for (std::size_t lvl = base.size(); lvl-- > 0 && !stopped;) {
    const Elem b = base[lvl];
    const Bitset& cand = path[lvl].dom[b];
    Bitset orbit = orbit_mask(n, b, gens);
    Bitset failed(n);
    for (std::size_t y = cand.first(); y < n; y = cand.next(y + 1)) {
      if (orbit.test(y) || failed.test(y)) continue;
      State child = path[lvl];
      std::optional<Perm> p;
      if (search.assign(child, b, static_cast<Elem>(y))) p = search.complete(child);
      if (p) {
        gens.push_back(*p);
        if (!on_gen(*p)) {
          stopped = true;
          break;
        }
        orbit = orbit_mask(n, b, gens);
      } else {
        failed |= orbit_mask(n, static_cast<Elem>(y), gens);
      }
    }
    orbit_sizes[lvl] = orbit.count();
  }

  BigOrder order = 1;
  for (auto o : orbit_sizes) order *= o;
  out.group = PermGroup::from_generators(n, std::move(gens), order);
  out.base = std::move(base);
  out.orbit_sizes = std::move(orbit_sizes);
  out.nodes = search.nodes();
  return !stopped;
}

}  // namespace

StabilizerResult aut_stabilizer(const SRing& a, const Caps& caps) {
  StabilizerResult r;
  run_stabilizer(a, caps, r, [](const Perm&) { return true; });
  return r;
}

PermGroup aut_group(const SRing& a, const StabilizerResult& stab) {
  const FinAbGroup& g = a.group();
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(translation(g, g.generator(i)));
  for (const auto& p : stab.group.generators()) gens.push_back(p);
  return PermGroup::from_generators(g.order(), std::move(gens), stab.group.order() * g.order());
}

PermGroup aut_group(const SRing& a, const Caps& caps) { return aut_group(a, aut_stabilizer(a, caps)); }

bool is_schurian(const SRing& a, const Caps& caps) {
  const auto stab = aut_stabilizer(a, caps);
  return orbit_ring(a.group(), stab.group.generators()) == a;
}

PermGroup two_closure(const FinAbGroup& g, const PermGroup& k, const Caps& caps) {
  return aut_group(transitivity_module(g, k, caps), caps);
}

std::optional<GroupAut> as_group_aut(const FinAbGroup& g, const Perm& p) {
  if (p.degree() != g.order() || p[0] != 0) return std::nullopt;
  std::vector<Elem> images;
  for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(p[g.generator(i)]);
  try {
    GroupAut a = GroupAut::from_images(g, std::move(images));
    if (a.table() == p.images()) return a;
  } catch (const Error&) {
  }
  return std::nullopt;
}

bool is_normal(const StabilizerResult& stab, const FinAbGroup& g) {
  for (const auto& p : stab.group.generators())
    if (!as_group_aut(g, p)) return false;
  return true;
}

bool is_normal(const SRing& a, const Caps& caps) {
  StabilizerResult r;
  const FinAbGroup& g = a.group();
  return run_stabilizer(a, caps, r, [&](const Perm& p) { return as_group_aut(g, p).has_value(); });
}

bool preserves_colors(const SRing& a, const Perm& p) {
  const FinAbGroup& g = a.group();
  if (p.degree() != g.order()) return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (a.class_of(g.div(y, x)) != a.class_of(g.div(p[y], p[x]))) return false;
  return true;
}

}  // namespace sringkit
