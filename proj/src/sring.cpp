#include "sringkit/sring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sringkit/errors.hpp"
#include "sringkit/kernels.hpp"

namespace sringkit {

using kernels::Exec;

SRing::SRing(FinAbGroup g, std::vector<std::vector<Elem>> classes)
    : group_(std::move(g)), classes_(std::move(classes)), class_of_(group_.order()) {
  for (auto& c : classes_) std::sort(c.begin(), c.end());
  std::sort(classes_.begin(), classes_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (ClassId c = 0; c < classes_.size(); ++c)
    for (Elem x : classes_[c]) class_of_[x] = c;
}

struct SRingBuilder {
  static SRing make(const FinAbGroup& g, std::vector<std::vector<Elem>> classes) {
    return SRing(g, std::move(classes));
  }
};

SRing SRing::trivial(const FinAbGroup& g) {
  std::vector<std::vector<Elem>> classes{{0}};
  if (g.order() > 1) {
    classes.emplace_back(g.order() - 1);
    std::iota(classes.back().begin(), classes.back().end(), Elem{1});
  }
  return SRing(g, std::move(classes));
}

SRing SRing::group_ring(const FinAbGroup& g) {
  std::vector<std::vector<Elem>> classes(g.order());
  for (Elem x = 0; x < g.order(); ++x) classes[x] = {x};
  return SRing(g, std::move(classes));
}

ClassId SRing::inverse_class(ClassId c) const { return class_of_[group_.inv(classes_[c].front())]; }

VerifyResult verify_sring(const FinAbGroup& g, std::vector<std::vector<Elem>> partition) {
  std::vector<char> seen(g.order(), 0);
  std::size_t total = 0;
  for (const auto& c : partition) {
    if (c.empty()) throw Error("partition has an empty class");
    for (Elem x : c) {
      g.check(x);
      if (seen[x]) throw Error("element " + g.format(x) + " appears in two classes");
      seen[x] = 1;
      ++total;
    }
  }
  if (total != g.order()) throw Error("partition does not cover " + g.name());

  SRing cand = SRingBuilder::make(g, std::move(partition));
  VerifyResult res;
  if (cand.cls(0).size() != 1) {
    res.violation = Violation{1, "identity class is not {e}", {cand.cls(0)[1]}};
    return res;
  }
  for (ClassId c = 0; c < cand.rank(); ++c) {
    const ClassId ic = cand.inverse_class(c);
    const auto& x = cand.cls(c);
    const auto& y = cand.cls(ic);
    bool ok = x.size() == y.size();
    for (std::size_t i = 0; ok && i < x.size(); ++i) ok = cand.class_of(g.inv(x[i])) == ic;
    if (!ok) {
      Elem w = x.front();
      for (Elem e : x)
        if (cand.class_of(g.inv(e)) != ic) w = e;
      res.violation = Violation{2, "inverse of class " + std::to_string(c) + " is not a class", {x.front(), w}};
      return res;
    }
  }
  if (auto v = kernels::check_structure_constants(g, cand.class_map(), cand.classes(), Exec::parallel)) {
    res.violation = std::move(v);
    return res;
  }
  res.ring = std::move(cand);
  return res;
}

SRing make_sring(const FinAbGroup& g, std::vector<std::vector<Elem>> partition, const char* what) {
  auto r = verify_sring(g, std::move(partition));
  if (!r.ok())
    throw InvariantFailure(std::string(what) + " is not an S-ring: axiom " +
                           std::to_string(r.violation->axiom) + ": " + r.violation->detail);
  return std::move(*r.ring);
}

SRing wl_closure(const FinAbGroup& g, const std::vector<std::vector<Elem>>& seeds) {
  // Atoms of the Boolean algebra generated by {e} and the seeds.
  std::vector<std::vector<char>> in(seeds.size(), std::vector<char>(g.order(), 0));
  for (std::size_t s = 0; s < seeds.size(); ++s)
    for (Elem x : seeds[s]) {
      g.check(x);
      in[s][x] = 1;
    }
  std::map<std::vector<char>, ClassId> ids;
  std::vector<ClassId> class_of(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<char> key{static_cast<char>(x == 0)};
    for (const auto& row : in) key.push_back(row[x]);
    class_of[x] = ids.try_emplace(std::move(key), static_cast<ClassId>(ids.size())).first->second;
  }
  auto refined = kernels::refine_hashed(g, class_of, Exec::parallel);
  auto r = verify_sring(g, kernels::classes_from_map(refined));
  if (r.ok()) return std::move(*r.ring);
  // A signature collision left a class unsplit.
  refined = kernels::refine_exact(g, std::move(refined));
  return make_sring(g, kernels::classes_from_map(refined), "WL closure");
}

bool is_A_set(const SRing& a, const std::vector<Elem>& t) {
  std::vector<char> in(a.group().order(), 0);
  for (Elem x : t) {
    a.group().check(x);
    in[x] = 1;
  }
  for (Elem x : t)
    for (Elem y : a.cls(a.class_of(x)))
      if (!in[y]) return false;
  return true;
}

bool is_A_subgroup(const SRing& a, const Subgroup& h) {
  if (!(h.owner() == a.group())) throw Error("subgroup owner differs from the S-ring group");
  return is_A_set(a, h.members());
}

std::vector<Subgroup> a_subgroups(const SRing& a) {
  // Every A-subgroup is generated by classes, so joining classes from {e}
  // reaches all of them.
  const FinAbGroup& g = a.group();
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out{Subgroup::trivial(g)};
  seen.insert(out[0].members());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ClassId c = 1; c < a.rank(); ++c) {
      if (out[i].contains(a.cls(c).front())) continue;
      Subgroup h = out[i];
      for (Elem x : a.cls(c)) h = join_cyclic(h, x);
      // <H ∪ X> is generated by an A-set, hence an A-subgroup.
      if (!is_A_subgroup(a, h)) throw InvariantFailure("subgroup generated by A-sets is not an A-subgroup");
      if (seen.insert(h.members()).second) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup rad(const FinAbGroup& g, const std::vector<Elem>& t) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : t) in[x] = 1;
  std::vector<Elem> members;
  for (Elem s = 0; s < g.order(); ++s) {
    bool ok = true;
    for (Elem x : t)
      if (!in[g.mul(s, x)]) {
        ok = false;
        break;
      }
    if (ok) members.push_back(s);
  }
  return Subgroup::from_members(g, std::move(members));
}

std::pair<Subgroup, Subgroup> span_and_rad(const SRing& a, const std::vector<Elem>& t) {
  if (!is_A_set(a, t)) throw Error("T is not an A-set");
  Subgroup span = subgroup_generated(a.group(), t);
  Subgroup r = rad(a.group(), t);
  if (!is_A_subgroup(a, span) || !is_A_subgroup(a, r))
    throw InvariantFailure("<T> or rad(T) of an A-set is not an A-subgroup");
  return {std::move(span), std::move(r)};
}

Subgroup thin_radical(const SRing& a) {
  std::vector<Elem> members;
  for (const auto& c : a.classes())
    if (c.size() == 1) members.push_back(c.front());
  try {
    return Subgroup::from_members(a.group(), std::move(members));
  } catch (const Error&) {
    throw InvariantFailure("thin radical is not a subgroup");
  }
}

SectionRing quotient(const SRing& a, const Subgroup& u, const Subgroup& l) {
  if (!is_A_subgroup(a, u) || !is_A_subgroup(a, l)) throw Error("U/L is not an A-section");
  Quotient q = section_quotient(u, l);
  // pi-images of classes inside U; coinciding images merge.
  std::vector<ClassId> cls_of(q.group.order(), static_cast<ClassId>(-1));
  std::vector<std::vector<Elem>> classes;
  for (const auto& c : a.classes()) {
    if (!u.contains(c.front())) continue;
    std::vector<Elem> img;
    for (Elem x : c) img.push_back(q.projection[x]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    const ClassId existing = cls_of[img.front()];
    if (existing != static_cast<ClassId>(-1)) {
      if (classes[existing] != img)
        throw InvariantFailure("images of two classes in a quotient overlap partially");
      continue;
    }
    for (Elem y : img) {
      if (cls_of[y] != static_cast<ClassId>(-1))
        throw InvariantFailure("images of two classes in a quotient overlap partially");
      cls_of[y] = static_cast<ClassId>(classes.size());
    }
    classes.push_back(std::move(img));
  }
  SRing ring = make_sring(q.group, std::move(classes), "quotient ring");
  return SectionRing{std::move(q), std::move(ring)};
}

SectionRing restrict_to(const SRing& a, const Subgroup& u) {
  if (!is_A_subgroup(a, u)) throw Error("U is not an A-subgroup");
  return quotient(a, u, Subgroup::trivial(a.group()));
}

ClassId rational_conjugate(const SRing& a, ClassId x, std::int64_t m) {
  const FinAbGroup& g = a.group();
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  if (std::gcd(((m % n) + n) % n, n) != 1 && n > 1) throw Error("power " + std::to_string(m) + " is not coprime to |G|");
  const auto& cx = a.cls(x);
  std::vector<Elem> img;
  for (Elem e : cx) img.push_back(g.pow(e, m));
  std::sort(img.begin(), img.end());
  const ClassId c = a.class_of(img.front());
  if (a.cls(c) != img)
    throw InvariantFailure("X^(" + std::to_string(m) + ") is not a basic set");
  return c;
}

std::size_t intersection_number(const SRing& a, ClassId x, const Subgroup& h) {
  const FinAbGroup& g = a.group();
  const auto& cx = a.cls(x);
  std::vector<char> in(g.order(), 0);
  for (Elem e : cx) in[e] = 1;
  std::size_t first = 0;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    std::size_t cnt = 0;
    for (Elem s : h.members()) cnt += in[g.mul(s, cx[i])];
    if (i == 0) first = cnt;
    else if (cnt != first)
      throw InvariantFailure("|X ∩ Hx| is not constant on class " + std::to_string(x));
  }
  return first;
}

bool is_p_sring(const SRing& a, std::uint64_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  auto is_p_power = [p](std::uint64_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };
  if (!is_p_power(a.group().order()))
    throw Error("|G| = " + std::to_string(a.group().order()) + " is not a power of " + std::to_string(p));
  for (const auto& c : a.classes())
    if (!is_p_power(c.size())) return false;
  return true;
}

Order compare(const SRing& a, const SRing& b) {
  if (!(a.group() == b.group())) throw Error("S-rings over different groups");
  // a refines b iff class_a(x) determines class_b(x).
  auto refines = [](const SRing& fine, const SRing& coarse) {
    std::vector<ClassId> to(fine.rank(), static_cast<ClassId>(-1));
    for (Elem x = 0; x < fine.class_map().size(); ++x) {
      auto& t = to[fine.class_of(x)];
      if (t == static_cast<ClassId>(-1)) t = coarse.class_of(x);
      else if (t != coarse.class_of(x)) return false;
    }
    return true;
  };
  const bool b_refines_a = refines(b, a);
  const bool a_refines_b = refines(a, b);
  if (a_refines_b && b_refines_a) return Order::equal;
  if (b_refines_a) return Order::less;
  if (a_refines_b) return Order::greater;
  return Order::incomparable;
}

const char* to_string(Order o) {
  switch (o) {
    case Order::equal: return "equal";
    case Order::less: return "less";
    case Order::greater: return "greater";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace sringkit
