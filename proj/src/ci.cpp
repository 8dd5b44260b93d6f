#include "sringkit/ci.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sringkit/construct.hpp"
#include "sringkit/errors.hpp"

namespace sringkit {

namespace {

using Key = std::vector<std::uint32_t>;  // sorted indices into K's element list

struct Partial {
  Key elements;
  std::vector<std::uint32_t> gens;
};

struct Orbit {
  std::vector<Key> keys;
  std::vector<std::uint32_t> by;
};

class RegularFinder {
 public:
  RegularFinder(const PermGroup& k, const FinAbGroup& g) : k_(k), g_(g), els_(k.elements()) {
    order_.resize(els_.size());
    fpf_.resize(els_.size());
    for (std::size_t i = 0; i < els_.size(); ++i) {
      order_[i] = els_[i].order();
      fpf_[i] = els_[i].fixed_point_free();
    }
    id_ = idx(Perm::identity(k.degree()));
    for (const auto& x : k.generators()) {
      std::vector<std::uint32_t> t(els_.size());
      for (std::size_t i = 0; i < els_.size(); ++i) t[i] = idx(els_[i].conjugate_by(x));
      conj_.push_back(std::move(t));
    }
  }

  std::uint32_t idx(const Perm& p) const {
    auto it = std::lower_bound(els_.begin(), els_.end(), p);
    if (it == els_.end() || !(*it == p)) throw InvariantFailure("product left the enumerated group");
    return static_cast<std::uint32_t>(it - els_.begin());
  }

  // Orbit of `key` under conjugation by K, walked along K's generators;
  // inserts into seen and returns how many were new. `all` receives the
  // orbit and, for each member, the index of an element conjugating `key`
  // onto it.
  std::size_t mark_conjugates(const Key& key, std::set<Key>& seen, Orbit* all = nullptr) const {
    Orbit orb{{key}, {id_}};
    std::set<Key> in{key};
    for (std::size_t i = 0; i < orb.keys.size(); ++i)
      for (std::size_t s = 0; s < conj_.size(); ++s) {
        Key c;
        c.reserve(key.size());
        for (auto h : orb.keys[i]) c.push_back(conj_[s][h]);
        std::sort(c.begin(), c.end());
        if (!in.insert(c).second) continue;
        orb.keys.push_back(std::move(c));
        orb.by.push_back(idx(els_[orb.by[i]] * k_.generators()[s]));
      }
    std::size_t fresh = 0;
    for (const auto& c : orb.keys)
      if (seen.insert(c).second) ++fresh;
    if (all) *all = std::move(orb);
    return fresh;
  }

  // Representatives of the final classes, each with its conjugates.
  std::vector<std::pair<Partial, Orbit>> run() const {
    if (k_.degree() != g_.order()) throw Error("permutation degree differs from |G|");
    std::vector<Partial> level{{{id_}, {}}};
    const auto& f = g_.factors();
    for (std::size_t li = 0; li < f.size(); ++li) {
      const bool last = li + 1 == f.size();
      std::vector<Partial> next;
      std::vector<Orbit> next_conj;
      std::set<Key> seen;
      for (const auto& h : level) {
        for (std::uint32_t r = 0; r < els_.size(); ++r) {
          if (order_[r] != f[li] || !fpf_[r]) continue;
          const Perm& rp = els_[r];
          bool ok = true;
          for (auto s : h.gens)
            if (!(els_[s] * rp == rp * els_[s])) {
              ok = false;
              break;
            }
          if (!ok) continue;
          Key j = h.elements;
          Perm step = rp;
          for (std::uint32_t e = 1; ok && e < f[li]; ++e) {
            for (auto hh : h.elements) {
              const Perm prod = els_[hh] * step;
              if (!prod.fixed_point_free()) {
                ok = false;
                break;
              }
              j.push_back(idx(prod));
            }
            step = step * rp;
          }
          if (!ok) continue;
          std::sort(j.begin(), j.end());
          if (seen.count(j)) continue;
          Orbit conj;
          mark_conjugates(j, seen, last ? &conj : nullptr);
          auto gens = h.gens;
          gens.push_back(r);
          next.push_back({std::move(j), std::move(gens)});
          next_conj.push_back(std::move(conj));
        }
      }
      level = std::move(next);
      if (last) {
        std::vector<std::pair<Partial, Orbit>> out;
        for (std::size_t i = 0; i < level.size(); ++i) out.emplace_back(level[i], std::move(next_conj[i]));
        return out;
      }
    }
    // Trivial G: the identity subgroup is the only regular subgroup.
    return {{level.front(), Orbit{{level.front().elements}, {id_}}}};
  }

  PermGroup group_of(const Key& key, const std::vector<Perm>& gens) const {
    std::vector<Perm> members;
    for (auto i : key) members.push_back(els_[i]);
    return PermGroup::from_elements(k_.degree(), gens, std::move(members));
  }

  const std::vector<Perm>& elements() const { return els_; }

 private:
  const PermGroup& k_;
  const FinAbGroup& g_;
  const std::vector<Perm>& els_;
  std::vector<std::uint64_t> order_;
  std::vector<char> fpf_;
  std::vector<std::vector<std::uint32_t>> conj_;  // element index -> index of its conjugate by generator s
  std::uint32_t id_ = 0;
};

Key gr_key(const RegularFinder& rf, const FinAbGroup& g) {
  Key k;
  for (Elem t = 0; t < g.order(); ++t) {
    const Perm p = translation(g, t);
    auto it = std::lower_bound(rf.elements().begin(), rf.elements().end(), p);
    if (it == rf.elements().end() || !(*it == p)) return {};
    k.push_back(static_cast<std::uint32_t>(it - rf.elements().begin()));
  }
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

std::vector<RegularClass> regular_subgroup_classes(const PermGroup& k, const FinAbGroup& g) {
  RegularFinder rf(k, g);
  const Key gr = gr_key(rf, g);
  std::vector<RegularClass> out;
  for (auto& [part, conj] : rf.run()) {
    std::vector<Perm> gens;
    for (auto i : part.gens) gens.push_back(rf.elements()[i]);
    RegularClass rc{rf.group_of(part.elements, gens), conj.keys.size(), false};
    rc.contains_gr = !gr.empty() && std::find(conj.keys.begin(), conj.keys.end(), gr) != conj.keys.end();
    if (!is_regular_iso(rc.rep, g)) throw InvariantFailure("regular-subgroup search returned a non-regular group");
    out.push_back(std::move(rc));
  }
  std::sort(out.begin(), out.end(), [](const RegularClass& a, const RegularClass& b) {
    if (a.contains_gr != b.contains_gr) return a.contains_gr;
    return a.rep.elements() < b.rep.elements();
  });
  return out;
}

std::vector<PermGroup> regular_subgroups(const PermGroup& k, const FinAbGroup& g) {
  RegularFinder rf(k, g);
  std::vector<PermGroup> out;
  for (auto& [part, conj] : rf.run())
    for (std::size_t c = 0; c < conj.keys.size(); ++c) {
      std::vector<Perm> members;
      for (auto i : conj.keys[c]) members.push_back(rf.elements()[i]);
      std::vector<Perm> gens;
      const Perm& x = rf.elements()[conj.by[c]];
      for (auto i : part.gens) {
        gens.push_back(rf.elements()[i].conjugate_by(x));
        if (!std::binary_search(members.begin(), members.end(), gens.back()))
          throw InvariantFailure("conjugating element does not map the generators into the conjugate");
      }
      out.push_back(PermGroup::from_elements(k.degree(), std::move(gens), std::move(members)));
    }
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.elements() < b.elements(); });
  return out;
}

bool is_transjugate(const PermGroup& k, const FinAbGroup& g) {
  const auto classes = regular_subgroup_classes(k, g);
  return classes.size() == 1 && classes.front().contains_gr;
}

CiReport is_ci_sring(const SRing& a, const StabilizerResult& stab, const Caps& caps) {
  const FinAbGroup& g = a.group();
  CiReport r{a, false, false, 0, {}, 0, false, {}};
  r.schurian = orbit_ring(g, stab.group.generators()) == a;
  if (!r.schurian) throw Error("CI test needs a schurian S-ring");
  r.normal = is_normal(stab, g);
  const PermGroup k0 = aut_group(a, stab);
  r.aut_order = k0.order();
  if (k0.order() > BigOrder(caps.ci_group))
    throw CapExceeded("ci_group", "|aut(A)| = " + k0.order().str() + " exceeds " + std::to_string(caps.ci_group));
  const PermGroup k = k0.enumerated(caps);
  r.regular_classes = regular_subgroup_classes(k, g);
  for (const auto& c : r.regular_classes) r.regular_total += c.size;
  r.is_ci = r.regular_classes.size() == 1 && r.regular_classes.front().contains_gr;
  if (r.regular_classes.empty() || !r.regular_classes.front().contains_gr)
    throw InvariantFailure("G_r missing from the regular subgroups of aut(A)");
  if (r.regular_classes.front().size != 1 && r.normal)
    throw InvariantFailure("G_r has conjugates in aut(A) although A is normal");
  if (r.normal && r.is_ci != (r.regular_total == 1))
    throw InvariantFailure("transjugacy and uniqueness of G_r disagree for a normal ring");
  if (!r.is_ci) r.witness = r.regular_classes[1].rep;
  return r;
}

CiReport is_ci_sring(const SRing& a, const Caps& caps) {
  return is_ci_sring(a, aut_stabilizer(a, caps), caps);
}

std::vector<HolElement> hol_generators(const FinAbGroup& g, const PermGroup& r) {
  std::vector<HolElement> out;
  for (const auto& p : r.generators()) {
    auto h = perm_to_hol(g, p);
    if (!h) throw Error("permutation is not in Hol(G)");
    out.push_back(std::move(*h));
  }
  return out;
}

std::vector<CiReport> noncinorm_search(const FinAbGroup& g, const Caps& caps) {
  const PermGroup hol = holomorph(g, caps);
  const PermGroup gr = right_regular(g);
  std::map<std::vector<ClassId>, std::optional<CiReport>> by_ring;
  for (const auto& rr : regular_subgroups(hol, g)) {
    if (rr.same_elements(gr)) continue;
    std::vector<Perm> gens = gr.generators();
    for (const auto& p : rr.generators()) gens.push_back(p);
    const PermGroup k = group_closure(g.order(), std::move(gens), caps);
    SRing a = transitivity_module(g, k, caps);
    auto [it, fresh] = by_ring.try_emplace(a.class_map());
    if (!fresh) continue;
    const auto stab = aut_stabilizer(a, caps);
    if (!is_normal(stab, g)) continue;
    CiReport rep = is_ci_sring(a, stab, caps);
    if (!rep.is_ci) it->second = std::move(rep);
  }
  std::vector<CiReport> out;
  for (auto& [key, rep] : by_ring)
    if (rep) out.push_back(std::move(*rep));
  std::stable_sort(out.begin(), out.end(), [](const CiReport& x, const CiReport& y) {
    if (x.sring.rank() != y.sring.rank()) return x.sring.rank() < y.sring.rank();
    return x.sring.class_map() < y.sring.class_map();
  });
  return out;
}

std::size_t Survey::normal_nonci() const {
  std::size_t c = 0;
  for (const auto& r : rows)
    if (r.normal && r.ci && !*r.ci) ++c;
  return c;
}

Survey nci2_survey(const FinAbGroup& g, const Caps& caps) {
  const AutTable t = AutTable::build(g, caps);
  const auto classes = aut_subgroup_classes(t);
  Survey s{g, t.size(), {}, {}, true, {}};
  std::vector<std::optional<SurveyRow>> rows(classes.size());
  std::vector<std::string> errors(classes.size());
  const std::int64_t nrows = static_cast<std::int64_t>(classes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < nrows; ++i) {
    try {
      const auto& m = classes[i];
      std::vector<GroupAut> gens;
      for (auto x : m.generators) gens.push_back(t.at(x));
      SurveyRow row{gens, m.elements.size(), m.conjugates, cyclotomic(g, gens), false, false, {}, {}, {}};
      try {
        const auto stab = aut_stabilizer(row.ring, caps);
        row.two_closed = stab.group.order() == BigOrder(row.m_order);
        row.normal = is_normal(stab, g);
        if (row.normal) {
          CiReport rep = is_ci_sring(row.ring, stab, caps);
          row.ci = rep.is_ci;
          row.witness = rep.witness;
        }
      } catch (const CapExceeded& e) {
        row.skipped = e.what();
      }
      rows[i] = std::move(row);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw InvariantFailure("survey row failed: " + e);
  for (auto& r : rows) {
    if (!r->skipped.empty()) {
      s.complete = false;
      if (s.incomplete_reason.empty()) s.incomplete_reason = r->skipped;
    }
    s.rows.push_back(std::move(*r));
  }
  std::stable_sort(s.rows.begin(), s.rows.end(), [](const SurveyRow& a, const SurveyRow& b) {
    if (a.m_order != b.m_order) return a.m_order < b.m_order;
    return a.ring.class_map() < b.ring.class_map();
  });
  try {
    s.noncinorm = noncinorm_search(g, caps);
  } catch (const CapExceeded& e) {
    s.complete = false;
    if (s.incomplete_reason.empty()) s.incomplete_reason = e.what();
  }
  return s;
}

}  // namespace sringkit
