#include "sringkit/repro.hpp"

#include <algorithm>

#include "sringkit/aut.hpp"
#include "sringkit/ci.hpp"
#include "sringkit/construct.hpp"
#include "sringkit/errors.hpp"
#include "sringkit/io.hpp"

namespace sringkit {

namespace {

std::vector<ReproScript> build_scripts() {
  std::vector<ReproScript> out;
  {
    // G = <a> x <b>, a of order 4, b of order 2; b0 = b.
    ReproScript s;
    s.name = "c4xc2";
    s.group = "C4xC2";
    s.m_generators = {{{1, 1}, {0, 1}}};  // sigma: a -> ab, b -> b
    s.r_generators = {{{1, 1}, {{1, 1}, {0, 1}}},  // a_r sigma = (x -> x^sigma * a^sigma)
                      {{0, 1}, {{1, 0}, {0, 1}}}};  // b_r
    s.r_first_order = 4;
    s.r_first_orbit = {{0, 0}, {1, 1}, {2, 1}, {3, 0}};
    s.expect_m_order = 2;
    s.expect_classes = 6;
    s.expect_aut_order = 16;
    out.push_back(std::move(s));
  }
  {
    // G = <a> x <b>, both of order 4; b0 = b^2.
    ReproScript s;
    s.name = "c4xc4";
    s.group = "C4xC4";
    s.m_generators = {{{1, 2}, {0, 1}}};  // sigma: a -> a b^2, b -> b
    s.r_generators = {{{1, 2}, {{1, 2}, {0, 1}}}, {{0, 1}, {{1, 0}, {0, 1}}}};
    s.r_first_order = 4;
    s.r_first_orbit = {{0, 0}, {1, 2}, {2, 2}, {3, 0}};
    s.expect_m_order = 2;
    s.expect_aut_order = 32;
    out.push_back(std::move(s));
  }
  {
    // G = C2^6 with generators a1..a6 (indices 0..5). Parameters (alpha,
    // beta, gamma): a1 -> a1 a5^alpha a6^beta, a2 -> a2 a4^alpha a6^gamma,
    // a3 -> a3 a4^beta a5^gamma; a4, a5, a6 fixed.
    ReproScript s;
    s.name = "c2pow6";
    s.group = "C2^6";
    s.params = 3;
    s.param_terms = {{0, 0, 4}, {1, 0, 5}, {0, 1, 3}, {2, 1, 5}, {1, 2, 3}, {2, 2, 4}};
    s.expect_m_order = 8;
    s.expect_aut_order = 512;
    s.notes = {
        "M is read inside GL(6,2): unitriangular 6x6 matrices over GF(2) acting on C2^6; "
        "a GL_2(6) reading does not act on this group"};
    out.push_back(std::move(s));
  }
  return out;
}

std::string hol_word(const FinAbGroup& g, const HolElement& h) {
  return "x -> " + io::format_aut(h.aut) + "(x) * " + g.format(h.translation);
}

}  // namespace

const std::vector<ReproScript>& repro_scripts() {
  static const std::vector<ReproScript> scripts = build_scripts();
  return scripts;
}

const ReproScript* find_script(const std::string& name) {
  for (const auto& s : repro_scripts())
    if (s.name == name) return &s;
  return nullptr;
}

bool Certificate::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.ok; });
}

Certificate run_repro(const ReproScript& s, const Caps& caps) {
  Certificate cert;
  cert.name = s.name;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    cert.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };
  using io::json;
  json& d = cert.data;
  d["name"] = s.name;
  d["notes"] = s.notes;

  try {
    const FinAbGroup g = parse_group(s.group, caps);
    const std::size_t n = g.order();
    d["group"] = g.name();
    auto elem = [&](const Residues& r) {
      if (r.size() != g.rank()) throw Error("residue tuple has the wrong length");
      return g.encode(r);
    };
    auto make_aut = [&](const std::vector<Residues>& imgs) {
      std::vector<Elem> e;
      for (const auto& r : imgs) e.push_back(elem(r));
      return GroupAut::from_images(g, std::move(e));
    };

    std::vector<GroupAut> m_gens;
    for (const auto& imgs : s.m_generators) m_gens.push_back(make_aut(imgs));
    for (std::size_t mask = 1; mask < (std::size_t{1} << s.params); ++mask) {
      std::vector<Elem> imgs;
      for (std::size_t i = 0; i < g.rank(); ++i) imgs.push_back(g.generator(i));
      for (const auto& t : s.param_terms)
        if (mask >> t.param & 1) imgs[t.gen] = g.mul(imgs[t.gen], g.generator(t.target));
      m_gens.push_back(GroupAut::from_images(g, std::move(imgs)));
    }
    std::vector<Perm> m_perms;
    json mj = json::array();
    for (const auto& m : m_gens) {
      m_perms.push_back(aut_perm(m));
      mj.push_back(io::format_aut(m));
    }
    d["m_generators"] = mj;

    const PermGroup m_group = group_closure(n, m_perms, caps);
    d["m_order"] = m_group.small_order();
    if (s.expect_m_order)
      check("|M| = " + std::to_string(*s.expect_m_order), m_group.small_order() == *s.expect_m_order,
            "got " + std::to_string(m_group.small_order()));

    const SRing a = cyclotomic(g, m_gens);
    d["sring"] = io::to_json(a);
    d["rank"] = a.rank();
    if (s.expect_classes)
      check("A = cyc(M) has " + std::to_string(*s.expect_classes) + " classes", a.rank() == *s.expect_classes,
            "got " + std::to_string(a.rank()));

    const StabilizerResult stab = aut_stabilizer(a, caps);
    const BigOrder aut_order = BigOrder(n) * stab.group.order();
    d["aut_order"] = aut_order.str();
    check("|aut(A)| = " + std::to_string(s.expect_aut_order), aut_order == BigOrder(s.expect_aut_order),
          "got " + aut_order.str());

    const PermGroup gr = right_regular(g);
    std::vector<Perm> kgens = gr.generators();
    kgens.insert(kgens.end(), m_perms.begin(), m_perms.end());
    const PermGroup k = group_closure(n, kgens, caps);
    bool inside = std::all_of(m_perms.begin(), m_perms.end(), [&](const Perm& p) { return preserves_colors(a, p); });
    for (const auto& p : stab.group.generators()) inside = inside && k.contains(p);
    check("aut(A) = G_r x| M", inside && k.order() == aut_order,
          "|<G_r, M>| = " + k.order().str() + ", |aut(A)| = " + aut_order.str());
    check("A is normal", is_normal(stab, g));

    PermGroup r;
    if (!s.r_generators.empty()) {
      std::vector<Perm> rp;
      json rj = json::array();
      for (const auto& h : s.r_generators) {
        const HolElement he{elem(h.translation), make_aut(h.aut_images)};
        rp.push_back(hol_to_perm(he));
        rj.push_back({{"holomorph", io::to_json(he)}, {"word", hol_word(g, he)}, {"perm", io::to_json(rp.back())}});
      }
      d["r_generators"] = rj;
      if (s.r_first_order)
        check("first generator of R has order " + std::to_string(*s.r_first_order),
              rp.front().order() == *s.r_first_order, "got " + std::to_string(rp.front().order()));
      bool commute = true;
      for (std::size_t i = 0; i < rp.size(); ++i)
        for (std::size_t j = i + 1; j < rp.size(); ++j) commute = commute && rp[i] * rp[j] == rp[j] * rp[i];
      check("generators of R commute", commute);
      if (!s.r_first_orbit.empty()) {
        std::vector<Elem> want;
        for (const auto& x : s.r_first_orbit) want.push_back(elem(x));
        std::sort(want.begin(), want.end());
        const auto got = orbits(n, {rp.front()}).front();
        check("orbit of e under the first generator is " + io::format_class(g, want), got == want,
              "got " + io::format_class(g, got));
      }
      r = group_closure(n, rp, caps);
      check("R lies in aut(A)", k.contains(rp.front()) && std::all_of(rp.begin(), rp.end(), [&](const Perm& p) {
                                  return k.contains(p);
                                }));
    } else {
      const auto classes = regular_subgroup_classes(k, g);
      d["regular_classes"] = classes.size();
      if (!check("aut(A) has at least two classes of G-regular subgroups", classes.size() >= 2,
                 "got " + std::to_string(classes.size())))
        return cert;
      r = classes[1].rep;
      json rj = json::array();
      for (const auto& p : r.generators()) {
        auto h = perm_to_hol(g, p);
        rj.push_back({{"perm", io::to_json(p)}, {"holomorph", h ? io::to_json(*h) : json(nullptr)}});
      }
      d["r_generators"] = rj;
    }

    check("R is regular and isomorphic to " + g.name(), is_regular_iso(r, g));
    check("R != G_r", !r.same_elements(gr));
    const bool conj = are_conjugate_subgroups(k, gr, r).has_value();
    check("R is not conjugate to G_r in aut(A)", !conj);

    const CiReport rep = is_ci_sring(a, stab, caps);
    d["ci"] = io::to_json(rep);
    check("transjugacy test: A is non-CI", !rep.is_ci,
          std::to_string(rep.regular_classes.size()) + " class(es), " + std::to_string(rep.regular_total) +
              " regular subgroup(s)");
    d["verdict"] = cert.pass() ? "normal non-CI S-ring" : "FAIL";
  } catch (const std::exception& e) {
    check("script ran to completion", false, e.what());
  }
  return cert;
}

}  // namespace sringkit
