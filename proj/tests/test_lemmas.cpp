#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sringkit/ci.hpp"
#include "sringkit/construct.hpp"
#include "sringkit/lemmas.hpp"

using namespace sringkit;

namespace {

const LemmaTally& tally(const LemmaReport& r, const std::string& name) {
  static const LemmaTally empty;
  const auto it = r.tallies.find(name);
  return it == r.tallies.end() ? empty : it->second;
}

bool all_pass_except(const LemmaReport& r, std::initializer_list<const char*> except) {
  for (const auto& [name, t] : r.tallies) {
    if (std::find(except.begin(), except.end(), name) != except.end()) continue;
    if (t.checked != t.passed) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("lemmas") {

TEST_CASE("the radical bound fails for ZC9") {
  // X = {x} generates G, V = G, so p|V||X|/|G| = 3 while rad(X) = {e}.
  const auto g = parse_group("C9");
  const std::vector<Elem> x{1};
  CHECK(rad(g, x).size() == 1);
  CHECK(3 * g.order() * x.size() / g.order() == 3);

  LemmaReport r;
  check_ring_lemmas(SRing::group_ring(g), Caps::defaults(), r);
  CHECK(tally(r, "interrad").checked > tally(r, "interrad").passed);
  CHECK(tally(r, "interrad_v_proper").checked == 0);
  CHECK(all_pass_except(r, {"interrad"}));
}

TEST_CASE("the radical bound holds for p-S-rings with V < G") {
  for (const char* spec : {"C8", "C4xC2", "C2^3", "C27", "C9xC3", "C3^3", "C4xC4", "C2^4"}) {
    const auto r = run_lemmas(parse_group(spec), 1);
    CHECK_MESSAGE(tally(r, "interrad_v_proper").checked == tally(r, "interrad_v_proper").passed, spec);
    CHECK_MESSAGE(tally(r, "interrad_v_proper").checked > 0, spec);
    CHECK_MESSAGE(all_pass_except(r, {"interrad", "tensci"}), spec);
  }
}

TEST_CASE("the tensor product of two CI rings can be non-CI") {
  const auto c4 = parse_group("C4");
  const auto v4 = parse_group("C2xC2");
  const auto a1 = cyclotomic(c4, {GroupAut::power_map(c4, -1)});
  const auto a2 = *verify_sring(v4, {{0}, {1}, {2, 3}}).ring;
  REQUIRE(a1.classes() == std::vector<std::vector<Elem>>{{0}, {1, 3}, {2}});

  CHECK(oracle::is_ci_by_definition(c4, a1.classes()));
  CHECK(oracle::is_ci_by_definition(v4, a2.classes()));
  CHECK(is_ci_sring(a1).is_ci);
  CHECK(is_ci_sring(a2).is_ci);

  const auto t = tensor(a1, a2);
  const auto& g = t.group();
  const auto rep = is_ci_sring(t);
  CHECK(rep.aut_order == 64);
  CHECK(rep.regular_classes.size() == 2);
  CHECK_FALSE(rep.is_ci);
  REQUIRE(rep.witness);

  // By definition: f(x) = r_x(e) for an isomorphism x -> r_x from G onto the
  // witness R. A^f is a Cayley S-ring, but no automorphism of G maps A to it.
  const auto& r = rep.witness->elements();
  std::vector<Elem> f;
  for (const auto& x : r)
    for (const auto& y : r)
      for (const auto& z : r) {
        if (!f.empty() || x.order() != 4 || y.order() != 2 || z.order() != 2) continue;
        std::vector<Elem> cand(g.order());
        std::vector<char> hit(g.order(), 0);
        bool ok = true;
        for (Elem e = 0; e < g.order() && ok; ++e) {
          const auto d = g.digits(e);
          const Elem pt = (x.pow(d[0]) * y.pow(d[1]) * z.pow(d[2]))[0];
          ok = !hit[pt];
          hit[pt] = 1;
          cand[e] = pt;
        }
        if (ok) f = cand;
      }
  REQUIRE(f.size() == g.order());
  CHECK(f[0] == 0);
  CHECK(oracle::image_is_cayley(g, t.classes(), f));
  std::vector<std::vector<Elem>> image;
  for (const auto& c : t.classes()) {
    std::vector<Elem> img;
    for (Elem e : c) img.push_back(f[e]);
    image.push_back(img);
  }
  CHECK(oracle::is_sring(g, image));
  const auto auts = oracle::automorphisms_by_generators(g);
  CHECK(auts.size() == 192);
  CHECK_FALSE(oracle::image_matched_by_group_aut(g, t.classes(), f, auts));

  LemmaReport lr;
  check_tensor_lemmas(a1, a2, Caps::defaults(), lr);
  CHECK(tally(lr, "tensci").checked == 1);
  CHECK(tally(lr, "tensci").passed == 0);
  CHECK(tally(lr, "tensci_only_if").passed == 1);
}

TEST_CASE("tensor properties that hold on every pair up to order 16") {
  const auto r = run_tensor_suite(16, 1);
  for (const char* name : {"auttens", "tensnorm", "tensci_only_if", "tensci_if_coprime"}) {
    CHECK_MESSAGE(tally(r, name).checked > 0, name);
    CHECK_MESSAGE(tally(r, name).checked == tally(r, name).passed, name);
  }
}

TEST_CASE("lemma suite on small groups") {
  for (const char* spec : {"C4xC2", "C2^3", "C6", "C12", "C5xC5"}) {
    const auto r = run_lemmas(parse_group(spec), 1);
    CHECK_MESSAGE(r.pass(), spec);
    CHECK(r.rings > 0);
  }
}

TEST_CASE("sampling is seeded") {
  const auto g = parse_group("C2^5");
  bool sampled = false;
  const auto a = cyclotomic_rings(g, 5, Caps::defaults(), &sampled);
  const auto b = cyclotomic_rings(g, 5, Caps::defaults());
  CHECK(sampled);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  bool forced = false;
  cyclotomic_rings(parse_group("C4xC2"), 5, Caps::defaults(), &forced, 4, true);
  CHECK(forced);
}

}
