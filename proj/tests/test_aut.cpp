#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sringkit/aut.hpp"
#include "sringkit/construct.hpp"
#include "sringkit/errors.hpp"
#include "sringkit/repro.hpp"

using namespace sringkit;
using testing::el;
using testing::els;

namespace {

// C4xC4 ring {e}, S, rest with S = {±(1,0), ±(0,1), ±(1,1)}: the Shrikhande graph.
SRing shrikhande() {
  const auto g = parse_group("C4xC4");
  const auto s = els(g, {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}});
  std::vector<Elem> rest;
  for (Elem x = 1; x < g.order(); ++x)
    if (!std::binary_search(s.begin(), s.end(), x)) rest.push_back(x);
  return *verify_sring(g, {{0}, s, rest}).ring;
}

}  // namespace

TEST_SUITE("aut") {

TEST_CASE("stabilizer orders") {
  CHECK(aut_stabilizer(SRing::group_ring(parse_group("C4xC2"))).group.order() == 1);
  CHECK(aut_stabilizer(SRing::trivial(parse_group("C5"))).group.order() == 24);
  CHECK(aut_stabilizer(testing::c4xc2_ring()).group.order() == 2);
  CHECK(aut_group(testing::c4xc2_ring()).order() == 16);
}

TEST_CASE("the C2^6 ring has stabilizer of order 8") {
  const auto& s = *find_script("c2pow6");
  const auto g = parse_group(s.group);
  std::vector<GroupAut> m;
  for (std::size_t mask = 1; mask < 8; ++mask) {
    std::vector<Elem> imgs;
    for (std::size_t i = 0; i < 6; ++i) imgs.push_back(g.generator(i));
    for (const auto& t : s.param_terms)
      if (mask >> t.param & 1) imgs[t.gen] = g.mul(imgs[t.gen], g.generator(t.target));
    m.push_back(GroupAut::from_images(g, imgs));
  }
  const auto a = cyclotomic(g, m);
  const auto stab = aut_stabilizer(a);
  CHECK(stab.group.order() == 8);
  CHECK(aut_group(a, stab).order() == 512);
  CHECK(is_normal(stab, g));
}

TEST_CASE("stabilizer generators preserve colors and agree with brute force") {
  for (const char* spec : {"C4", "C2xC2", "C6", "C4xC2", "C2^3", "C8"}) {
    const auto g = parse_group(spec);
    for (const auto& c : cyclotomic_ring_classes(g)) {
      const auto stab = aut_stabilizer(c.ring);
      for (const auto& p : stab.group.generators()) CHECK(preserves_colors(c.ring, p));
      CHECK(stab.group.order() == oracle::color_stabilizer(g, c.ring.classes()).size());
    }
  }
}

TEST_CASE("cyclotomic rings are schurian, the Shrikhande ring is not") {
  CHECK(is_schurian(testing::c4xc2_ring()));
  CHECK(is_schurian(SRing::trivial(parse_group("C2^4"))));
  const auto a = shrikhande();
  CHECK(a.rank() == 3);
  const auto stab = aut_stabilizer(a);
  CHECK(stab.group.order() == 12);
  CHECK_FALSE(is_schurian(a));
  CHECK(orbit_ring(a.group(), stab.group.generators()).rank() > 3);
}

TEST_CASE("normality") {
  const auto g = parse_group("C9");
  const auto wr = *verify_sring(g, {{0}, {1, 4, 7}, {2, 5, 8}, {3}, {6}}).ring;
  CHECK_FALSE(is_normal(wr));
  CHECK(is_normal(testing::c4xc2_ring()));
  CHECK(is_normal(SRing::group_ring(g)));
  CHECK_FALSE(is_normal(SRing::trivial(parse_group("C5"))));
}

TEST_CASE("group automorphisms from permutations") {
  const auto g = parse_group("C4xC2");
  const auto sigma = GroupAut::from_images(g, {el(g, {1, 1}), el(g, {0, 1})});
  const auto back = as_group_aut(g, aut_perm(sigma));
  REQUIRE(back);
  CHECK(*back == sigma);
  CHECK_FALSE(as_group_aut(g, translation(g, 1)).has_value());
}

TEST_CASE("2-closure") {
  const auto g = parse_group("C4xC2");
  const auto gr = right_regular(g);
  CHECK(two_closure(g, gr).order() == 8);
  const auto sigma = GroupAut::from_images(g, {el(g, {1, 1}), el(g, {0, 1})});
  auto gens = gr.generators();
  gens.push_back(hol_to_perm({el(g, {1, 1}), sigma}));
  const auto k = group_closure(8, gens);
  CHECK(two_closure(g, k).order() == 16);
  // Idempotent.
  const auto k2 = two_closure(g, k).enumerated();
  CHECK(two_closure(g, k2).order() == k2.order());
}

TEST_CASE("the search budget is enforced") {
  Caps small;
  small.search_nodes = 3;
  CHECK_THROWS_AS(aut_stabilizer(SRing::trivial(parse_group("C8")), small), CapExceeded);
  small = Caps{};
  small.aut_search_order = 8;
  CHECK_THROWS_AS(aut_stabilizer(SRing::trivial(parse_group("C9")), small), CapExceeded);
}

}
