#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sringkit/aut.hpp"
#include "sringkit/construct.hpp"
#include "sringkit/errors.hpp"
#include "sringkit/kernels.hpp"

using namespace sringkit;
using testing::el;
using testing::els;

namespace {

std::vector<ClassId> conjugate_map(const SRing& a, const GroupAut& phi) {
  const auto& g = a.group();
  std::vector<ClassId> m(g.order());
  for (Elem x = 0; x < g.order(); ++x) m[phi(x)] = a.class_of(x);
  // Renumber by least member.
  std::vector<ClassId> renum(a.rank(), static_cast<ClassId>(-1));
  ClassId next = 0;
  for (auto& c : m) {
    if (renum[c] == static_cast<ClassId>(-1)) renum[c] = next++;
    c = renum[c];
  }
  return m;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("cyc(<sigma>) over C4xC2") {
  const auto g = parse_group("C4xC2");
  const auto sigma = GroupAut::from_images(g, {el(g, {1, 1}), el(g, {0, 1})});
  CHECK(cyclotomic(g, {sigma}) == testing::c4xc2_ring());
  CHECK(cyclotomic(g, {}) == SRing::group_ring(g));
}

TEST_CASE("transitivity module of Hol(C3)") {
  const auto g = parse_group("C3");
  const auto a = transitivity_module(g, holomorph(g));
  CHECK(a.rank() == 2);
  CHECK(a.cls(1) == std::vector<Elem>{1, 2});
  CHECK_THROWS_AS(transitivity_module(g, group_closure(3, {Perm({0, 2, 1})})), Error);
}

TEST_CASE("transitivity module of <G_r, R> is at most as fine as cyc(<sigma>)") {
  const auto g = parse_group("C4xC2");
  const auto sigma = GroupAut::from_images(g, {el(g, {1, 1}), el(g, {0, 1})});
  auto gens = right_regular(g).generators();
  gens.push_back(hol_to_perm({el(g, {1, 1}), sigma}));
  const auto k = group_closure(8, gens);
  const auto o = compare(transitivity_module(g, k), testing::c4xc2_ring());
  CHECK((o == Order::less || o == Order::equal));
  CHECK(orbit_ring(g, point_stabilizer(k, 0).generators()) == transitivity_module(g, k));
}

TEST_CASE("tensor product layout") {
  const auto c2 = parse_group("C2"), c3 = parse_group("C3");
  const auto t = tensor(SRing::group_ring(c2), SRing::trivial(c3));
  CHECK(t.group().factors() == std::vector<std::uint32_t>{2, 3});
  CHECK(t.rank() == 4);
  CHECK(t.cls(t.class_of(1)) == std::vector<Elem>{1, 2});
  CHECK(t.cls(t.class_of(3)) == std::vector<Elem>{3});
  CHECK(t.cls(t.class_of(4)) == std::vector<Elem>{4, 5});
  CHECK(direct_product(c2, c3).order() == 6);
}

TEST_CASE("ZC3 wr ZC3 over C9") {
  const auto g = parse_group("C9");
  const auto v = Subgroup::from_members(g, {0, 3, 6});
  const auto c3 = section_quotient(v, Subgroup::trivial(g)).group;
  const auto q = section_quotient(Subgroup::whole(g), v).group;
  const auto a = gen_wreath(v, v, SRing::group_ring(c3), SRing::group_ring(q));
  const std::vector<std::vector<Elem>> want{{0}, {1, 4, 7}, {2, 5, 8}, {3}, {6}};
  CHECK(a.classes() == want);

  const auto w = detect_gwreath(a);
  const bool found = std::any_of(w.begin(), w.end(), [&](const GwreathWitness& x) {
    return x.nontrivial && x.u == v && x.l == v;
  });
  CHECK(found);
  for (const auto& x : detect_gwreath(SRing::group_ring(g))) CHECK_FALSE(x.nontrivial);
}

TEST_CASE("incompatible wreath data is rejected") {
  const auto g = parse_group("C9");
  const auto v = Subgroup::from_members(g, {0, 3, 6});
  const auto c3 = section_quotient(v, Subgroup::trivial(g)).group;
  const auto q = section_quotient(Subgroup::whole(g), v).group;
  // U is not an A_Q-subgroup.
  CHECK_THROWS_AS(gen_wreath(v, Subgroup::trivial(g), SRing::group_ring(c3), SRing::trivial(g)), Error);
  CHECK_THROWS_AS(gen_wreath(v, v, SRing::group_ring(q), SRing::group_ring(g)), Error);
}

TEST_CASE("Sylow decomposition") {
  const auto c2 = parse_group("C2"), c3 = parse_group("C3");
  const auto t = tensor(SRing::group_ring(c2), SRing::group_ring(c3));
  const auto s = sylow_decompose(t);
  REQUIRE(s.ok);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0].p == 2);
  CHECK(s.factors[0].ring.ring.rank() == 2);
  CHECK(s.factors[1].p == 3);
  CHECK(s.factors[1].ring.ring.rank() == 3);

  // Inversion over C6 restricts to {e},{x,x^2} on C3: not a 3-S-ring.
  const auto c6 = parse_group("C6");
  const auto inv = sylow_decompose(cyclotomic(c6, {GroupAut::power_map(c6, -1)}));
  CHECK_FALSE(inv.ok);
  CHECK(inv.failure.find("Sylow 3") != std::string::npos);

  // ZC2 wr ZC3: the classes outside C2 are C2-cosets.
  const auto bad = *verify_sring(c6, {{0}, {3}, {1, 4}, {2, 5}}).ring;
  const auto r = sylow_decompose(bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("cyclotomic ring classes cover every cyclotomic ring of small groups") {
  for (const char* spec : {"C4", "C2xC2", "C6", "C8", "C4xC2", "C2^3", "C9", "C3xC3"}) {
    const auto g = parse_group(spec);
    const auto auts = aut_elements(g);
    std::set<std::vector<ClassId>> want;
    for (const auto& x : auts)
      for (const auto& y : auts) want.insert(cyclotomic(g, {x, y}).class_map());
    std::set<std::vector<ClassId>> got;
    std::set<std::vector<ClassId>> reps;
    for (const auto& c : cyclotomic_ring_classes(g)) {
      CHECK(cyclotomic(g, c.gens) == c.ring);
      reps.insert(c.ring.class_map());
      for (const auto& phi : auts) got.insert(conjugate_map(c.ring, phi));
    }
    CHECK_MESSAGE(got == want, spec);
    // One representative per conjugacy class.
    std::size_t classes = 0;
    std::set<std::vector<ClassId>> covered;
    for (const auto& m : want) {
      if (covered.count(m)) continue;
      ++classes;
      for (const auto& phi : auts) covered.insert(conjugate_map(*verify_sring(g, kernels::classes_from_map(m)).ring, phi));
    }
    CHECK_MESSAGE(classes == reps.size(), spec);
  }
}

}
