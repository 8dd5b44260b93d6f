#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "sringkit/aut.hpp"
#include "sringkit/ci.hpp"
#include "sringkit/construct.hpp"
#include "sringkit/errors.hpp"

using namespace sringkit;
using testing::el;

namespace {

void check_report_invariants(const CiReport& r) {
  const auto& g = r.sring.group();
  std::size_t with_gr = 0;
  for (const auto& c : r.regular_classes) {
    with_gr += c.contains_gr;
    CHECK(is_regular_iso(c.rep, g));
  }
  CHECK(with_gr == 1);
  REQUIRE_FALSE(r.regular_classes.empty());
  CHECK(r.regular_classes.front().contains_gr);
  CHECK(r.is_ci == (r.regular_classes.size() == 1));
  CHECK(r.witness.has_value() == !r.is_ci);
}

}  // namespace

TEST_SUITE("ci") {

TEST_CASE("regular subgroups of Hol(C3) are just G_r") {
  const auto g = parse_group("C3");
  const auto rs = regular_subgroups(holomorph(g), g);
  REQUIRE(rs.size() == 1);
  CHECK(rs.front().same_elements(right_regular(g)));
  CHECK(is_transjugate(holomorph(g), g));
}

TEST_CASE("regular subgroups of Hol(C4xC2)") {
  const auto g = parse_group("C4xC2");
  const auto hol = holomorph(g);
  const auto all = regular_subgroups(hol, g);
  std::size_t total = 0;
  for (const auto& c : regular_subgroup_classes(hol, g)) total += c.size;
  CHECK(total == all.size());
  for (const auto& r : all) CHECK(is_regular_iso(r, g));
}

TEST_CASE("known CI verdicts") {
  const auto zg = is_ci_sring(SRing::group_ring(parse_group("C4xC2")));
  CHECK(zg.is_ci);
  check_report_invariants(zg);

  const auto nonci = is_ci_sring(testing::c4xc2_ring());
  CHECK_FALSE(nonci.is_ci);
  CHECK(nonci.normal);
  CHECK(nonci.aut_order == 16);
  check_report_invariants(nonci);
  CHECK_FALSE(nonci.witness->same_elements(right_regular(parse_group("C4xC2"))));

  const auto c9 = parse_group("C9");
  const auto full = is_ci_sring(cyclotomic(c9, {GroupAut::power_map(c9, 2)}));
  CHECK(full.is_ci);
  check_report_invariants(full);
}

TEST_CASE("non-schurian input is rejected") {
  const auto g = parse_group("C4xC4");
  std::vector<Elem> s{el(g, {1, 0}), el(g, {3, 0}), el(g, {0, 1}), el(g, {0, 3}), el(g, {1, 1}), el(g, {3, 3})};
  std::sort(s.begin(), s.end());
  std::vector<Elem> rest;
  for (Elem x = 1; x < 16; ++x)
    if (!std::binary_search(s.begin(), s.end(), x)) rest.push_back(x);
  CHECK_THROWS_AS(is_ci_sring(*verify_sring(g, {{0}, s, rest}).ring), Error);
}

TEST_CASE("transjugacy agrees with the definition of CI on all schurian rings of order at most 8") {
  Caps caps;
  caps.ci_group = 50000;  // the trivial ring over order 8 has aut = S_8
  for (const char* spec : {"C2", "C3", "C4", "C2xC2", "C5", "C6", "C7", "C8", "C4xC2", "C2^3"}) {
    const auto g = parse_group(spec);
    std::size_t rings = 0, nonci = 0;
    for (const auto& p : oracle::partitions_with_e(g)) {
      const auto v = verify_sring(g, p);
      if (!v.ok() || !is_schurian(*v.ring)) continue;
      const auto rep = is_ci_sring(*v.ring, caps);
      check_report_invariants(rep);
      CHECK_MESSAGE(rep.is_ci == oracle::is_ci_by_definition(g, v.ring->classes()), spec);
      ++rings;
      nonci += !rep.is_ci;
    }
    CHECK(rings > 0);
    if (std::string(spec) == "C8" || std::string(spec) == "C4xC2") CHECK(nonci > 0);
  }
}

TEST_CASE("surveys of the small cases") {
  const auto c8 = nci2_survey(parse_group("C8"));
  CHECK(c8.complete);
  CHECK(c8.normal_nonci() >= 1);
  CHECK_FALSE(c8.noncinorm.empty());
  // Every normal non-CI row is reproduced by the holomorph search.
  for (const auto& row : c8.rows)
    if (row.normal && row.ci && !*row.ci) {
      const auto it = std::find_if(c8.noncinorm.begin(), c8.noncinorm.end(),
                                   [&](const CiReport& r) { return r.sring == row.ring; });
      CHECK(it != c8.noncinorm.end());
    }
  for (const char* spec : {"C4", "C2xC2", "C9"}) {
    const auto s = nci2_survey(parse_group(spec));
    CHECK(s.complete);
    CHECK_MESSAGE(s.normal_nonci() == 0, spec);
    CHECK(s.noncinorm.empty());
  }
}

TEST_CASE("a non-CI normal ring times ZC2 stays non-CI and normal") {
  const auto c8 = parse_group("C8");
  const auto hits = noncinorm_search(c8);
  REQUIRE_FALSE(hits.empty());
  const auto t = tensor(hits.front().sring, SRing::group_ring(parse_group("C2")));
  const auto rep = is_ci_sring(t);
  CHECK(rep.normal);
  CHECK_FALSE(rep.is_ci);
}

TEST_CASE("CI over C12 follows the Sylow factors") {
  for (const char* spec : {"C12", "C6xC2"}) {
    const auto g = parse_group(spec);
    std::size_t decomposed = 0;
    for (const auto& c : cyclotomic_ring_classes(g)) {
      const auto s = sylow_decompose(c.ring);
      if (!s.ok) continue;
      ++decomposed;
      bool all_ci = true;
      for (const auto& f : s.factors) all_ci = all_ci && is_ci_sring(f.ring.ring).is_ci;
      CHECK(is_ci_sring(c.ring).is_ci == all_ci);
    }
    CHECK(decomposed > 0);
  }
}

TEST_CASE("the CI search respects its cap") {
  Caps small;
  small.ci_group = 10;
  CHECK_THROWS_AS(is_ci_sring(testing::c4xc2_ring(), small), CapExceeded);
}

}
