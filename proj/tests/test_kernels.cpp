#include <random>

#include "doctest.h"
#include "sringkit/construct.hpp"
#include "sringkit/kernels.hpp"
#include "sringkit/sring.hpp"

using namespace sringkit;
namespace k = sringkit::kernels;

namespace {

std::vector<ClassId> random_map(std::size_t n, std::size_t classes, std::mt19937_64& rng) {
  std::vector<ClassId> m(n, 0);
  for (std::size_t x = 1; x < n; ++x) m[x] = 1 + static_cast<ClassId>(rng() % classes);
  k::canonical_classes(m);
  return m;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"C16xC4", "C2^6", "C9xC3", "C5xC5"}) {
    const auto g = parse_group(spec);
    for (int trial = 0; trial < 6; ++trial) {
      const auto m = random_map(g.order(), 2 + trial, rng);
      const auto cls = k::classes_from_map(m);
      CHECK(k::wl_signatures(g, m, cls, k::Exec::serial) == k::wl_signatures(g, m, cls, k::Exec::parallel));
      const auto vs = k::check_structure_constants(g, m, cls, k::Exec::serial);
      const auto vp = k::check_structure_constants(g, m, cls, k::Exec::parallel);
      REQUIRE(vs.has_value() == vp.has_value());
      if (vs) CHECK(vs->witness == vp->witness);
      CHECK(k::refine_hashed(g, m, k::Exec::serial) == k::refine_hashed(g, m, k::Exec::parallel));
    }
  }
}

TEST_CASE("hashed refinement matches exact refinement") {
  std::mt19937_64 rng(11);
  for (const char* spec : {"C8", "C4xC2", "C3xC3", "C2^4", "C12"}) {
    const auto g = parse_group(spec);
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = random_map(g.order(), 1 + trial % 4, rng);
      CHECK(k::refine_hashed(g, m, k::Exec::serial) == k::refine_exact(g, m));
    }
  }
}

TEST_CASE("a refined partition is an S-ring") {
  std::mt19937_64 rng(3);
  const auto g = parse_group("C4xC4");
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = k::refine_hashed(g, random_map(g.order(), 3, rng), k::Exec::parallel);
    CHECK(verify_sring(g, k::classes_from_map(m)).ok());
    CHECK_FALSE(k::check_structure_constants(g, m, k::classes_from_map(m), k::Exec::serial).has_value());
  }
}

TEST_CASE("canonical class numbering") {
  std::vector<ClassId> m{5, 2, 2, 5, 9};
  CHECK(k::canonical_classes(m) == 3);
  CHECK(m == std::vector<ClassId>{0, 1, 1, 0, 2});
}

}
