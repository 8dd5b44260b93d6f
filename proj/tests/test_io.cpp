#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "sringkit/errors.hpp"
#include "sringkit/io.hpp"
#include "sringkit/repro.hpp"

using namespace sringkit;

TEST_SUITE("io") {

TEST_CASE("S-ring JSON round trip") {
  const auto a = testing::c4xc2_ring();
  const auto j = io::to_json(a, std::string("sigma"));
  CHECK(j["group"] == "C4xC2");
  CHECK(j["name"] == "sigma");
  CHECK(j["classes"].size() == 6);
  CHECK(io::sring_from_json(j) == a);
  auto bad = j;
  bad["classes"] = io::json::parse("[[0],[1,2,3,4,5,6],[7]]");
  CHECK_THROWS_AS(io::sring_from_json(bad), Error);
  CHECK_THROWS_AS(io::sring_from_json(io::json::object()), Error);
}

TEST_CASE("formatting") {
  const auto a = testing::c4xc2_ring();
  CHECK(io::format_ring(a) == "{(0,0)} {(0,1)} {(2,0)} {(2,1)} {(1,0),(1,1)} {(3,0),(3,1)}");
  const auto& g = a.group();
  const auto sigma = GroupAut::from_images(g, {testing::el(g, {1, 1}), testing::el(g, {0, 1})});
  CHECK(io::format_aut(sigma) == "[(1,0)->(1,1) (0,1)->(0,1)]");
}

TEST_CASE("caps from a config stream") {
  Caps c;
  std::istringstream in("# limits\nsearch_nodes = 42\nci_group=7\n\n");
  c.load(in);
  CHECK(c.search_nodes == 42);
  CHECK(c.ci_group == 7);
  std::istringstream bad("nodes = 1\n");
  CHECK_THROWS_AS(c.load(bad), Error);
}

TEST_CASE("repro scripts") {
  for (const auto& s : repro_scripts()) {
    const auto cert = run_repro(s);
    CHECK_MESSAGE(cert.pass(), s.name);
    CHECK(cert.data["verdict"] == "normal non-CI S-ring");
  }
  CHECK(find_script("nope") == nullptr);
}

}
