#pragma once

#include <initializer_list>
#include <vector>

#include "sringkit/group.hpp"
#include "sringkit/sring.hpp"

namespace testing {

inline sringkit::Elem el(const sringkit::FinAbGroup& g, std::initializer_list<std::int64_t> r) {
  std::vector<std::int64_t> v(r);
  return g.encode(v);
}

inline std::vector<sringkit::Elem> els(const sringkit::FinAbGroup& g,
                                       std::initializer_list<std::initializer_list<std::int64_t>> rs) {
  std::vector<sringkit::Elem> out;
  for (auto r : rs) out.push_back(el(g, r));
  std::sort(out.begin(), out.end());
  return out;
}

// C4xC2 = <a> x <b> and the ring with classes {e},{b},{a^2},{a^2 b},{a,ab},{a^3,a^3 b}.
inline sringkit::SRing c4xc2_ring() {
  const auto g = sringkit::parse_group("C4xC2");
  return *sringkit::verify_sring(g, {{el(g, {0, 0})},
                                     {el(g, {0, 1})},
                                     {el(g, {2, 0})},
                                     {el(g, {2, 1})},
                                     els(g, {{1, 0}, {1, 1}}),
                                     els(g, {{3, 0}, {3, 1}})})
              .ring;
}

}  // namespace testing
