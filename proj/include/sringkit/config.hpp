#pragma once

#include <cstdint>
#include <istream>
#include <string>

namespace sringkit {

// Size limits for every enumeration in the library. Exceeding one raises
// CapExceeded.
struct Caps {
  std::uint64_t group_order = 4096;      // make_group
  std::uint64_t subgroup_lattice = 256;  // all_subgroups
  std::uint64_t aut_elements = 100000;   // aut_elements
  std::uint64_t closure = 1000000;       // group_closure / enumeration
  std::uint64_t aut_search_order = 128;  // aut_stabilizer vertices
  std::uint64_t search_nodes = 10000000; // aut_stabilizer node budget
  std::uint64_t aut_lattice = 2000;      // |aut(G)| for subgroup-lattice walks
  std::uint64_t ci_group = 20000;        // |aut(A)| for regular-subgroup search

  static const Caps& defaults();

  // Applies `key=value` lines; '#' starts a comment. Unknown keys throw.
  void load(std::istream& in);
  void set(const std::string& key, std::uint64_t value);
};

}  // namespace sringkit
