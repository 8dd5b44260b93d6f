#pragma once

#include <cstdint>
#include <vector>

#include "sringkit/group.hpp"

namespace sringkit {

// aut(G) as an abstract group with a multiplication table, for walking its
// subgroup lattice.
class AutTable {
 public:
  // Throws CapExceeded if |aut(G)| > caps.aut_lattice.
  static AutTable build(const FinAbGroup& g, const Caps& caps = Caps::defaults());

  const FinAbGroup& group() const { return group_; }
  std::size_t size() const { return auts_.size(); }
  const GroupAut& at(std::uint32_t i) const { return auts_[i]; }
  // Index of "apply i, then j".
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return table_[i * size() + j]; }
  std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }
  std::uint32_t identity() const { return id_; }
  std::uint32_t index_of(const GroupAut& a) const;

 private:
  FinAbGroup group_;
  std::vector<GroupAut> auts_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
  std::uint32_t id_ = 0;
};

struct AutSubgroup {
  std::vector<std::uint32_t> elements;    // sorted indices into the AutTable
  std::vector<std::uint32_t> generators;  // generating set used to reach it
  std::size_t conjugates = 1;             // size of its aut(G)-conjugacy class
};

// One representative per aut(G)-conjugacy class of subgroups, sorted by
// (order, elements).
std::vector<AutSubgroup> aut_subgroup_classes(const AutTable& t);

// <gens> inside the table group.
std::vector<std::uint32_t> table_closure(const AutTable& t, const std::vector<std::uint32_t>& gens);

}  // namespace sringkit
