#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sringkit/bitset.hpp"
#include "sringkit/config.hpp"

namespace sringkit {

// Element of a FinAbGroup: a dense mixed-radix index, first factor most
// significant. Index 0 is the identity.
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = static_cast<Elem>(-1);

// Finite abelian group C_{d1} x ... x C_{dk}, written multiplicatively in the
// API (mul/inv/pow) and stored as residue tuples. Cheap to copy: the digit
// tables are shared and immutable.
class FinAbGroup {
 public:
  // The trivial group (no factors, order 1).
  FinAbGroup();

  // Every factor must be >= 2 and the order must stay within caps.group_order.
  static FinAbGroup make(std::vector<std::uint32_t> factors,
                         const Caps& caps = Caps::defaults());

  const std::vector<std::uint32_t>& factors() const;
  std::size_t order() const;
  std::size_t rank() const { return factors().size(); }
  std::uint64_t exponent() const;
  // "C4xC2"; the trivial group is "C1".
  std::string name() const;

  Elem identity() const { return 0; }
  Elem generator(std::size_t i) const;
  std::span<const std::uint32_t> digits(Elem x) const;
  Elem encode(std::span<const std::int64_t> residues) const;

  Elem mul(Elem g, Elem h) const;
  Elem inv(Elem g) const;
  Elem div(Elem g, Elem h) const { return mul(g, inv(h)); }
  Elem pow(Elem g, std::int64_t m) const;
  std::uint64_t elem_order(Elem g) const;

  // Throws Error if g is not an element index.
  void check(Elem g) const;
  std::string format(Elem g) const;

  bool operator==(const FinAbGroup& o) const { return factors() == o.factors(); }

  struct Impl;

 private:
  explicit FinAbGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Parses `C4xC2`, `c4xc2`, `4,2` or `C2^6`.
std::vector<std::uint32_t> parse_group_spec(const std::string& spec);
FinAbGroup parse_group(const std::string& spec, const Caps& caps = Caps::defaults());

class Subgroup {
 public:
  // Validates closure; throws Error otherwise.
  static Subgroup from_members(const FinAbGroup& owner, std::vector<Elem> members);
  static Subgroup trivial(const FinAbGroup& owner);
  static Subgroup whole(const FinAbGroup& owner);

  const FinAbGroup& owner() const { return owner_; }
  const std::vector<Elem>& members() const { return members_; }
  const Bitset& mask() const { return mask_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem g) const { return g < mask_.size() && mask_.test(g); }
  bool is_subgroup_of(const Subgroup& o) const { return mask_.subset_of(o.mask_); }

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  // (size, member list)
  bool operator<(const Subgroup& o) const;

 private:
  friend Subgroup join_cyclic(const Subgroup& h, Elem x);
  Subgroup(FinAbGroup owner, std::vector<Elem> members, Bitset mask);
  FinAbGroup owner_;
  std::vector<Elem> members_;
  Bitset mask_;
};

Subgroup subgroup_generated(const FinAbGroup& g, std::span<const Elem> gens);
// H * <x>; H must be a subgroup of g's owner.
Subgroup join_cyclic(const Subgroup& h, Elem x);
std::vector<Subgroup> all_subgroups(const FinAbGroup& g, const Caps& caps = Caps::defaults());
Subgroup sylow_subgroup(const FinAbGroup& g, std::uint64_t p);

bool is_prime(std::uint64_t p);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Automorphism given by the images of the canonical generators.
class GroupAut {
 public:
  static GroupAut from_images(const FinAbGroup& owner, std::vector<Elem> images);
  static GroupAut identity(const FinAbGroup& owner);
  // x -> x^m; m must be coprime to the exponent.
  static GroupAut power_map(const FinAbGroup& owner, std::int64_t m);

  const FinAbGroup& owner() const { return owner_; }
  const std::vector<Elem>& images() const { return images_; }
  const std::vector<Elem>& table() const { return table_; }
  Elem operator()(Elem x) const { return table_[x]; }

  // Apply *this, then `next`.
  GroupAut then(const GroupAut& next) const;
  GroupAut inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;

  bool operator==(const GroupAut& o) const { return table_ == o.table_; }
  bool operator<(const GroupAut& o) const { return table_ < o.table_; }

 private:
  GroupAut(FinAbGroup owner, std::vector<Elem> images, std::vector<Elem> table);
  FinAbGroup owner_;
  std::vector<Elem> images_;
  std::vector<Elem> table_;
};

// Complete, sorted enumeration of aut(G). Cyclic groups use the unit group
// mod n; otherwise a backtracking search over generator images.
std::vector<GroupAut> aut_elements(const FinAbGroup& g, const Caps& caps = Caps::defaults());

bool is_characteristic(const Subgroup& h, std::span<const GroupAut> auts);

// U/L with an explicit presentation as a FinAbGroup (invariant factors,
// largest first). When L = {e} and U = G the owner itself is reused.
struct Quotient {
  Subgroup upper;
  Subgroup lower;
  FinAbGroup group;
  std::vector<Elem> projection;  // owner element -> quotient element (kNoElem outside U)
  std::vector<Elem> lift;        // quotient element -> least member of its coset
  std::vector<std::uint32_t> coset_of;  // owner element -> coset number by least member

  std::size_t num_cosets() const { return lift.size(); }
};

Quotient section_quotient(const Subgroup& upper, const Subgroup& lower);

}  // namespace sringkit
