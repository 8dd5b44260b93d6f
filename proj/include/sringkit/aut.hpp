#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sringkit/perm.hpp"
#include "sringkit/sring.hpp"

namespace sringkit {

// Stabilizer of e in the automorphism group of the Cayley color graph of A
// (arc (x,y) colored by the class of y x^-1). Returned as strong generators
// along a base with the exact order; elements are not enumerated.
struct StabilizerResult {
  PermGroup group;
  std::vector<Elem> base;
  std::vector<std::uint64_t> orbit_sizes;  // basic orbit lengths along base
  std::uint64_t nodes = 0;                 // search nodes spent
};

StabilizerResult aut_stabilizer(const SRing& a, const Caps& caps = Caps::defaults());

// <G_r, aut_stabilizer(A)>, order |G| * |stabilizer|.
PermGroup aut_group(const SRing& a, const Caps& caps = Caps::defaults());
PermGroup aut_group(const SRing& a, const StabilizerResult& stab);

bool is_schurian(const SRing& a, const Caps& caps = Caps::defaults());

// aut(V(K, G)). K must contain G_r.
PermGroup two_closure(const FinAbGroup& g, const PermGroup& k, const Caps& caps = Caps::defaults());

// True iff every stabilizer element is a group automorphism. Stops at the
// first generator that is not.
bool is_normal(const SRing& a, const Caps& caps = Caps::defaults());
bool is_normal(const StabilizerResult& stab, const FinAbGroup& g);

// Perm that fixes e and preserves the group law, as a GroupAut.
std::optional<GroupAut> as_group_aut(const FinAbGroup& g, const Perm& p);

// Exhaustive check that p preserves all arc colors.
bool preserves_colors(const SRing& a, const Perm& p);

}  // namespace sringkit
