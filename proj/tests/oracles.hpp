#pragma once

// Brute-force references for small groups. They use only the group law of
// FinAbGroup and plain loops, never the library's search code.

#include <cstdint>
#include <vector>

#include "sringkit/group.hpp"

namespace oracle {

using sringkit::Elem;
using sringkit::FinAbGroup;
using Partition = std::vector<std::vector<Elem>>;

// Singleton {e}, inverse-closed classes, and every product count
// |{(x, y) in X x Y : xy = z}| constant over z in each class Z.
bool is_sring(const FinAbGroup& g, const Partition& p);

// Every partition of G with {e} as a class; classes sorted by least member.
std::vector<Partition> partitions_with_e(const FinAbGroup& g);

// Subgroups as sorted member lists, closure of every generator subset.
std::vector<std::vector<Elem>> subgroups(const FinAbGroup& g);

// Bijections fixing e that respect the group law, as image tables.
std::vector<std::vector<Elem>> automorphisms(const FinAbGroup& g);

// Same set, by choosing generator images of the right orders and keeping
// the bijective maps. Fine for |G|^rank up to a few thousand.
std::vector<std::vector<Elem>> automorphisms_by_generators(const FinAbGroup& g);

// Every bijection of G fixing e that preserves arc colors class(y x^-1).
std::vector<std::vector<Elem>> color_stabilizer(const FinAbGroup& g, const Partition& p);

// iso(A) = aut(A) aut(G), checked on bijections fixing e. Needs |G| <= 8.
bool is_ci_by_definition(const FinAbGroup& g, const Partition& p);

// The image of A under the bijection f is a Cayley S-ring over G:
// every image relation is translation invariant.
bool image_is_cayley(const FinAbGroup& g, const Partition& p, const std::vector<Elem>& f);

// Some automorphism of G maps each class X onto the image f(X)
// (f(e) = e assumed).
bool image_matched_by_group_aut(const FinAbGroup& g, const Partition& p, const std::vector<Elem>& f,
                                const std::vector<std::vector<Elem>>& auts);

// Partition with classes sorted internally and by least member.
Partition canonical(Partition p);

}  // namespace oracle
