#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sringkit/perm.hpp"
#include "sringkit/sring.hpp"

namespace sringkit {

// Classes are the orbits of <gens> on G.
SRing cyclotomic(const FinAbGroup& g, const std::vector<GroupAut>& gens);

// Every cyclotomic ring over G up to aut(G)-conjugacy, one representative
// per class with generators of a group M giving it. Walks the ring lattice
// by joining each representative with single automorphisms of prime-power
// order. Needs the full aut(G) (caps.aut_elements).
struct CyclotomicClass {
  SRing ring;
  std::vector<GroupAut> gens;
};
std::vector<CyclotomicClass> cyclotomic_ring_classes(const FinAbGroup& g, const Caps& caps = Caps::defaults());

// Classes are the orbits of K_e. Throws Error unless K contains G_r.
SRing transitivity_module(const FinAbGroup& g, const PermGroup& k,
                          const Caps& caps = Caps::defaults());
// Same, given generators of K_e directly (no enumeration).
SRing orbit_ring(const FinAbGroup& g, const std::vector<Perm>& stabilizer_gens);

// Ring over the group with factors of G1 followed by those of G2; element
// (x1, x2) has index x1 * |G2| + x2.
SRing tensor(const SRing& a1, const SRing& a2);
FinAbGroup direct_product(const FinAbGroup& g1, const FinAbGroup& g2);

// A_U lives over section_quotient(U, {e}).group, A_Q over
// section_quotient(G, L).group. Throws Error if quotient(A_U, U/L) differs
// from the restriction of A_Q to U/L.
SRing gen_wreath(const Subgroup& u, const Subgroup& l, const SRing& a_u, const SRing& a_q);

struct GwreathWitness {
  Subgroup u;
  Subgroup l;
  bool nontrivial = false;
};

// Every pair of A-subgroups L <= U with L <= rad(X) for each class X
// outside U. Sorted by (|U|, |L|, members).
std::vector<GwreathWitness> detect_gwreath(const SRing& a);

struct SylowFactor {
  std::uint64_t p;
  SectionRing ring;
};

struct SylowResult {
  bool ok = false;
  std::string failure;
  std::vector<SylowFactor> factors;
};

// Checks that every Sylow subgroup is an A-subgroup carrying a p-S-ring and
// that each class is the product of its Sylow projections.
SylowResult sylow_decompose(const SRing& a);

}  // namespace sringkit
