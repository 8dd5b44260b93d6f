#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sringkit/config.hpp"
#include "sringkit/group.hpp"

namespace sringkit {

using BigOrder = boost::multiprecision::cpp_int;

// Permutation of 0..n-1 as a dense image array. Composition reads left to
// right: (p * q)[x] = q[p[x]].
class Perm {
 public:
  Perm() = default;
  // Throws Error unless `images` is a permutation.
  explicit Perm(std::vector<Elem> images);
  static Perm identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  Elem operator[](Elem x) const { return images_[x]; }
  const std::vector<Elem>& images() const { return images_; }

  Perm operator*(const Perm& next) const;
  Perm inverse() const;
  Perm pow(std::int64_t m) const;
  // k^-1 * this * k
  Perm conjugate_by(const Perm& k) const;
  bool is_identity() const;
  bool fixed_point_free() const;
  std::uint64_t order() const;

  bool operator==(const Perm& o) const = default;
  auto operator<=>(const Perm& o) const = default;

 private:
  struct Unchecked {};
  Perm(std::vector<Elem> images, Unchecked) : images_(std::move(images)) {}
  std::vector<Elem> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// Permutation group by generators with a known order. Groups built by
// closure carry the full sorted element list; groups from the automorphism
// search carry generators and an exact order only.
class PermGroup {
 public:
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> gens,
                                 std::vector<Perm> elements);
  static PermGroup from_generators(std::size_t degree, std::vector<Perm> gens, BigOrder order);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigOrder& order() const { return order_; }
  // order() as a machine integer; throws CapExceeded if it does not fit.
  std::uint64_t small_order() const;

  bool is_enumerated() const { return !elements_.empty(); }
  // Sorted lexicographically. Throws Error if not enumerated.
  const std::vector<Perm>& elements() const;
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  // *this when already enumerated, otherwise the closure of the generators.
  PermGroup enumerated(const Caps& caps = Caps::defaults()) const;

  bool is_abelian() const;
  // Element sets equal (both enumerated).
  bool same_elements(const PermGroup& o) const { return elements() == o.elements(); }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  BigOrder order_ = 1;
  std::vector<Perm> elements_;
};

Perm translation(const FinAbGroup& g, Elem t);
Perm aut_perm(const GroupAut& a);
PermGroup right_regular(const FinAbGroup& g);

// Element of Hol(G) = G_r x| aut(G) acting as x -> x^aut * translation.
struct HolElement {
  Elem translation;
  GroupAut aut;

  // Apply *this, then `next`.
  HolElement then(const HolElement& next) const;
  bool operator==(const HolElement& o) const = default;
};

Perm hol_to_perm(const HolElement& h);
// Inverse of hol_to_perm for permutations that lie in Hol(G); nullopt otherwise.
std::optional<HolElement> perm_to_hol(const FinAbGroup& g, const Perm& p);
// Enumerated Hol(G); needs |G| * |aut(G)| <= caps.closure.
PermGroup holomorph(const FinAbGroup& g, const Caps& caps = Caps::defaults());

// Dimino closure; deterministic sorted element list.
PermGroup group_closure(std::size_t degree, std::vector<Perm> gens,
                        const Caps& caps = Caps::defaults());

// Orbit partition via union-find over generator images; classes sorted by
// least member.
std::vector<std::vector<Elem>> orbits(const PermGroup& k);
std::vector<std::vector<Elem>> orbits(std::size_t degree, const std::vector<Perm>& gens);
std::vector<Elem> orbit_of(const PermGroup& k, Elem x);

PermGroup point_stabilizer(const PermGroup& k, Elem x, const Caps& caps = Caps::defaults());

bool is_regular_iso(const PermGroup& r, const FinAbGroup& g);

// Some k in K with A^k = B, or nullopt. A and B must be enumerated.
std::optional<Perm> are_conjugate_subgroups(const PermGroup& k, const PermGroup& a,
                                            const PermGroup& b);

}  // namespace sringkit
