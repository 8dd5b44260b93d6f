#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sringkit/group.hpp"

namespace sringkit {

using ClassId = std::uint32_t;

// First violated S-ring axiom. axiom 1: {e} is not a class; 2: some class
// has no inverse class; 3: a structure constant is not constant on a class.
// For axiom 3, `witness` holds (x_i, x_j, z1, z2): representatives of the two
// multiplied classes and two points of one class with different counts.
struct Violation {
  int axiom = 0;
  std::string detail;
  std::vector<Elem> witness;
};

class SRing {
 public:
  // The partition {e}, G \ {e}.
  static SRing trivial(const FinAbGroup& g);
  // All singletons: ZG.
  static SRing group_ring(const FinAbGroup& g);

  const FinAbGroup& group() const { return group_; }
  std::size_t rank() const { return classes_.size(); }
  // Class ids follow least members, so class 0 is {e}. Members sorted.
  const std::vector<std::vector<Elem>>& classes() const { return classes_; }
  const std::vector<Elem>& cls(ClassId c) const { return classes_[c]; }
  ClassId class_of(Elem x) const { return class_of_[x]; }
  const std::vector<ClassId>& class_map() const { return class_of_; }
  ClassId inverse_class(ClassId c) const;

  bool operator==(const SRing& o) const {
    return group_ == o.group_ && class_of_ == o.class_of_;
  }

 private:
  friend struct SRingBuilder;
  SRing(FinAbGroup g, std::vector<std::vector<Elem>> classes);
  FinAbGroup group_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<ClassId> class_of_;
};

struct VerifyResult {
  std::optional<SRing> ring;
  std::optional<Violation> violation;
  bool ok() const { return ring.has_value(); }
};

// Throws Error if `partition` is not a partition of G into non-empty sets.
VerifyResult verify_sring(const FinAbGroup& g, std::vector<std::vector<Elem>> partition);
// verify_sring or throw InvariantFailure with the violation. For internal
// constructions that must produce S-rings.
SRing make_sring(const FinAbGroup& g, std::vector<std::vector<Elem>> partition,
                 const char* what);

// Coarsest S-ring in which every seed is an A-set.
SRing wl_closure(const FinAbGroup& g, const std::vector<std::vector<Elem>>& seeds);

bool is_A_set(const SRing& a, const std::vector<Elem>& t);
bool is_A_subgroup(const SRing& a, const Subgroup& h);
// All A-subgroups, sorted.
std::vector<Subgroup> a_subgroups(const SRing& a);

// rad(T) = {g : gT = T}.
Subgroup rad(const FinAbGroup& g, const std::vector<Elem>& t);
// (<T>, rad(T)); throws Error if T is not an A-set.
std::pair<Subgroup, Subgroup> span_and_rad(const SRing& a, const std::vector<Elem>& t);

Subgroup thin_radical(const SRing& a);

// An S-ring over a section U/L, presented over section_quotient(U, L).group.
struct SectionRing {
  Quotient section;
  SRing ring;
};

// Throws Error unless U is an A-subgroup.
SectionRing restrict_to(const SRing& a, const Subgroup& u);
// Throws Error unless U and L are A-subgroups with L <= U.
SectionRing quotient(const SRing& a, const Subgroup& u, const Subgroup& l);

// Class id of X^(m). Throws Error unless gcd(m, |G|) = 1.
ClassId rational_conjugate(const SRing& a, ClassId x, std::int64_t m);

// |X ∩ Hx| for x in X, checked constant over X.
std::size_t intersection_number(const SRing& a, ClassId x, const Subgroup& h);

// Throws Error unless |G| is a power of p.
bool is_p_sring(const SRing& a, std::uint64_t p);

enum class Order { equal, less, greater, incomparable };
// less: every class of A is a union of classes of B (A is the coarser ring).
Order compare(const SRing& a, const SRing& b);
const char* to_string(Order o);

}  // namespace sringkit
