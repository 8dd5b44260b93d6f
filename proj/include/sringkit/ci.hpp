#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sringkit/aut.hpp"
#include "sringkit/lattice.hpp"
#include "sringkit/perm.hpp"
#include "sringkit/sring.hpp"

namespace sringkit {

struct RegularClass {
  PermGroup rep;           // enumerated
  std::size_t size = 0;    // number of K-conjugates
  bool contains_gr = false;
};

// G-regular subgroups of an enumerated K, up to K-conjugacy. Classes are
// sorted with the class of G_r (if present) first, then by elements.
std::vector<RegularClass> regular_subgroup_classes(const PermGroup& k, const FinAbGroup& g);
// Every G-regular subgroup of K, deduplicated, sorted by elements.
std::vector<PermGroup> regular_subgroups(const PermGroup& k, const FinAbGroup& g);
// One conjugacy class of G-regular subgroups, and it contains G_r.
bool is_transjugate(const PermGroup& k, const FinAbGroup& g);

struct CiReport {
  SRing sring;
  bool schurian = false;
  bool normal = false;
  BigOrder aut_order;
  std::vector<RegularClass> regular_classes;
  std::size_t regular_total = 0;
  bool is_ci = false;
  std::optional<PermGroup> witness;  // a regular subgroup not conjugate to G_r
};

// Throws Error for a non-schurian ring and CapExceeded when |aut(A)| is
// above caps.ci_group.
CiReport is_ci_sring(const SRing& a, const Caps& caps = Caps::defaults());
CiReport is_ci_sring(const SRing& a, const StabilizerResult& stab, const Caps& caps);

// Normal non-CI rings V(<G_r, R>, G) over regular R != G_r in Hol(G),
// deduplicated by ring and sorted by (rank, class map).
std::vector<CiReport> noncinorm_search(const FinAbGroup& g, const Caps& caps = Caps::defaults());

struct SurveyRow {
  std::vector<GroupAut> m_gens;
  std::size_t m_order = 0;
  std::size_t m_conjugates = 0;
  SRing ring;
  bool two_closed = false;
  bool normal = false;
  std::optional<bool> ci;     // computed for normal rows only
  std::optional<PermGroup> witness;
  std::string skipped;        // non-empty if a cap stopped this row
};

struct Survey {
  FinAbGroup group;
  std::size_t aut_order = 0;
  std::vector<SurveyRow> rows;
  std::vector<CiReport> noncinorm;
  bool complete = true;
  std::string incomplete_reason;
  std::size_t normal_nonci() const;
};

// cyc(M, G) for every M <= aut(G) up to conjugacy. Cap errors on a row are
// recorded in the row and mark the survey incomplete.
Survey nci2_survey(const FinAbGroup& g, const Caps& caps = Caps::defaults());

// Holomorph pairs for a subgroup of Hol(G) (translation, automorphism).
std::vector<HolElement> hol_generators(const FinAbGroup& g, const PermGroup& r);

}  // namespace sringkit
