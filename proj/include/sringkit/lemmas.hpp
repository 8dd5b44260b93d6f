#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sringkit/sring.hpp"

namespace sringkit {

struct LemmaTally {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;  // cap hit, property not evaluated
  std::vector<std::string> failures;  // first few witnesses
  void pass() { ++checked, ++passed; }
  void fail(std::string why);
};

struct LemmaReport {
  std::vector<std::string> groups;
  std::size_t rings = 0;
  std::size_t sampled_groups = 0;  // groups where aut(G) was sampled, not walked
  std::map<std::string, LemmaTally> tallies;

  bool pass() const;
  void merge(const LemmaReport& o);
};

// Cyclotomic rings of G: one per aut(G)-conjugacy class of rings when
// aut(G) can be listed within caps.aut_elements, otherwise cyc(M) for
// `samples` random subgroups M with one or two generators drawn from `seed`.
// Duplicates by ring are dropped. force_sample skips the walk.
std::vector<SRing> cyclotomic_rings(const FinAbGroup& g, std::uint64_t seed, const Caps& caps,
                                    bool* sampled = nullptr, std::size_t samples = 24,
                                    bool force_sample = false);

// Single-ring properties: intersection0, burn, thincoset, groupring,
// thincenter, cyclchar, wrnorm, wrnonnorm, proj, psring1..4, interrad
// (and interrad_v_proper, the same bound for rings with V < G).
void check_ring_lemmas(const SRing& a, const Caps& caps, LemmaReport& out);

// Tensor-pair properties: auttens, tensnorm, tensci (with its halves
// tensci_only_if and tensci_if_coprime tallied apart).
void check_tensor_lemmas(const SRing& a1, const SRing& a2, const Caps& caps, LemmaReport& out);
// check_tensor_lemmas over the listed (left, right) index pairs, in parallel,
// merged in list order.
LemmaReport tensor_lemmas_over(const std::vector<SRing>& left, const std::vector<SRing>& right,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const Caps& caps);

// For regular R != G_r in Hol(G): G_r ∩ R equals V_r of V(<G_r, R>, G).
void check_intersection_lemma(const FinAbGroup& g, const Caps& caps, LemmaReport& out);

struct LemmaOptions {
  bool sample = false;         // sampled rings even when the walk fits in caps
  std::size_t samples = 24;
  bool tensor_pairs = true;    // tensor pairs over a splitting of G
  std::size_t max_pairs = 64;
};

LemmaReport run_lemmas(const FinAbGroup& g, std::uint64_t seed, const Caps& caps = Caps::defaults(),
                       const LemmaOptions& opts = {});

// Tensor-pair properties over every G1 x G2 with |G1|, |G2| >= 2 and
// |G1 x G2| <= max_order (unordered), all ring pairs.
LemmaReport run_tensor_suite(std::uint32_t max_order, std::uint64_t seed, const Caps& caps = Caps::defaults());

// Factor lists of every abelian group of order n, as elementary divisors
// (prime powers, grouped by prime, non-increasing within a prime).
std::vector<std::vector<std::uint32_t>> abelian_groups_of_order(std::uint32_t n);

}  // namespace sringkit
