#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sringkit/config.hpp"

namespace sringkit {

using Residues = std::vector<std::int64_t>;

// x -> phi(x) * t, both given as residue tuples.
struct HolSpec {
  Residues translation;
  std::vector<Residues> aut_images;
};

// Parametric automorphisms: for a parameter tuple (t_1..t_k) in {0,1}^k,
// generator i maps to a_i * prod a_j^{t_p} over the terms (p, i, j).
struct ParamTerm {
  std::size_t param;
  std::size_t gen;
  std::size_t target;
};

struct ReproScript {
  std::string name;
  std::string group;
  // M is generated by these automorphisms (images of the generators) plus
  // every automorphism of the parametric family, if any.
  std::vector<std::vector<Residues>> m_generators;
  std::size_t params = 0;
  std::vector<ParamTerm> param_terms;
  // Explicit R; when empty the certificate searches aut(A) for a regular
  // subgroup outside the class of G_r.
  std::vector<HolSpec> r_generators;
  std::optional<std::uint64_t> r_first_order;
  std::vector<Residues> r_first_orbit;  // orbit of e under <first R generator>
  std::optional<std::size_t> expect_m_order;
  std::optional<std::size_t> expect_classes;
  std::uint64_t expect_aut_order = 0;
  std::vector<std::string> notes;
};

const std::vector<ReproScript>& repro_scripts();
const ReproScript* find_script(const std::string& name);

struct ReproCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Certificate {
  std::string name;
  std::vector<ReproCheck> checks;
  nlohmann::json data;
  bool pass() const;
};

// Runs the script; a failed step is recorded and the remaining steps that
// depend on it are skipped as failed.
Certificate run_repro(const ReproScript& s, const Caps& caps = Caps::defaults());

}  // namespace sringkit
