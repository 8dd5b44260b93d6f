#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sringkit/ci.hpp"
#include "sringkit/lemmas.hpp"
#include "sringkit/perm.hpp"
#include "sringkit/sring.hpp"

namespace sringkit::io {

using nlohmann::json;

// {group, factors, classes, name?}; classes sorted by (size, least member).
json to_json(const SRing& a, const std::optional<std::string>& name = std::nullopt);
// Accepts the format above; the partition is verified, Error on a violation.
SRing sring_from_json(const json& j, const Caps& caps = Caps::defaults());

json to_json(const Perm& p);
// {domain, generators, order}
json to_json(const PermGroup& k);
// {translation, aut}: the translation as residues, the automorphism as the
// residue tuples of the generator images.
json to_json(const HolElement& h);
json to_json(const CiReport& r);
json to_json(const Violation& v);
json to_json(const LemmaReport& r);

std::string format_class(const FinAbGroup& g, const std::vector<Elem>& c);
std::string format_aut(const GroupAut& a);
std::string format_ring(const SRing& a);

// One JSON object per survey row, then a summary object.
std::vector<std::string> survey_json_lines(const Survey& s);
std::string survey_table(const Survey& s);
std::string lemma_table(const LemmaReport& r);

}  // namespace sringkit::io
