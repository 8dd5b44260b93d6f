#include "sringkit/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "sringkit/errors.hpp"

namespace sringkit::io {

namespace {

json residues(const FinAbGroup& g, Elem x) {
  const auto d = g.digits(x);
  return json(std::vector<std::uint32_t>(d.begin(), d.end()));
}

std::vector<std::vector<Elem>> sorted_classes(const SRing& a) {
  auto cs = a.classes();
  std::stable_sort(cs.begin(), cs.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front() < y.front();
  });
  return cs;
}

std::string order_string(const BigOrder& o) { return o.str(); }

}  // namespace

json to_json(const SRing& a, const std::optional<std::string>& name) {
  json j;
  j["group"] = a.group().name();
  j["factors"] = a.group().factors();
  j["classes"] = sorted_classes(a);
  if (name) j["name"] = *name;
  return j;
}

SRing sring_from_json(const json& j, const Caps& caps) {
  if (!j.is_object() || !j.contains("classes")) throw Error("S-ring JSON needs a 'classes' array");
  FinAbGroup g;
  if (j.contains("factors")) g = FinAbGroup::make(j.at("factors").get<std::vector<std::uint32_t>>(), caps);
  else if (j.contains("group")) g = parse_group(j.at("group").get<std::string>(), caps);
  else throw Error("S-ring JSON needs 'group' or 'factors'");
  auto classes = j.at("classes").get<std::vector<std::vector<Elem>>>();
  auto r = verify_sring(g, std::move(classes));
  if (!r.ok()) throw Error("not an S-ring: axiom " + std::to_string(r.violation->axiom) + ": " + r.violation->detail);
  return *r.ring;
}

json to_json(const Perm& p) { return json(p.images()); }

json to_json(const PermGroup& k) {
  json gens = json::array();
  for (const auto& p : k.generators()) gens.push_back(to_json(p));
  return {{"domain", k.degree()}, {"generators", gens}, {"order", order_string(k.order())}};
}

json to_json(const HolElement& h) {
  const FinAbGroup& g = h.aut.owner();
  json imgs = json::array();
  for (Elem x : h.aut.images()) imgs.push_back(residues(g, x));
  return {{"translation", residues(g, h.translation)}, {"aut", imgs}};
}

json to_json(const CiReport& r) {
  json j;
  j["sring"] = to_json(r.sring);
  j["schurian"] = r.schurian;
  j["normal"] = r.normal;
  j["aut_order"] = order_string(r.aut_order);
  json cls = json::array();
  for (const auto& c : r.regular_classes)
    cls.push_back({{"generators", to_json(c.rep)["generators"]}, {"size", c.size}, {"contains_gr", c.contains_gr}});
  j["regular_classes"] = cls;
  j["regular_total"] = r.regular_total;
  j["is_ci"] = r.is_ci;
  if (r.witness) {
    json w = to_json(*r.witness);
    json hol = json::array();
    bool all = true;
    for (const auto& p : r.witness->generators()) {
      auto h = perm_to_hol(r.sring.group(), p);
      if (!h) {
        all = false;
        break;
      }
      hol.push_back(to_json(*h));
    }
    if (all) w["holomorph"] = hol;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const Violation& v) {
  return {{"axiom", v.axiom}, {"detail", v.detail}, {"witness", v.witness}};
}

json to_json(const LemmaReport& r) {
  json t = json::object();
  for (const auto& [name, x] : r.tallies)
    t[name] = {{"checked", x.checked}, {"passed", x.passed}, {"skipped", x.skipped}, {"failures", x.failures}};
  return {{"groups", r.groups},
          {"rings", r.rings},
          {"sampled_groups", r.sampled_groups},
          {"lemmas", t},
          {"pass", r.pass()}};
}

std::string format_class(const FinAbGroup& g, const std::vector<Elem>& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + g.format(c[i]);
  return s + "}";
}

std::string format_aut(const GroupAut& a) {
  const FinAbGroup& g = a.owner();
  std::string s = "[";
  for (std::size_t i = 0; i < a.images().size(); ++i)
    s += (i ? " " : "") + g.format(g.generator(i)) + "->" + g.format(a.images()[i]);
  return s + "]";
}

std::string format_ring(const SRing& a) {
  std::string s;
  for (const auto& c : sorted_classes(a)) s += (s.empty() ? "" : " ") + format_class(a.group(), c);
  return s;
}

std::vector<std::string> survey_json_lines(const Survey& s) {
  std::vector<std::string> out;
  for (const auto& r : s.rows) {
    json j;
    json gens = json::array();
    for (const auto& m : r.m_gens) {
      json imgs = json::array();
      for (Elem x : m.images()) imgs.push_back(residues(s.group, x));
      gens.push_back(imgs);
    }
    j["m_generators"] = gens;
    j["m_order"] = r.m_order;
    j["m_conjugates"] = r.m_conjugates;
    j["sring"] = to_json(r.ring);
    j["schurian"] = true;
    j["two_closed"] = r.two_closed;
    j["normal"] = r.normal;
    j["ci"] = r.ci ? json(*r.ci) : json(nullptr);
    j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    if (!r.skipped.empty()) j["skipped"] = r.skipped;
    out.push_back(j.dump());
  }
  json w = json::array();
  for (const auto& c : s.noncinorm) w.push_back(to_json(c));
  json summary{{"group", s.group.name()},
               {"aut_order", s.aut_order},
               {"rows", s.rows.size()},
               {"normal_nonci", s.normal_nonci()},
               {"noncinorm", w},
               {"complete", s.complete}};
  if (!s.complete) summary["incomplete_reason"] = s.incomplete_reason;
  out.push_back(summary.dump());
  return out;
}

std::string survey_table(const Survey& s) {
  std::ostringstream os;
  os << "group " << s.group.name() << ", |aut(G)| = " << s.aut_order << ", " << s.rows.size()
     << " subgroups M up to conjugacy\n";
  os << std::left << std::setw(5) << "#" << std::setw(6) << "|M|" << std::setw(6) << "conj" << std::setw(6)
     << "rank" << std::setw(8) << "2-cl" << std::setw(8) << "normal" << std::setw(6) << "CI"
     << "generators of M\n";
  std::size_t i = 0;
  for (const auto& r : s.rows) {
    std::string gens;
    for (const auto& m : r.m_gens) gens += (gens.empty() ? "" : " ") + format_aut(m);
    if (gens.empty()) gens = "1";
    const std::string ci = !r.skipped.empty() ? "skip" : r.ci ? (*r.ci ? "yes" : "NO") : "-";
    os << std::setw(5) << i++ << std::setw(6) << r.m_order << std::setw(6) << r.m_conjugates << std::setw(6)
       << r.ring.rank() << std::setw(8) << (r.two_closed ? "yes" : "no") << std::setw(8)
       << (r.normal ? "yes" : "no") << std::setw(6) << ci << gens << "\n";
  }
  os << "holomorph search: " << s.noncinorm.size() << " normal non-CI ring(s)\n";
  for (const auto& c : s.noncinorm) os << "  " << format_ring(c.sring) << "\n";
  return os.str();
}

std::string lemma_table(const LemmaReport& r) {
  std::ostringstream os;
  os << r.groups.size() << " group(s), " << r.rings << " ring(s)";
  if (r.sampled_groups) os << ", " << r.sampled_groups << " with sampled aut(G)";
  os << "\n";
  for (const auto& [name, t] : r.tallies) {
    os << std::left << std::setw(14) << name << std::right << std::setw(8) << t.passed << " /" << std::setw(8)
       << t.checked;
    if (t.skipped) os << "  (" << t.skipped << " skipped)";
    os << (t.checked == t.passed ? "" : "  FAIL") << "\n";
    for (const auto& f : t.failures) os << "    " << f << "\n";
  }
  return os.str();
}

}  // namespace sringkit::io
