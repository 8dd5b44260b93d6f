// sringkit command-line front end.
//
// Exit codes: 0 pass, 1 assertion or property failure, 2 usage error,
// 3 a cap or search budget stopped the computation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sringkit/aut.hpp"
#include "sringkit/ci.hpp"
#include "sringkit/construct.hpp"
#include "sringkit/errors.hpp"
#include "sringkit/io.hpp"
#include "sringkit/lemmas.hpp"
#include "sringkit/repro.hpp"

namespace sk = sringkit;
using sk::io::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kIncomplete = 3 };

struct Options {
  std::string config;
  std::optional<std::uint64_t> cap_group_order, cap_aut, cap_nodes;
  bool json = false;
};

sk::Caps load_caps(const Options& o) {
  sk::Caps caps = sk::Caps::defaults();
  std::string path = o.config;
  if (path.empty())
    if (const char* env = std::getenv("SRINGKIT_CONFIG")) path = env;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw sk::Error("cannot read config file " + path);
    caps.load(in);
  }
  if (o.cap_group_order) caps.group_order = *o.cap_group_order;
  if (o.cap_aut) caps.aut_lattice = *o.cap_aut;
  if (o.cap_nodes) caps.search_nodes = *o.cap_nodes;
  return caps;
}

std::vector<std::int64_t> parse_residues(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw sk::Error("");
    } catch (const std::exception&) {
      throw sk::Error("bad residue '" + tok + "' in '" + s + "'");
    }
  }
  return out;
}

sk::Elem parse_elem(const sk::FinAbGroup& g, const std::string& s) {
  const auto r = parse_residues(s);
  if (r.size() != g.rank()) throw sk::Error("element '" + s + "' needs " + std::to_string(g.rank()) + " residues");
  return g.encode(r);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw sk::Error("cannot read " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw sk::Error(std::string("bad JSON: ") + e.what());
  }
}

void print_certificate(const sk::Certificate& c, bool as_json) {
  if (as_json) {
    json j = c.data;
    json checks = json::array();
    for (const auto& x : c.checks) checks.push_back({{"check", x.name}, {"ok", x.ok}, {"detail", x.detail}});
    j["checks"] = checks;
    j["pass"] = c.pass();
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "repro " << c.name;
  if (c.data.contains("group")) std::cout << " over " << c.data["group"].get<std::string>();
  std::cout << "\n";
  if (c.data.contains("m_generators"))
    for (const auto& m : c.data["m_generators"]) std::cout << "  M generator " << m.get<std::string>() << "\n";
  if (c.data.contains("r_generators"))
    for (const auto& r : c.data["r_generators"])
      if (r.contains("word")) std::cout << "  R generator " << r["word"].get<std::string>() << "\n";
  for (const auto& n : c.data["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
  for (const auto& x : c.checks) {
    std::cout << (x.ok ? "  ok   " : "  FAIL ") << x.name;
    if (!x.detail.empty()) std::cout << " (" << x.detail << ")";
    std::cout << "\n";
  }
  std::cout << (c.pass() ? "PASS: " + c.data.value("verdict", std::string()) : std::string("FAIL")) << "\n";
}

int cmd_repro(const std::string& name, const Options& o) {
  const sk::ReproScript* s = sk::find_script(name);
  if (!s) {
    std::cerr << "unknown repro script '" << name << "' (known:";
    for (const auto& x : sk::repro_scripts()) std::cerr << " " << x.name;
    std::cerr << ")\n";
    return kUsage;
  }
  const auto cert = sk::run_repro(*s, load_caps(o));
  print_certificate(cert, o.json);
  return cert.pass() ? kPass : kFail;
}

int cmd_survey(const std::string& spec, const Options& o) {
  const sk::Caps caps = load_caps(o);
  const sk::Survey s = sk::nci2_survey(sk::parse_group(spec, caps), caps);
  const bool consistent = s.normal_nonci() == 0;
  // A normal non-CI row must be matched by the holomorph search.
  const bool cross = !s.complete || consistent || !s.noncinorm.empty();
  if (o.json) {
    for (const auto& line : sk::io::survey_json_lines(s)) std::cout << line << "\n";
  } else {
    std::cout << sk::io::survey_table(s);
    if (!s.complete) std::cout << "INCOMPLETE: " << s.incomplete_reason << "\n";
    if (consistent && s.noncinorm.empty())
      std::cout << "verdict: NCI2-consistent (no normal non-CI S-ring over " << s.group.name() << ")\n";
    else
      std::cout << "verdict: " << s.normal_nonci() << " normal non-CI cyclotomic ring(s), " << s.noncinorm.size()
                << " from the holomorph search\n";
  }
  if (!cross) {
    std::cerr << "survey found a normal non-CI row that the holomorph search missed\n";
    return kFail;
  }
  return s.complete ? kPass : kIncomplete;
}

int cmd_lemmas(const std::string& spec, std::uint64_t seed, const Options& o) {
  const sk::Caps caps = load_caps(o);
  const sk::LemmaReport r = sk::run_lemmas(sk::parse_group(spec, caps), seed, caps);
  if (o.json) std::cout << sk::io::to_json(r).dump(2) << "\n";
  else std::cout << sk::io::lemma_table(r) << (r.pass() ? "PASS" : "FAIL") << "\n";
  if (!r.pass()) return kFail;
  for (const auto& [name, t] : r.tallies)
    if (t.skipped) return kIncomplete;
  return kPass;
}

struct BuildArgs {
  std::string group;
  std::vector<std::string> auts;
  std::vector<std::int64_t> powers;
  std::vector<std::string> wl_sets;
};

int cmd_build(const BuildArgs& b, const Options& o) {
  const sk::Caps caps = load_caps(o);
  const sk::FinAbGroup g = sk::parse_group(b.group, caps);
  if (!b.wl_sets.empty() && (!b.auts.empty() || !b.powers.empty()))
    throw sk::Error("give either automorphisms or WL seed sets, not both");
  std::optional<sk::SRing> a;
  if (!b.wl_sets.empty()) {
    std::vector<std::vector<sk::Elem>> seeds;
    for (const auto& s : b.wl_sets) {
      std::vector<sk::Elem> set;
      for (const auto& e : split(s, ' ')) set.push_back(parse_elem(g, e));
      seeds.push_back(std::move(set));
    }
    a = sk::wl_closure(g, seeds);
  } else {
    std::vector<sk::GroupAut> gens;
    for (const auto& s : b.auts) {
      std::vector<sk::Elem> imgs;
      for (const auto& e : split(s, '/')) imgs.push_back(parse_elem(g, e));
      gens.push_back(sk::GroupAut::from_images(g, std::move(imgs)));
    }
    for (auto m : b.powers) gens.push_back(sk::GroupAut::power_map(g, m));
    a = sk::cyclotomic(g, gens);
  }
  if (o.json) std::cout << sk::io::to_json(*a).dump() << "\n";
  else std::cout << g.name() << ", rank " << a->rank() << "\n" << sk::io::format_ring(*a) << "\n";
  return kPass;
}

int cmd_verify(const std::string& path, const Options& o) {
  const sk::Caps caps = load_caps(o);
  const json j = read_json(path);
  const sk::FinAbGroup g = j.contains("factors")
                               ? sk::FinAbGroup::make(j.at("factors").get<std::vector<std::uint32_t>>(), caps)
                               : sk::parse_group(j.at("group").get<std::string>(), caps);
  const auto r = sk::verify_sring(g, j.at("classes").get<std::vector<std::vector<sk::Elem>>>());
  if (o.json) {
    std::cout << json{{"ok", r.ok()}, {"violation", r.ok() ? json(nullptr) : sk::io::to_json(*r.violation)}}.dump()
              << "\n";
  } else if (r.ok()) {
    std::cout << "S-ring over " << g.name() << ", rank " << r.ring->rank() << "\n";
  } else {
    std::cout << "not an S-ring: axiom " << r.violation->axiom << ": " << r.violation->detail << "\n";
  }
  return r.ok() ? kPass : kFail;
}

int cmd_aut(const std::string& path, const Options& o) {
  const sk::Caps caps = load_caps(o);
  const sk::SRing a = sk::io::sring_from_json(read_json(path), caps);
  const auto stab = sk::aut_stabilizer(a, caps);
  const bool schurian = sk::orbit_ring(a.group(), stab.group.generators()) == a;
  const bool normal = sk::is_normal(stab, a.group());
  const sk::BigOrder order = sk::BigOrder(a.group().order()) * stab.group.order();
  if (o.json) {
    std::cout << json{{"aut_order", order.str()},
                      {"stabilizer", sk::io::to_json(stab.group)},
                      {"base", stab.base},
                      {"orbit_sizes", stab.orbit_sizes},
                      {"schurian", schurian},
                      {"normal", normal}}
                     .dump()
              << "\n";
  } else {
    std::cout << "|aut(A)| = " << order.str() << ", |aut(A)_e| = " << stab.group.order().str() << "\n"
              << "schurian: " << (schurian ? "yes" : "no") << ", normal: " << (normal ? "yes" : "no") << "\n";
    for (const auto& p : stab.group.generators()) std::cout << "  " << sk::io::to_json(p).dump() << "\n";
  }
  return kPass;
}

int cmd_ci(const std::string& path, const Options& o) {
  const sk::Caps caps = load_caps(o);
  const sk::SRing a = sk::io::sring_from_json(read_json(path), caps);
  const sk::CiReport r = sk::is_ci_sring(a, caps);
  if (o.json) {
    std::cout << sk::io::to_json(r).dump() << "\n";
  } else {
    std::cout << "|aut(A)| = " << r.aut_order.str() << ", normal: " << (r.normal ? "yes" : "no") << "\n"
              << r.regular_classes.size() << " class(es) of " << a.group().name() << "-regular subgroups, "
              << r.regular_total << " in total\n"
              << (r.is_ci ? "CI" : "non-CI") << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config, "key=value caps file (default: $SRINGKIT_CONFIG)");
  app.add_option("--cap-group-order", o.cap_group_order, "largest group order");
  app.add_option("--cap-aut", o.cap_aut, "largest |aut(G)| for subgroup-lattice walks");
  app.add_option("--cap-nodes", o.cap_nodes, "search node budget for aut(A)");
  app.add_flag("--json", o.json, "JSON output");

  std::function<int()> run;

  auto* repro = app.add_subcommand("repro", "explicit normal non-CI constructions");
  std::string repro_name;
  repro->add_option("name", repro_name, "c4xc2, c4xc4 or c2pow6")->required();
  repro->callback([&] { run = [&] { return cmd_repro(repro_name, o); }; });

  auto* survey = app.add_subcommand("survey", "cyc(M, G) for every M <= aut(G) up to conjugacy");
  std::string survey_group;
  survey->add_option("group", survey_group, "group spec, e.g. C4xC2 or 9,3")->required();
  survey->callback([&] { run = [&] { return cmd_survey(survey_group, o); }; });

  auto* lemmas = app.add_subcommand("lemmas", "property suite over the cyclotomic rings of a group");
  std::string lemma_group;
  std::uint64_t seed = 1;
  lemmas->add_option("group", lemma_group)->required();
  lemmas->add_option("--seed", seed, "seed for sampling when aut(G) is large");
  lemmas->callback([&] { run = [&] { return cmd_lemmas(lemma_group, seed, o); }; });

  auto* sring = app.add_subcommand("sring", "build and inspect single S-rings");
  sring->require_subcommand(1);
  BuildArgs b;
  auto* build = sring->add_subcommand("build", "cyclotomic ring or WL closure");
  build->add_option("group", b.group)->required();
  build->add_option("--aut", b.auts, "automorphism as generator images, e.g. 1,1/0,1");
  build->add_option("--power", b.powers, "power map x -> x^m");
  build->add_option("--wl", b.wl_sets, "seed set for the WL closure, elements space separated");
  build->callback([&] { run = [&] { return cmd_build(b, o); }; });
  std::string path;
  auto* verify = sring->add_subcommand("verify", "check the S-ring axioms for a JSON partition");
  verify->add_option("file", path, "JSON file or -")->required();
  verify->callback([&] { run = [&] { return cmd_verify(path, o); }; });
  auto* aut = sring->add_subcommand("aut", "automorphism group of an S-ring");
  aut->add_option("file", path)->required();
  aut->callback([&] { run = [&] { return cmd_aut(path, o); }; });
  auto* ci = sring->add_subcommand("ci", "CI test by regular-subgroup transjugacy");
  ci->add_option("file", path)->required();
  ci->callback([&] { run = [&] { return cmd_ci(path, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  try {
    return run();
  } catch (const sk::CapExceeded& e) {
    std::cerr << "INCOMPLETE: " << e.what() << "\n";
    return kIncomplete;
  } catch (const sk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "FAIL: " << e.what() << "\n";
    return kFail;
  }
}
