// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance                 all criteria
//   acceptance --criterion 4   just one (repeatable)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "sringkit/aut.hpp"
#include "sringkit/ci.hpp"
#include "sringkit/io.hpp"
#include "sringkit/lemmas.hpp"
#include "sringkit/repro.hpp"
#include "sringkit/sring.hpp"

using namespace sringkit;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome repro_criterion(const std::string& name, double limit) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cert = run_repro(*find_script(name));
  const double t = seconds_since(t0);
  for (const auto& c : cert.checks)
    out.details.push_back(std::string(c.ok ? "ok   " : "FAIL ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  out.pass = cert.pass() && t < limit;
  out.summary = "repro " + name + ": " + std::to_string(cert.checks.size()) + " checks, " +
                (cert.pass() ? "all hold" : "some fail") + ", |aut(A)| = " + cert.data.value("aut_order", "?") +
                ", " + fmt_seconds(t) + " (limit " + fmt_seconds(limit) + ")";
  return out;
}

Outcome survey_criterion(const std::vector<std::pair<std::string, bool>>& cases, double limit) {
  Outcome out;
  out.pass = true;
  std::string s;
  for (const auto& [spec, want_nonci] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sv = nci2_survey(parse_group(spec));
    const double t = seconds_since(t0);
    const std::size_t n = sv.normal_nonci();
    const bool ok = sv.complete && (want_nonci ? n >= 1 : n == 0) && t < limit;
    out.pass = out.pass && ok;
    s += (s.empty() ? "" : ", ") + spec + " " + std::to_string(n);
    out.details.push_back(std::string(ok ? "ok   " : "FAIL ") + "survey " + spec + ": " + std::to_string(sv.rows.size()) +
                          " rows, " + std::to_string(n) + " normal non-CI (want " + (want_nonci ? ">= 1" : "0") +
                          "), holomorph search " + std::to_string(sv.noncinorm.size()) +
                          (sv.complete ? "" : ", INCOMPLETE: " + sv.incomplete_reason) + ", " + fmt_seconds(t));
    for (const auto& c : sv.noncinorm) out.details.push_back("       " + io::format_ring(c.sring));
  }
  out.summary = "normal non-CI rings: " + s + " (limit " + fmt_seconds(limit) + " each)";
  return out;
}

Outcome property_suite(std::uint64_t seed) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  LemmaReport all;
  LemmaOptions exhaustive;
  exhaustive.tensor_pairs = false;
  for (std::uint32_t n = 2; n <= 32; ++n)
    for (auto& f : abelian_groups_of_order(n)) all.merge(run_lemmas(FinAbGroup::make(f), seed, Caps::defaults(), exhaustive));
  const std::size_t upto32 = all.groups.size();
  const std::size_t sampled32 = all.sampled_groups;
  LemmaOptions sampled;
  sampled.sample = true;
  sampled.samples = 8;
  sampled.max_pairs = 8;
  for (std::uint32_t n = 33; n <= 64; ++n)
    for (auto& f : abelian_groups_of_order(n)) all.merge(run_lemmas(FinAbGroup::make(f), seed, Caps::defaults(), sampled));
  const auto tensors = run_tensor_suite(32, seed);
  all.merge(tensors);

  std::istringstream table(io::lemma_table(all));
  for (std::string line; std::getline(table, line);) out.details.push_back(line);

  const std::set<std::string> known{"interrad", "tensci"};
  std::vector<std::string> failing;
  for (const auto& [name, t] : all.tallies)
    if (t.checked != t.passed) failing.push_back(name);
  out.pass = failing.empty();
  bool confined = !failing.empty();
  for (const auto& f : failing) confined = confined && known.count(f);
  for (const char* restricted : {"interrad_v_proper", "tensci_only_if", "tensci_if_coprime"}) {
    const auto it = all.tallies.find(restricted);
    confined = confined && it != all.tallies.end() && it->second.checked > 0 && it->second.checked == it->second.passed;
  }
  std::string f;
  for (const auto& x : failing) f += (f.empty() ? "" : ", ") + x;
  out.summary = std::to_string(upto32) + " groups of order <= 32 (" + std::to_string(sampled32) +
                " with sampled aut(G)), orders 33-64 sampled, " + std::to_string(tensors.groups.size()) +
                " tensor factorizations, " + std::to_string(all.rings) + " rings; failing: " +
                (failing.empty() ? "none" : f) + ", " + fmt_seconds(seconds_since(t0));
  if (!out.pass)
    out.details.push_back(std::string("failures are the known counterexamples only: ") + (confined ? "yes" : "no"));
  return out;
}

// B is coarser than or equal to C: every class of B is a union of classes of C.
bool coarser_eq(const std::vector<ClassId>& b, const std::vector<ClassId>& c) {
  std::vector<std::int64_t> img(b.size(), -1);
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (img[c[x]] == -1) img[c[x]] = b[x];
    else if (img[c[x]] != b[x]) return false;
  }
  return true;
}

Outcome oracle_equivalence() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t wl_mismatch = 0, seeds = 0, rings_total = 0, aut_mismatch = 0;
  for (std::uint32_t n = 1; n <= 8; ++n)
    for (auto& f : abelian_groups_of_order(n)) {
      const auto g = FinAbGroup::make(f);
      std::vector<SRing> rings;
      for (const auto& p : oracle::partitions_with_e(g)) {
        auto v = verify_sring(g, p);
        if (v.ok()) rings.push_back(std::move(*v.ring));
      }
      rings_total += rings.size();

      // (a) wl_closure is the unique coarsest ring with T as an A-set.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Elem> t;
        for (Elem x = 0; x < n; ++x)
          if (mask >> x & 1) t.push_back(x);
        std::vector<const SRing*> admissible;
        for (const auto& a : rings)
          if (is_A_set(a, t)) admissible.push_back(&a);
        const SRing* least = nullptr;
        for (const auto* a : admissible)
          if (std::all_of(admissible.begin(), admissible.end(),
                          [&](const SRing* b) { return coarser_eq(a->class_map(), b->class_map()); }))
            least = a;
        const auto w = wl_closure(g, t.empty() ? std::vector<std::vector<Elem>>{} : std::vector<std::vector<Elem>>{t});
        ++seeds;
        if (!least || !(*least == w)) {
          ++wl_mismatch;
          out.details.push_back("wl mismatch over " + g.name() + " seed " + io::format_class(g, t));
        }
      }

      // (b) stabilizer against every bijection fixing e.
      for (const auto& a : rings) {
        const auto brute = oracle::color_stabilizer(g, a.classes());
        const auto stab = aut_stabilizer(a);
        bool ok = stab.group.order() == brute.size();
        std::set<std::vector<Elem>> bset(brute.begin(), brute.end());
        for (const auto& p : stab.group.generators()) ok = ok && bset.count(p.images());
        if (ok) {
          const auto closed = group_closure(n, stab.group.generators());
          std::set<std::vector<Elem>> cset;
          for (const auto& p : closed.elements()) cset.insert(p.images());
          ok = cset == bset;
        }
        if (!ok) {
          ++aut_mismatch;
          out.details.push_back("stabilizer mismatch over " + g.name() + ": " + io::format_ring(a));
        }
      }
    }
  const double t = seconds_since(t0);
  out.pass = wl_mismatch == 0 && aut_mismatch == 0 && t < 60;
  out.summary = std::to_string(seeds) + " seed sets, " + std::to_string(rings_total) + " S-rings of order <= 8; " +
                std::to_string(wl_mismatch) + " closure and " + std::to_string(aut_mismatch) +
                " stabilizer discrepancies, " + fmt_seconds(t) + " (limit 60.00s)";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> which;
  std::uint64_t seed = 1;
  bool verbose = false;
  app.add_option("--criterion", which, "criterion number (1-7), repeatable")->check(CLI::Range(1, 7));
  app.add_option("--seed", seed, "seed for the sampled part of criterion 6");
  app.add_flag("-v,--verbose", verbose, "print per-check details");
  CLI11_PARSE(app, argc, argv);
  if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7};

  const std::map<int, std::function<Outcome()>> criteria{
      {1, [] { return repro_criterion("c4xc2", 1.0); }},
      {2, [] { return repro_criterion("c4xc4", 1.0); }},
      {3, [] { return repro_criterion("c2pow6", 300.0); }},
      {4, [] { return survey_criterion({{"C8", true}, {"C4", false}, {"C2xC2", false}}, 10.0); }},
      {5, [] { return survey_criterion({{"C9", false}, {"C27", false}, {"C9xC3", false}}, 120.0); }},
      {6, [seed] { return property_suite(seed); }},
      {7, [] { return oracle_equivalence(); }},
  };

  bool all = true;
  for (int c : which) {
    Outcome o;
    try {
      o = criteria.at(c)();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("error: ") + e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << "\n";
    if (verbose || !o.pass)
      for (const auto& d : o.details) std::cout << "    " << d << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
