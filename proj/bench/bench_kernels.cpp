// Serial vs OpenMP timings for the S-ring kernels.
//   bench_kernels [group ...]   (default: C64xC4 C8xC8xC4 C2^10)

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "sringkit/construct.hpp"
#include "sringkit/kernels.hpp"

namespace sk = sringkit;
namespace kn = sringkit::kernels;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> specs(argv + 1, argv + argc);
  if (specs.empty()) specs = {"C64xC4", "C8xC8xC4", "C2^10"};
  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-12s %6s %5s %-18s %10s %10s %7s\n", "group", "|G|", "rank", "kernel", "serial ms", "omp ms",
              "speedup");
  for (const auto& spec : specs) {
    const sk::FinAbGroup g = sk::parse_group(spec);
    const sk::SRing a = sk::cyclotomic(g, {sk::GroupAut::power_map(g, -1)});
    const auto& cmap = a.class_map();
    const auto& cls = a.classes();
    const int reps = g.order() > 1024 ? 1 : 5;

    struct Row {
      const char* name;
      double s, p;
    };
    std::vector<Row> rows;
    rows.push_back({"wl_signatures",
                    time_ms([&] { kn::wl_signatures(g, cmap, cls, kn::Exec::serial); }, reps),
                    time_ms([&] { kn::wl_signatures(g, cmap, cls, kn::Exec::parallel); }, reps)});
    rows.push_back({"structure_consts",
                    time_ms([&] { kn::check_structure_constants(g, cmap, cls, kn::Exec::serial); }, reps),
                    time_ms([&] { kn::check_structure_constants(g, cmap, cls, kn::Exec::parallel); }, reps)});
    std::vector<sk::ClassId> start(g.order(), 1);
    start[0] = 0;
    rows.push_back({"refine_hashed",
                    time_ms([&] { kn::refine_hashed(g, start, kn::Exec::serial); }, reps),
                    time_ms([&] { kn::refine_hashed(g, start, kn::Exec::parallel); }, reps)});
    for (const auto& r : rows)
      std::printf("%-12s %6zu %5zu %-18s %10.2f %10.2f %7.2f\n", g.name().c_str(), g.order(), a.rank(), r.name, r.s,
                  r.p, r.p > 0 ? r.s / r.p : 0.0);
  }
}
