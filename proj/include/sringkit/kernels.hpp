#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sringkit/group.hpp"
#include "sringkit/sring.hpp"

// Hot loops of the S-ring code. Each kernel has a serial reference and an
// OpenMP version; both must return identical results (tests/test_kernels.cpp,
// bench/bench_kernels.cpp).
namespace sringkit::kernels {

enum class Exec { serial, parallel };

struct Sig {
  std::uint64_t lo = 0, hi = 0;
  bool operator==(const Sig&) const = default;
  auto operator<=>(const Sig&) const = default;
};

// For every z, an order-independent hash of the multisets
// {class(z x^-1) : x in X_i} over all classes X_i, and of class(z^-1).
// Two points of one class with different structure-constant rows get
// different signatures unless the hash collides.
std::vector<Sig> wl_signatures(const FinAbGroup& g, const std::vector<ClassId>& class_of,
                               const std::vector<std::vector<Elem>>& classes, Exec exec);

// Axiom 3 check over all class pairs: the first (lowest i, then j) pair whose
// counts are not constant on some class.
std::optional<Violation> check_structure_constants(const FinAbGroup& g,
                                                   const std::vector<ClassId>& class_of,
                                                   const std::vector<std::vector<Elem>>& classes,
                                                   Exec exec);

// Exact stabilization by one class at a time, no hashing. Reference for
// the hashed refinement and fallback when a hash collision is detected.
std::vector<ClassId> refine_exact(const FinAbGroup& g, std::vector<ClassId> class_of);
// Stabilization driven by wl_signatures.
std::vector<ClassId> refine_hashed(const FinAbGroup& g, std::vector<ClassId> class_of, Exec exec);

// Renumber so class ids follow least members; returns the class count.
std::size_t canonical_classes(std::vector<ClassId>& class_of);
std::vector<std::vector<Elem>> classes_from_map(const std::vector<ClassId>& class_of);

}  // namespace sringkit::kernels
