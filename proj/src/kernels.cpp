#include "sringkit/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace sringkit::kernels {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kSeedLo = 0x243f6a8885a308d3ULL;
constexpr std::uint64_t kSeedHi = 0x13198a2e03707344ULL;
constexpr std::uint64_t kInverseTag = 0xa4093822299f31d0ULL;

std::vector<Elem> inverse_table(const FinAbGroup& g) {
  std::vector<Elem> inv(g.order());
  for (Elem x = 0; x < g.order(); ++x) inv[x] = g.inv(x);
  return inv;
}

Sig signature_of(const FinAbGroup& g, const std::vector<Elem>& inv,
                 const std::vector<ClassId>& class_of,
                 const std::vector<std::vector<Elem>>& classes, Elem z) {
  Sig s;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::uint64_t lo = 0, hi = 0;
    for (Elem x : classes[i]) {
      const std::uint64_t c = class_of[g.mul(z, inv[x])];
      lo += mix(c ^ kSeedLo);
      hi += mix(c ^ kSeedHi);
    }
    s.lo += mix(lo ^ mix(i ^ kSeedLo));
    s.hi += mix(hi ^ mix(i ^ kSeedHi));
  }
  const std::uint64_t ci = class_of[inv[z]];
  s.lo += mix(ci ^ kInverseTag ^ kSeedLo);
  s.hi += mix(ci ^ kInverseTag ^ kSeedHi);
  return s;
}

// Sorted multiset {class(z x^-1) : x in X}.
void exact_row(const FinAbGroup& g, const std::vector<Elem>& inv,
               const std::vector<ClassId>& class_of, const std::vector<Elem>& x_set, Elem z,
               std::vector<ClassId>& out) {
  out.clear();
  for (Elem x : x_set) out.push_back(class_of[g.mul(z, inv[x])]);
  std::sort(out.begin(), out.end());
}

std::optional<Violation> check_pair_row(const FinAbGroup& g, const std::vector<Elem>& inv,
                                        const std::vector<ClassId>& class_of,
                                        const std::vector<std::vector<Elem>>& classes,
                                        std::size_t i) {
  // Row i: for each z the multiset of classes j with z x^-1 in X_j. Constancy
  // of every c_ij^k on X_k is equality of these multisets on X_k.
  const std::size_t n = g.order();
  std::vector<std::vector<ClassId>> first(classes.size());
  std::vector<Elem> first_z(classes.size(), kNoElem);
  std::vector<ClassId> row;
  for (Elem z = 0; z < n; ++z) {
    exact_row(g, inv, class_of, classes[i], z, row);
    const ClassId k = class_of[z];
    if (first_z[k] == kNoElem) {
      first_z[k] = z;
      first[k] = row;
      continue;
    }
    if (row == first[k]) continue;
    // Find a class j whose count differs.
    std::size_t a = 0, b = 0;
    const auto& r0 = first[k];
    ClassId j = 0;
    while (true) {
      if (a < r0.size() && b < row.size() && r0[a] == row[b]) {
        ++a;
        ++b;
        continue;
      }
      if (b >= row.size() || (a < r0.size() && r0[a] < row[b])) j = r0[a];
      else j = row[b];
      break;
    }
    Violation v;
    v.axiom = 3;
    v.detail = "structure constant c(" + std::to_string(i) + "," + std::to_string(j) + ";" +
               std::to_string(k) + ") differs at " + g.format(first_z[k]) + " and " + g.format(z);
    v.witness = {classes[i].front(), classes[j].front(), first_z[k], z};
    return v;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Sig> wl_signatures(const FinAbGroup& g, const std::vector<ClassId>& class_of,
                               const std::vector<std::vector<Elem>>& classes, Exec exec) {
  const auto inv = inverse_table(g);
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  std::vector<Sig> out(g.order());
  if (exec == Exec::serial) {
    for (std::int64_t z = 0; z < n; ++z)
      out[z] = signature_of(g, inv, class_of, classes, static_cast<Elem>(z));
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t z = 0; z < n; ++z)
      out[z] = signature_of(g, inv, class_of, classes, static_cast<Elem>(z));
  }
  return out;
}

std::optional<Violation> check_structure_constants(const FinAbGroup& g,
                                                   const std::vector<ClassId>& class_of,
                                                   const std::vector<std::vector<Elem>>& classes,
                                                   Exec exec) {
  const auto inv = inverse_table(g);
  const std::int64_t r = static_cast<std::int64_t>(classes.size());
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < r; ++i)
      if (auto v = check_pair_row(g, inv, class_of, classes, static_cast<std::size_t>(i))) return v;
    return std::nullopt;
  }
  std::vector<std::optional<Violation>> found(classes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < r; ++i)
    found[i] = check_pair_row(g, inv, class_of, classes, static_cast<std::size_t>(i));
  for (auto& v : found)
    if (v) return v;
  return std::nullopt;
}

std::size_t canonical_classes(std::vector<ClassId>& class_of) {
  std::unordered_map<ClassId, ClassId> renum;
  for (auto& c : class_of) {
    auto [it, fresh] = renum.try_emplace(c, static_cast<ClassId>(renum.size()));
    c = it->second;
  }
  return renum.size();
}

std::vector<std::vector<Elem>> classes_from_map(const std::vector<ClassId>& class_of) {
  ClassId r = 0;
  for (auto c : class_of) r = std::max(r, c + 1);
  std::vector<std::vector<Elem>> classes(r);
  for (Elem x = 0; x < class_of.size(); ++x) classes[class_of[x]].push_back(x);
  return classes;
}

std::vector<ClassId> refine_exact(const FinAbGroup& g, std::vector<ClassId> class_of) {
  const auto inv = inverse_table(g);
  std::size_t count = canonical_classes(class_of);
  auto split_by = [&](auto&& key_of) {
    std::map<std::pair<ClassId, std::vector<ClassId>>, ClassId> ids;
    std::vector<ClassId> next(class_of.size());
    for (Elem z = 0; z < class_of.size(); ++z) {
      auto key = std::make_pair(class_of[z], key_of(z));
      auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<ClassId>(ids.size()));
      next[z] = it->second;
    }
    class_of = std::move(next);
    const std::size_t c = canonical_classes(class_of);
    const bool changed = c != count;
    count = c;
    return changed;
  };
  bool changed = true;
  while (changed) {
    changed = split_by([&](Elem z) { return std::vector<ClassId>{class_of[inv[z]]}; });
    for (std::size_t i = 0; i < count; ++i) {
      const auto classes = classes_from_map(class_of);
      if (i >= classes.size()) break;
      std::vector<ClassId> row;
      const auto& xi = classes[i];
      changed |= split_by([&](Elem z) {
        exact_row(g, inv, class_of, xi, z, row);
        return row;
      });
    }
  }
  return class_of;
}

std::vector<ClassId> refine_hashed(const FinAbGroup& g, std::vector<ClassId> class_of, Exec exec) {
  std::size_t count = canonical_classes(class_of);
  while (true) {
    const auto classes = classes_from_map(class_of);
    const auto sig = wl_signatures(g, class_of, classes, exec);
    std::map<std::pair<ClassId, Sig>, ClassId> ids;
    std::vector<ClassId> next(class_of.size());
    for (Elem z = 0; z < class_of.size(); ++z) {
      auto [it, fresh] =
          ids.try_emplace(std::make_pair(class_of[z], sig[z]), static_cast<ClassId>(ids.size()));
      next[z] = it->second;
    }
    class_of = std::move(next);
    const std::size_t c = canonical_classes(class_of);
    if (c == count) return class_of;
    count = c;
  }
}

}  // namespace sringkit::kernels
