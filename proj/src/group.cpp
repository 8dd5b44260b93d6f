#include "sringkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "sringkit/errors.hpp"

namespace sringkit {

struct FinAbGroup::Impl {
  std::vector<std::uint32_t> factors;
  std::size_t order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::size_t> strides;
  std::vector<std::uint32_t> digits;  // order x rank
};

namespace {

std::shared_ptr<const FinAbGroup::Impl> build_impl(std::vector<std::uint32_t> factors) {
  auto impl = std::make_shared<FinAbGroup::Impl>();
  impl->factors = std::move(factors);
  const std::size_t k = impl->factors.size();
  impl->strides.assign(k, 1);
  for (std::size_t i = k; i-- > 0;) {
    impl->strides[i] = impl->order;
    impl->order *= impl->factors[i];
    impl->exponent = std::lcm(impl->exponent, std::uint64_t{impl->factors[i]});
  }
  impl->digits.resize(impl->order * k);
  for (std::size_t x = 0; x < impl->order; ++x)
    for (std::size_t i = 0; i < k; ++i)
      impl->digits[x * k + i] =
          static_cast<std::uint32_t>((x / impl->strides[i]) % impl->factors[i]);
  return impl;
}

}  // namespace

FinAbGroup::FinAbGroup() : impl_(build_impl({})) {}
FinAbGroup::FinAbGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FinAbGroup FinAbGroup::make(std::vector<std::uint32_t> factors, const Caps& caps) {
  if (factors.empty()) throw Error("group needs at least one cyclic factor");
  std::uint64_t order = 1;
  for (auto d : factors) {
    if (d < 2) throw Error("cyclic factor order must be >= 2, got " + std::to_string(d));
    order *= d;
    if (order > caps.group_order)
      throw CapExceeded("group_order", "order exceeds " + std::to_string(caps.group_order));
  }
  return FinAbGroup(build_impl(std::move(factors)));
}

const std::vector<std::uint32_t>& FinAbGroup::factors() const { return impl_->factors; }
std::size_t FinAbGroup::order() const { return impl_->order; }
std::uint64_t FinAbGroup::exponent() const { return impl_->exponent; }

std::string FinAbGroup::name() const {
  if (impl_->factors.empty()) return "C1";
  std::string s;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
    if (i) s += 'x';
    s += 'C' + std::to_string(impl_->factors[i]);
  }
  return s;
}

Elem FinAbGroup::generator(std::size_t i) const {
  if (i >= rank()) throw Error("generator index out of range");
  return static_cast<Elem>(impl_->strides[i]);
}

std::span<const std::uint32_t> FinAbGroup::digits(Elem x) const {
  const std::size_t k = rank();
  return {impl_->digits.data() + static_cast<std::size_t>(x) * k, k};
}

Elem FinAbGroup::encode(std::span<const std::int64_t> residues) const {
  if (residues.size() != rank()) throw Error("residue tuple has wrong length");
  std::size_t x = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t d = impl_->factors[i];
    x += static_cast<std::size_t>(((residues[i] % d) + d) % d) * impl_->strides[i];
  }
  return static_cast<Elem>(x);
}

Elem FinAbGroup::mul(Elem g, Elem h) const {
  const std::size_t k = rank();
  const std::uint32_t* a = impl_->digits.data() + static_cast<std::size_t>(g) * k;
  const std::uint32_t* b = impl_->digits.data() + static_cast<std::size_t>(h) * k;
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t r = a[i] + b[i];
    if (r >= impl_->factors[i]) r -= impl_->factors[i];
    x = x * impl_->factors[i] + r;
  }
  return static_cast<Elem>(x);
}

Elem FinAbGroup::inv(Elem g) const {
  const std::size_t k = rank();
  const std::uint32_t* a = impl_->digits.data() + static_cast<std::size_t>(g) * k;
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t r = a[i] ? impl_->factors[i] - a[i] : 0;
    x = x * impl_->factors[i] + r;
  }
  return static_cast<Elem>(x);
}

Elem FinAbGroup::pow(Elem g, std::int64_t m) const {
  const std::size_t k = rank();
  const std::uint32_t* a = impl_->digits.data() + static_cast<std::size_t>(g) * k;
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t d = impl_->factors[i];
    const std::int64_t mm = ((m % d) + d) % d;
    x = x * static_cast<std::size_t>(d) + static_cast<std::size_t>((a[i] * mm) % d);
  }
  return static_cast<Elem>(x);
}

std::uint64_t FinAbGroup::elem_order(Elem g) const {
  std::uint64_t o = 1;
  auto dg = digits(g);
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::uint64_t d = impl_->factors[i];
    o = std::lcm(o, d / std::gcd(d, std::uint64_t{dg[i]}));
  }
  return o;
}

void FinAbGroup::check(Elem g) const {
  if (g >= order())
    throw Error("element index " + std::to_string(g) + " outside " + name());
}

std::string FinAbGroup::format(Elem g) const {
  std::string s = "(";
  auto dg = digits(g);
  for (std::size_t i = 0; i < dg.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(dg[i]);
  }
  return s + ")";
}

std::vector<std::uint32_t> parse_group_spec(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s.empty()) throw Error("empty group spec");

  auto parse_uint = [&](const std::string& t) -> std::uint32_t {
    if (t.empty() || t.size() > 9 ||
        !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error("bad number '" + t + "' in group spec '" + spec + "'");
    return static_cast<std::uint32_t>(std::stoul(t));
  };

  std::vector<std::uint32_t> factors;
  if (s.front() != 'c') {
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      factors.push_back(parse_uint(s.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return factors;
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    auto x = s.find('x', start);
    std::string tok = s.substr(start, x == std::string::npos ? std::string::npos : x - start);
    if (tok.size() < 2 || tok[0] != 'c') throw Error("bad factor '" + tok + "' in '" + spec + "'");
    tok.erase(0, 1);
    std::uint32_t rep = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      rep = parse_uint(tok.substr(caret + 1));
      tok.erase(caret);
      if (rep == 0) throw Error("zero exponent in '" + spec + "'");
    }
    const auto d = parse_uint(tok);
    for (std::uint32_t r = 0; r < rep; ++r) factors.push_back(d);
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return factors;
}

FinAbGroup parse_group(const std::string& spec, const Caps& caps) {
  return FinAbGroup::make(parse_group_spec(spec), caps);
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(FinAbGroup owner, std::vector<Elem> members, Bitset mask)
    : owner_(std::move(owner)), members_(std::move(members)), mask_(std::move(mask)) {}

Subgroup Subgroup::from_members(const FinAbGroup& owner, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Bitset mask(owner.order());
  for (Elem m : members) {
    owner.check(m);
    mask.set(m);
  }
  if (members.empty() || members.front() != owner.identity())
    throw Error("subgroup must contain the identity");
  for (Elem a : members)
    for (Elem b : members)
      if (!mask.test(owner.mul(a, b))) throw Error("member set is not closed under the group law");
  return Subgroup(owner, std::move(members), std::move(mask));
}

Subgroup Subgroup::trivial(const FinAbGroup& owner) {
  Bitset mask(owner.order());
  mask.set(0);
  return Subgroup(owner, {0}, std::move(mask));
}

Subgroup Subgroup::whole(const FinAbGroup& owner) {
  std::vector<Elem> all(owner.order());
  std::iota(all.begin(), all.end(), Elem{0});
  Bitset mask(owner.order());
  mask.fill();
  return Subgroup(owner, std::move(all), std::move(mask));
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (size() != o.size()) return size() < o.size();
  return members_ < o.members_;
}

Subgroup join_cyclic(const Subgroup& h, Elem x) {
  const FinAbGroup& g = h.owner();
  g.check(x);
  if (h.contains(x)) return h;
  Bitset mask = h.mask();
  std::vector<Elem> members = h.members();
  Elem step = x;
  while (!h.contains(step)) {
    for (Elem m : h.members()) {
      const Elem y = g.mul(m, step);
      mask.set(y);
      members.push_back(y);
    }
    step = g.mul(step, x);
  }
  std::sort(members.begin(), members.end());
  return Subgroup(g, std::move(members), std::move(mask));
}

Subgroup subgroup_generated(const FinAbGroup& g, std::span<const Elem> gens) {
  Subgroup h = Subgroup::trivial(g);
  for (Elem x : gens) h = join_cyclic(h, x);
  return h;
}

std::vector<Subgroup> all_subgroups(const FinAbGroup& g, const Caps& caps) {
  if (g.order() > caps.subgroup_lattice)
    throw CapExceeded("subgroup_lattice", g.name() + " has order " + std::to_string(g.order()));
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  std::unordered_set<Bitset, BitsetHash> seen{found.front().mask()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem x = 0; x < g.order(); ++x) {
      if (found[i].contains(x)) continue;
      Subgroup k = join_cyclic(found[i], x);
      if (seen.insert(k.mask()).second) found.push_back(std::move(k));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    ps.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

Subgroup sylow_subgroup(const FinAbGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    std::uint64_t o = g.elem_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) members.push_back(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

// ---------------------------------------------------------------- GroupAut

GroupAut::GroupAut(FinAbGroup owner, std::vector<Elem> images, std::vector<Elem> table)
    : owner_(std::move(owner)), images_(std::move(images)), table_(std::move(table)) {}

namespace {

// Table of the endomorphism sending generator i to images[i]; empty if the
// images do not define a homomorphism.
std::vector<Elem> hom_table(const FinAbGroup& g, std::span<const Elem> images) {
  const auto& f = g.factors();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (g.pow(images[i], f[i]) != g.identity()) return {};
  std::vector<Elem> table(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    auto dx = g.digits(x);
    Elem y = g.identity();
    for (std::size_t i = 0; i < f.size(); ++i) y = g.mul(y, g.pow(images[i], dx[i]));
    table[x] = y;
  }
  return table;
}

bool is_bijection(std::span<const Elem> table) {
  std::vector<char> hit(table.size(), 0);
  for (Elem y : table) {
    if (y >= table.size() || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

}  // namespace

GroupAut GroupAut::from_images(const FinAbGroup& owner, std::vector<Elem> images) {
  if (images.size() != owner.rank())
    throw Error("automorphism of " + owner.name() + " needs " + std::to_string(owner.rank()) +
                " generator images");
  for (Elem y : images) owner.check(y);
  auto table = hom_table(owner, images);
  if (table.empty()) throw Error("generator images do not define a homomorphism");
  if (!is_bijection(table)) throw Error("generator images do not define a bijection");
  return GroupAut(owner, std::move(images), std::move(table));
}

GroupAut GroupAut::identity(const FinAbGroup& owner) {
  std::vector<Elem> images(owner.rank());
  for (std::size_t i = 0; i < owner.rank(); ++i) images[i] = owner.generator(i);
  std::vector<Elem> table(owner.order());
  std::iota(table.begin(), table.end(), Elem{0});
  return GroupAut(owner, std::move(images), std::move(table));
}

GroupAut GroupAut::power_map(const FinAbGroup& owner, std::int64_t m) {
  const auto e = static_cast<std::int64_t>(owner.exponent());
  if (std::gcd(((m % e) + e) % e, e) != 1)
    throw Error("power map exponent " + std::to_string(m) + " not coprime to the exponent");
  std::vector<Elem> images(owner.rank());
  for (std::size_t i = 0; i < owner.rank(); ++i) images[i] = owner.pow(owner.generator(i), m);
  std::vector<Elem> table(owner.order());
  for (Elem x = 0; x < owner.order(); ++x) table[x] = owner.pow(x, m);
  return GroupAut(owner, std::move(images), std::move(table));
}

GroupAut GroupAut::then(const GroupAut& next) const {
  if (!(owner_ == next.owner_)) throw Error("automorphism owner mismatch");
  std::vector<Elem> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[i] = next.table_[images_[i]];
  std::vector<Elem> table(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) table[x] = next.table_[table_[x]];
  return GroupAut(owner_, std::move(images), std::move(table));
}

GroupAut GroupAut::inverse() const {
  std::vector<Elem> table(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) table[table_[x]] = static_cast<Elem>(x);
  std::vector<Elem> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[i] = table[owner_.generator(i)];
  return GroupAut(owner_, std::move(images), std::move(table));
}

bool GroupAut::is_identity() const {
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x] != x) return false;
  return true;
}

std::uint64_t GroupAut::order() const {
  std::uint64_t o = 1;
  GroupAut p = *this;
  while (!p.is_identity()) {
    p = p.then(*this);
    ++o;
  }
  return o;
}

std::vector<GroupAut> aut_elements(const FinAbGroup& g, const Caps& caps) {
  std::vector<GroupAut> out;
  if (g.rank() == 1) {
    const auto n = static_cast<std::int64_t>(g.order());
    for (std::int64_t m = 1; m < std::max<std::int64_t>(n, 2); ++m) {
      if (std::gcd(m, n) != 1) continue;
      if (out.size() >= caps.aut_elements)
        throw CapExceeded("aut_elements", "|aut(" + g.name() + ")| > " + std::to_string(caps.aut_elements));
      out.push_back(GroupAut::power_map(g, m));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const auto& f = g.factors();
  std::vector<std::vector<Elem>> candidates(f.size());
  for (Elem x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < f.size(); ++i)
      if (g.elem_order(x) == f[i]) candidates[i].push_back(x);

  std::vector<Elem> images(f.size());
  std::uint64_t nodes = 0;
  // Depth-first over generator images; the partial image subgroup must have
  // the order of the partial source subgroup.
  auto search = [&](auto&& self, std::size_t depth, const Subgroup& span_so_far,
                    std::uint64_t want) -> void {
    if (depth == f.size()) {
      if (out.size() >= caps.aut_elements)
        throw CapExceeded("aut_elements", "|aut(" + g.name() + ")| > " +
                                              std::to_string(caps.aut_elements) +
                                              " after " + std::to_string(nodes) + " search nodes");
      out.push_back(GroupAut::from_images(g, images));
      return;
    }
    for (Elem y : candidates[depth]) {
      ++nodes;
      Subgroup next = join_cyclic(span_so_far, y);
      if (next.size() != want * f[depth]) continue;
      images[depth] = y;
      self(self, depth + 1, next, want * f[depth]);
    }
  };
  search(search, 0, Subgroup::trivial(g), 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_characteristic(const Subgroup& h, std::span<const GroupAut> auts) {
  for (const auto& a : auts) {
    if (!(a.owner() == h.owner())) throw Error("automorphism owner mismatch");
    for (Elem x : h.members())
      if (!h.contains(a(x))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- quotients

namespace {

// Invariant factors (largest first) of the abelian group on `n` points with
// the given element-order function.
std::vector<std::uint32_t> invariant_factors(std::size_t n,
                                             const std::vector<std::uint64_t>& orders) {
  std::vector<std::vector<std::uint32_t>> per_prime;  // exponents, descending
  std::vector<std::uint64_t> primes = prime_divisors(n);
  std::size_t max_len = 0;
  for (auto p : primes) {
    // a[i] = #{factors with exponent >= i} from counts of p^i-torsion.
    std::vector<std::uint32_t> exps;
    std::uint64_t pi = 1;
    std::uint32_t prev_log = 0;
    std::vector<std::uint32_t> a;
    for (int i = 1;; ++i) {
      pi *= p;
      std::size_t cnt = 0;
      for (auto o : orders)
        if (pi % o == 0) ++cnt;
      std::uint32_t lg = 0;
      for (std::size_t c = cnt; c > 1; c /= p) ++lg;
      if (lg == prev_log) break;
      a.push_back(lg - prev_log);
      prev_log = lg;
    }
    // exponent e_j = #{i : a[i] > j}
    const std::uint32_t k = a.empty() ? 0 : a.front();
    for (std::uint32_t j = 0; j < k; ++j) {
      std::uint32_t e = 0;
      for (auto ai : a)
        if (ai > j) ++e;
      exps.push_back(e);
    }
    max_len = std::max(max_len, exps.size());
    per_prime.push_back(std::move(exps));
  }
  std::vector<std::uint32_t> factors(max_len, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t j = 0; j < per_prime[pi].size(); ++j)
      for (std::uint32_t t = 0; t < per_prime[pi][j]; ++t)
        factors[j] *= static_cast<std::uint32_t>(primes[pi]);
  return factors;
}

}  // namespace

Quotient section_quotient(const Subgroup& upper, const Subgroup& lower) {
  const FinAbGroup& g = upper.owner();
  if (!(lower.owner() == g)) throw Error("section subgroups have different owners");
  if (!lower.is_subgroup_of(upper)) throw Error("lower subgroup is not contained in upper");

  Quotient q{upper, lower, FinAbGroup(), {}, {}, {}};
  q.projection.assign(g.order(), kNoElem);
  q.coset_of.assign(g.order(), kNoElem);

  if (lower.size() == 1 && upper.size() == g.order()) {
    q.group = g;
    for (Elem x = 0; x < g.order(); ++x) {
      q.projection[x] = x;
      q.coset_of[x] = x;
    }
    q.lift = upper.members();
    return q;
  }

  // Cosets numbered by least member.
  std::vector<Elem> reps;
  for (Elem u : upper.members()) {
    if (q.coset_of[u] != kNoElem) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(u);
    for (Elem l : lower.members()) q.coset_of[g.mul(u, l)] = c;
  }
  const std::size_t m = reps.size();
  auto cmul = [&](std::uint32_t a, std::uint32_t b) { return q.coset_of[g.mul(reps[a], reps[b])]; };
  std::vector<std::uint64_t> orders(m);
  for (std::uint32_t c = 0; c < m; ++c) {
    std::uint64_t o = 1;
    for (std::uint32_t y = c; y != 0; y = cmul(y, c)) ++o;
    orders[c] = c == 0 ? 1 : o;
  }
  if (m == 1) {
    q.group = FinAbGroup();
    for (Elem u : upper.members()) q.projection[u] = 0;
    q.lift = {0};
    return q;
  }
  const auto factors = invariant_factors(m, orders);

  // Backtracking search for a basis q_1..q_k with |q_i| = factors[i] spanning
  // a subgroup of the expected order at each step.
  std::vector<std::uint32_t> basis(factors.size());
  auto span_with = [&](const std::vector<char>& in, std::uint32_t x, std::size_t& size) {
    std::vector<char> out = in;
    std::vector<std::uint32_t> base;
    for (std::uint32_t c = 0; c < m; ++c)
      if (in[c]) base.push_back(c);
    std::uint32_t step = x;
    while (!in[step]) {
      for (auto b : base) out[cmul(b, step)] = 1;
      step = cmul(step, x);
    }
    size = static_cast<std::size_t>(std::count(out.begin(), out.end(), 1));
    return out;
  };
  auto search = [&](auto&& self, std::size_t depth, const std::vector<char>& span,
                    std::size_t size) -> bool {
    if (depth == factors.size()) return true;
    for (std::uint32_t c = 1; c < m; ++c) {
      if (orders[c] != factors[depth]) continue;
      std::size_t nsize = 0;
      auto next = span_with(span, c, nsize);
      if (nsize != size * factors[depth]) continue;
      basis[depth] = c;
      if (self(self, depth + 1, next, nsize)) return true;
    }
    return false;
  };
  std::vector<char> start(m, 0);
  start[0] = 1;
  if (!search(search, 0, start, 1))
    throw InvariantFailure("no basis found for quotient of order " + std::to_string(m));

  q.group = FinAbGroup::make(factors, Caps{.group_order = ~std::uint64_t{0}});
  std::vector<Elem> coset_to_q(m, kNoElem);
  for (Elem z = 0; z < q.group.order(); ++z) {
    auto dz = q.group.digits(z);
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::uint32_t t = 0; t < dz[i]; ++t) c = cmul(c, basis[i]);
    coset_to_q[c] = z;
  }
  q.lift.assign(m, 0);
  for (std::uint32_t c = 0; c < m; ++c) q.lift[coset_to_q[c]] = reps[c];
  for (Elem u : upper.members()) q.projection[u] = coset_to_q[q.coset_of[u]];
  return q;
}

}  // namespace sringkit
