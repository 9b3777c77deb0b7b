#include "spb/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "spb/error.hpp"
#include "spb/limits.hpp"
#include "spb/permutation.hpp"

namespace spb {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

/// Elements reachable from `start` by right multiplication with `gens`.
std::vector<bool> right_closure(std::size_t n, const std::vector<Elem> &mul, Elem start,
                                const std::vector<Elem> &gens)
{
  std::vector<bool> seen(n, false);
  std::vector<Elem> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    Elem a = stack.back();
    stack.pop_back();
    for (Elem s : gens) {
      Elem b = mul[a * n + s];
      if (!seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return seen;
}

bool generates(std::size_t n, const std::vector<Elem> &mul, Elem e, const std::vector<Elem> &gens)
{
  auto seen = right_closure(n, mul, e, gens);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::size_t order_in_table(std::size_t n, const std::vector<Elem> &mul, Elem e, Elem a)
{
  std::size_t k = 1;
  for (Elem p = a; p != e; p = mul[p * n + a])
    ++k;
  return k;
}

} // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> mul, std::string label)
{
  if (order == 0)
    throw DomainError("a group has at least one element");
  require_within(order, limits().max_table_order, "group order");
  if (mul.size() != order * order)
    throw DomainError("multiplication table must have order² entries");
  for (Elem v : mul)
    if (v >= order)
      throw DomainError("multiplication table entry out of range");

  // Latin square: every row and column is a permutation.
  for (std::size_t a = 0; a < order; ++a) {
    std::vector<bool> row(order, false), col(order, false);
    for (std::size_t b = 0; b < order; ++b) {
      Elem r = mul[a * order + b], c = mul[b * order + a];
      if (row[r] || col[c])
        throw DomainError("multiplication table is not a Latin square");
      row[r] = col[c] = true;
    }
  }

  Elem e = kUnset;
  for (std::size_t a = 0; a < order && e == kUnset; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < order && ok; ++b)
      ok = mul[a * order + b] == b && mul[b * order + a] == b;
    if (ok)
      e = static_cast<Elem>(a);
  }
  if (e == kUnset)
    throw DomainError("multiplication table has no identity");

  std::vector<Elem> inv(order, kUnset);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (mul[a * order + b] == e) {
        if (mul[b * order + a] != e)
          throw DomainError("left and right inverses differ");
        inv[a] = static_cast<Elem>(b);
      }

  // Greedy generating set, largest right-closure orbits first. Right closure
  // from e is the generated subgroup once associativity holds, and in any case
  // every element it reaches is a product of the chosen elements, which is
  // what Light's test needs.
  std::vector<Elem> by_order(order);
  std::iota(by_order.begin(), by_order.end(), 0u);
  std::vector<std::size_t> ord(order);
  for (std::size_t a = 0; a < order; ++a)
    ord[a] = order_in_table(order, mul, e, static_cast<Elem>(a));
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return ord[a] > ord[b]; });
  std::vector<Elem> gens;
  auto covered = right_closure(order, mul, e, gens);
  for (Elem a : by_order) {
    if (covered[a])
      continue;
    gens.push_back(a);
    covered = right_closure(order, mul, e, gens);
  }
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Elem> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (generates(order, mul, e, rest))
      gens = std::move(rest);
  }

  // Light's associativity test: (x·s)·y = x·(s·y) for generators s.
  for (Elem s : gens)
    for (std::size_t x = 0; x < order; ++x) {
      Elem xs = mul[x * order + s];
      for (std::size_t y = 0; y < order; ++y)
        if (mul[xs * order + y] != mul[x * order + mul[s * order + y]])
          throw DomainError("multiplication table is not associative");
    }

  d_ = std::make_shared<const Data>(
      Data{order, std::move(mul), std::move(inv), e, std::move(label), std::move(gens)});
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>> &mul, std::string label)
{
  const std::size_t n = mul.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto &row : mul) {
    if (row.size() != n)
      throw DomainError("multiplication table must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteGroup(n, std::move(flat), std::move(label));
}

std::size_t FiniteGroup::element_order(Elem a) const
{
  return order_in_table(order(), d_->mul, identity(), a);
}

bool FiniteGroup::is_abelian() const
{
  for (Elem a : generators())
    for (Elem b : generators())
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

bool operator==(const FiniteGroup &a, const FiniteGroup &b)
{
  return a.d_ == b.d_ || (a.d_->order == b.d_->order && a.d_->mul == b.d_->mul);
}

bool satisfies_group_axioms(const FiniteGroup &g)
{
  const std::size_t n = g.order();
  const Elem e = g.identity();
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a)
      return false;
    if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e)
      return false;
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return false;
  }
  return true;
}

FiniteGroup make_trivial() { return make_cyclic(1); }

FiniteGroup make_cyclic(std::size_t n)
{
  if (n == 0)
    throw DomainError("Z_0 is not a finite group");
  require_within(n, limits().max_table_order, "group order");
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup(n, std::move(mul), "Z" + std::to_string(n));
}

FiniteGroup make_direct_product(const FiniteGroup &g, const FiniteGroup &h)
{
  const std::size_t ng = g.order(), nh = h.order();
  const std::size_t n = saturating_mul(ng, nh);
  require_within(n, limits().max_table_order, "group order");
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem first = g.mul(static_cast<Elem>(a / nh), static_cast<Elem>(b / nh));
      Elem second = h.mul(static_cast<Elem>(a % nh), static_cast<Elem>(b % nh));
      mul[a * n + b] = static_cast<Elem>(first * nh + second);
    }
  return FiniteGroup(n, std::move(mul), g.label() + "x" + h.label());
}

FiniteGroup make_symmetric(std::size_t n)
{
  if (n == 0)
    throw DomainError("S_0 is not supported; use n >= 1");
  require_within(n, limits().max_symmetric_degree, "symmetric group degree");
  const std::size_t order = saturating_factorial(n);
  require_within(order, limits().max_table_order, "group order");
  auto perms = Permutation::all(n);
  std::vector<Elem> mul(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      mul[a * order + b] = static_cast<Elem>(perms[a].compose(perms[b]).rank());
  return FiniteGroup(order, std::move(mul), "S" + std::to_string(n));
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image))
{
  if (image_.size() != source_.order())
    throw Mismatch("homomorphism table size differs from source order");
  for (Elem v : image_)
    if (v >= target_.order())
      throw DomainError("homomorphism image out of range");
  if (image_[source_.identity()] != target_.identity())
    throw DomainError("homomorphism does not preserve the identity");
  for (Elem s : source_.generators())
    for (Elem a = 0; a < source_.order(); ++a)
      if (image_[source_.mul(a, s)] != target_.mul(image_[a], image_[s]))
        throw DomainError("map is not a homomorphism");
}

GroupHom GroupHom::identity(const FiniteGroup &g)
{
  std::vector<Elem> image(g.order());
  std::iota(image.begin(), image.end(), 0u);
  return GroupHom(g, g, std::move(image));
}

namespace {

// Bijective homomorphisms g -> h, found by choosing images of g's generators
// among elements of h of the same order and extending along the Cayley graph.
std::vector<std::vector<Elem>> isomorphism_tables(const FiniteGroup &g, const FiniteGroup &h,
                                                  bool first_only)
{
  std::vector<std::vector<Elem>> found;
  const std::size_t n = g.order();
  if (h.order() != n)
    return found;
  const auto &gens = g.generators();
  const std::size_t k = gens.size();

  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t ord = g.element_order(gens[i]);
    for (Elem a = 0; a < n; ++a)
      if (h.element_order(a) == ord)
        candidates[i].push_back(a);
  }

  std::vector<Elem> img(k);
  std::vector<Elem> map(n);
  std::size_t leaves = 0;

  auto try_extend = [&]() {
    std::fill(map.begin(), map.end(), kUnset);
    map[g.identity()] = h.identity();
    std::queue<Elem> queue;
    queue.push(g.identity());
    while (!queue.empty()) {
      Elem a = queue.front();
      queue.pop();
      for (std::size_t i = 0; i < k; ++i) {
        Elem b = g.mul(a, gens[i]);
        Elem v = h.mul(map[a], img[i]);
        if (map[b] == kUnset) {
          map[b] = v;
          queue.push(b);
        } else if (map[b] != v) {
          return false;
        }
      }
    }
    std::vector<bool> hit(n, false);
    for (Elem v : map) {
      if (hit[v])
        return false;
      hit[v] = true;
    }
    return true;
  };

  auto search = [&](auto &&self, std::size_t depth) -> void {
    if (first_only && !found.empty())
      return;
    if (depth == k) {
      require_within(++leaves, limits().max_enumeration, "isomorphism search");
      if (try_extend())
        found.push_back(map);
      return;
    }
    for (Elem c : candidates[depth]) {
      if (std::find(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(depth), c) !=
          img.begin() + static_cast<std::ptrdiff_t>(depth))
        continue;
      img[depth] = c;
      self(self, depth + 1);
    }
  };
  search(search, 0);
  std::sort(found.begin(), found.end());
  return found;
}

} // namespace

std::vector<GroupHom> automorphisms(const FiniteGroup &g)
{
  std::vector<GroupHom> out;
  for (auto &table : isomorphism_tables(g, g, false))
    out.emplace_back(g, g, std::move(table));
  return out;
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup &g, const FiniteGroup &h)
{
  auto found = isomorphism_tables(g, h, true);
  if (found.empty())
    return std::nullopt;
  return GroupHom(g, h, std::move(found.front()));
}

AutGroup aut_group(const FiniteGroup &g)
{
  auto auts = automorphisms(g);
  const std::size_t n = auts.size();
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < n; ++i)
    index.emplace(auts[i].image(), static_cast<Elem>(i));
  std::vector<Elem> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mul[i * n + j] = index.at(compose_hom(auts[i], auts[j]).image());
  return AutGroup{FiniteGroup(n, std::move(mul), "Aut(" + g.label() + ")"), std::move(auts)};
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup &g)
{
  const std::size_t n = g.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Elem>> classes;
  for (Elem a = 0; a < n; ++a) {
    if (done[a])
      continue;
    std::vector<Elem> cls;
    for (Elem h = 0; h < n; ++h) {
      Elem c = g.conjugate(h, a);
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Elem> kernel(const GroupHom &h)
{
  std::vector<Elem> out;
  for (Elem a = 0; a < h.source().order(); ++a)
    if (h(a) == h.target().identity())
      out.push_back(a);
  return out;
}

GroupHom compose_hom(const GroupHom &f, const GroupHom &g)
{
  if (!(g.target() == f.source()))
    throw Mismatch("compose_hom: target of the inner map is not the source of the outer map");
  std::vector<Elem> image(g.source().order());
  for (Elem a = 0; a < image.size(); ++a)
    image[a] = f(g(a));
  return GroupHom(g.source(), f.target(), std::move(image));
}

bool is_isomorphism(const GroupHom &h)
{
  if (h.source().order() != h.target().order())
    return false;
  std::vector<bool> hit(h.target().order(), false);
  for (Elem v : h.image()) {
    if (hit[v])
      return false;
    hit[v] = true;
  }
  return true;
}

} // namespace spb
