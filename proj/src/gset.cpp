#include "spb/gset.hpp"

#include <numeric>
#include <string>

#include "spb/error.hpp"
#include "spb/limits.hpp"
#include "spb/permutation.hpp"

namespace spb {

namespace {

OrbitPartition compute_orbits(const FiniteGroup &g, std::size_t size, const std::vector<Point> &act)
{
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  OrbitPartition p;
  p.orbit_of.assign(size, unset);
  for (Point f = 0; f < size; ++f) {
    if (p.orbit_of[f] != unset)
      continue;
    for (Elem h = 0; h < g.order(); ++h)
      p.orbit_of[act[h * size + f]] = p.orbit_count;
    p.representatives.push_back(f);
    ++p.orbit_count;
  }
  return p;
}

} // namespace

GSet::GSet(FiniteGroup group, std::size_t size, std::vector<Point> act)
{
  const std::size_t n = group.order();
  if (act.size() != n * size)
    throw DomainError("action table must have |G|·size entries");
  for (Point v : act)
    if (v >= size)
      throw DomainError("action table entry out of range");
  const Elem e = group.identity();
  for (Point f = 0; f < size; ++f)
    if (act[e * size + f] != f)
      throw DomainError("identity does not act trivially");
  // g·(s·f) = (gs)·f for generators s suffices by induction on word length.
  for (Elem s : group.generators())
    for (Elem g = 0; g < n; ++g)
      for (Point f = 0; f < size; ++f)
        if (act[g * size + act[s * size + f]] != act[group.mul(g, s) * size + f])
          throw DomainError("table is not a left action");

  bool free = true;
  for (Point f = 0; f < size && free; ++f)
    for (Elem g = 0; g < n && free; ++g)
      if (g != e && act[g * size + f] == f)
        free = false;

  auto orb = compute_orbits(group, size, act);
  d_ = std::make_shared<const Data>(
      Data{std::move(group), size, std::move(act), std::move(orb), free});
}

bool operator==(const GSet &a, const GSet &b)
{
  return a.d_ == b.d_ ||
         (a.d_->size == b.d_->size && a.d_->group == b.d_->group && a.d_->act == b.d_->act);
}

const OrbitPartition &orbits(const GSet &f) { return f.orbits(); }

bool is_free(const GSet &f) { return f.is_free(); }

bool is_transitive(const GSet &f) { return f.orbits().orbit_count == 1; }

bool is_semitorsor(const GSet &f) { return f.is_free(); }

Point semitorsor_point(const FiniteGroup &g, Elem h, std::size_t x)
{
  return static_cast<Point>(x * g.order() + h);
}

std::pair<Elem, std::size_t> semitorsor_coords(const FiniteGroup &g, Point p)
{
  return {static_cast<Elem>(p % g.order()), p / g.order()};
}

GSet standard_semitorsor(const FiniteGroup &g, std::size_t n)
{
  if (n == 0)
    throw DomainError("standard_semitorsor needs n >= 1");
  const std::size_t size = saturating_mul(g.order(), n);
  require_within(saturating_mul(size, g.order()), limits().max_enumeration, "action table");
  std::vector<Point> act(g.order() * size);
  for (Elem a = 0; a < g.order(); ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (Elem h = 0; h < g.order(); ++h)
        act[a * size + semitorsor_point(g, h, x)] = semitorsor_point(g, g.mul(a, h), x);
  return GSet(g, size, std::move(act));
}

GSet trivial_action(const FiniteGroup &g, std::size_t size)
{
  std::vector<Point> act(g.order() * size);
  for (Elem a = 0; a < g.order(); ++a)
    for (Point f = 0; f < size; ++f)
      act[a * size + f] = f;
  return GSet(g, size, std::move(act));
}

GSet disjoint_union(const GSet &a, const GSet &b)
{
  if (!(a.group() == b.group()))
    throw Mismatch("disjoint_union over different groups");
  const std::size_t size = a.size() + b.size();
  std::vector<Point> act(a.group().order() * size);
  for (Elem g = 0; g < a.group().order(); ++g) {
    for (Point f = 0; f < a.size(); ++f)
      act[g * size + f] = a.act(g, f);
    for (Point f = 0; f < b.size(); ++f)
      act[g * size + a.size() + f] = static_cast<Point>(a.size() + b.act(g, f));
  }
  return GSet(a.group(), size, std::move(act));
}

GSet orbit_set(const GSet &f) { return trivial_action(make_trivial(), f.orbits().orbit_count); }

Elem divide(const GSet &F, Point f_prime, Point f)
{
  if (!F.is_free())
    throw NotFree("division needs a free action");
  if (f >= F.size() || f_prime >= F.size())
    throw DomainError("point out of range");
  if (F.orbits().orbit_of[f] != F.orbits().orbit_of[f_prime])
    throw NoQuotient("points " + std::to_string(f_prime) + " and " + std::to_string(f) +
                     " lie in different orbits");
  for (Elem g = 0; g < F.group().order(); ++g)
    if (F.act(g, f) == f_prime)
      return g;
  throw NoQuotient("no group element relates the points");
}

EquivariantMap::EquivariantMap(GSet source, GSet target, GroupHom xi, std::vector<Point> value)
    : source_(std::move(source)), target_(std::move(target)), xi_(std::move(xi)),
      value_(std::move(value))
{
  if (!(xi_.source() == source_.group()) || !(xi_.target() == target_.group()))
    throw Mismatch("ξ does not connect the groups of source and target");
  if (value_.size() != source_.size())
    throw Mismatch("value table size differs from source size");
  for (Point v : value_)
    if (v >= target_.size())
      throw DomainError("map value out of range");
}

EquivariantMap::EquivariantMap(GSet source, GSet target, std::vector<Point> value)
    : EquivariantMap(source, target, GroupHom::identity(source.group()), std::move(value))
{
}

EquivariantMap EquivariantMap::identity(const GSet &f)
{
  std::vector<Point> value(f.size());
  std::iota(value.begin(), value.end(), 0u);
  return EquivariantMap(f, f, std::move(value));
}

bool check_equivariant(const EquivariantMap &a)
{
  const GSet &s = a.source();
  const GSet &t = a.target();
  for (Elem g = 0; g < s.group().order(); ++g)
    for (Point f = 0; f < s.size(); ++f)
      if (a(s.act(g, f)) != t.act(a.xi()(g), a(f)))
        return false;
  return true;
}

EquivariantMap compose_equivariant(const EquivariantMap &a, const EquivariantMap &b)
{
  if (!(b.target() == a.source()))
    throw Mismatch("compose_equivariant: target of the inner map is not the source of the outer map");
  std::vector<Point> value(b.source().size());
  for (Point f = 0; f < value.size(); ++f)
    value[f] = a(b(f));
  return EquivariantMap(b.source(), a.target(), compose_hom(a.xi(), b.xi()), std::move(value));
}

std::vector<std::size_t> induced_orbit_map(const EquivariantMap &a)
{
  const auto &src = a.source().orbits();
  const auto &dst = a.target().orbits();
  std::vector<std::size_t> out(src.orbit_count);
  for (std::size_t x = 0; x < src.orbit_count; ++x)
    out[x] = dst.orbit_of[a(src.representatives[x])];
  return out;
}

bool is_orbit_bijection(const EquivariantMap &a)
{
  auto m = induced_orbit_map(a);
  const std::size_t n = a.target().orbits().orbit_count;
  if (m.size() != n)
    return false;
  std::vector<bool> hit(n, false);
  for (auto y : m) {
    if (hit[y])
      return false;
    hit[y] = true;
  }
  return true;
}

EquivariantMap quotient_map(const GSet &f)
{
  GSet x = orbit_set(f);
  std::vector<Elem> to_trivial(f.group().order(), 0);
  std::vector<Point> value(f.size());
  for (Point p = 0; p < f.size(); ++p)
    value[p] = static_cast<Point>(f.orbits().orbit_of[p]);
  return EquivariantMap(f, x, GroupHom(f.group(), x.group(), std::move(to_trivial)),
                        std::move(value));
}

EquivariantMap extend_from_representatives(const GSet &source, const GSet &target,
                                           const std::vector<Point> &images)
{
  if (!source.is_free())
    throw NotFree("extension from representatives needs a free source");
  if (!(source.group() == target.group()))
    throw Mismatch("source and target have different groups");
  const auto &orb = source.orbits();
  if (images.size() != orb.orbit_count)
    throw Mismatch("one image per orbit expected");
  std::vector<Point> value(source.size());
  for (std::size_t x = 0; x < orb.orbit_count; ++x)
    for (Elem g = 0; g < source.group().order(); ++g)
      value[source.act(g, orb.representatives[x])] = target.act(g, images[x]);
  return EquivariantMap(source, target, std::move(value));
}

} // namespace spb
