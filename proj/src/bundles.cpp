#include "spb/bundles.hpp"

#include <algorithm>
#include <numeric>

#include "spb/error.hpp"
#include "spb/limits.hpp"

namespace spb {

namespace {

GSetAut as_fiber_map(const GSet &fiber, const GroupHom &a)
{
  return GSetAut(fiber, std::vector<Point>(a.image().begin(), a.image().end()));
}

void require_same_shape(const FlatBundle &b1, const FlatBundle &b2)
{
  if (b1.mode() != b2.mode())
    throw Mismatch("bundles have different modes");
  if (!(b1.fiber() == b2.fiber()))
    throw Mismatch("bundles have different fibers");
  if (b1.loops() != b2.loops())
    throw Mismatch("bundles have different loop counts");
  if (b1.mode() == BundleMode::group && !(*b1.model_group() == *b2.model_group()))
    throw Mismatch("bundles have different model groups");
}

/// The maps allowed to identify two bundles with the same fiber.
std::vector<GSetAut> structure_automorphisms(const FlatBundle &b)
{
  if (b.mode() == BundleMode::gspace)
    return enumerate_automorphisms(b.fiber());
  std::vector<GSetAut> out;
  for (const auto &a : automorphisms(*b.model_group()))
    out.push_back(as_fiber_map(b.fiber(), a));
  return out;
}

} // namespace

FlatBundle::FlatBundle(GSet fiber, std::vector<GSetAut> clutching)
    : mode_(BundleMode::gspace), fiber_(std::move(fiber)), clutching_(std::move(clutching))
{
  if (!fiber_.is_free())
    throw NotFree("bundle fiber must be a free G-set");
  if (clutching_.empty())
    throw DomainError("a bundle needs at least one loop");
  for (const auto &psi : clutching_)
    if (!(psi.gset() == fiber_))
      throw Mismatch("clutching map acts on a different G-set");
}

FlatBundle::FlatBundle(FiniteGroup model, const std::vector<GroupHom> &clutching)
    : mode_(BundleMode::group), fiber_(trivial_action(make_trivial(), model.order())),
      model_(std::move(model))
{
  if (clutching.empty())
    throw DomainError("a bundle needs at least one loop");
  for (const auto &a : clutching) {
    if (!(a.source() == *model_) || !(a.target() == *model_) || !is_isomorphism(a))
      throw DomainError("group-bundle clutching must be an automorphism of the fiber group");
    clutching_.push_back(as_fiber_map(fiber_, a));
  }
}

FlatBundle group_bundle_over_circle(const GroupHom &a) { return FlatBundle(a.source(), {a}); }

OrbitPartition component_partition(const FlatBundle &b)
{
  const std::size_t n = b.fiber().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &psi : b.clutching())
    for (Point p = 0; p < n; ++p) {
      std::size_t a = find(p), c = find(psi(p));
      if (a != c)
        parent[std::max(a, c)] = std::min(a, c);
    }
  OrbitPartition out;
  out.orbit_of.resize(n);
  std::vector<std::size_t> index(n, n);
  for (Point p = 0; p < n; ++p) {
    std::size_t root = find(p);
    if (index[root] == n) {
      index[root] = out.orbit_count++;
      out.representatives.push_back(p);
    }
    out.orbit_of[p] = index[root];
  }
  return out;
}

std::size_t total_components(const FlatBundle &b) { return component_partition(b).orbit_count; }

bool unit_component_is_circle(const FlatBundle &b)
{
  if (b.mode() != BundleMode::group)
    throw DomainError("the unit section exists for group bundles only");
  const Elem e = b.model_group()->identity();
  return std::all_of(b.clutching().begin(), b.clutching().end(),
                     [&](const GSetAut &psi) { return psi(e) == e; });
}

std::optional<GSetAut> bundle_isomorphism(const FlatBundle &b1, const FlatBundle &b2)
{
  require_same_shape(b1, b2);
  for (const auto &c : structure_automorphisms(b1)) {
    bool match = true;
    for (std::size_t i = 0; i < b1.loops() && match; ++i)
      match = c.compose(b1.clutching()[i]) == b2.clutching()[i].compose(c);
    if (match)
      return c;
  }
  return std::nullopt;
}

bool bundle_isomorphic(const FlatBundle &b1, const FlatBundle &b2)
{
  return bundle_isomorphism(b1, b2).has_value();
}

bool is_trivializable(const FlatBundle &b)
{
  return std::all_of(b.clutching().begin(), b.clutching().end(),
                     [](const GSetAut &psi) { return psi.is_identity(); });
}

FlatBundle quotient_bundle(const FlatBundle &b)
{
  GSet base = orbit_set(b.fiber());
  std::vector<GSetAut> clutching;
  for (const auto &psi : b.clutching())
    clutching.emplace_back(base, cq(psi).images());
  return FlatBundle(std::move(base), std::move(clutching));
}

FlatBundle finite_winding_bundle(const FiniteGroup &G, std::size_t k)
{
  if (k == 0)
    throw DomainError("winding number must be at least 1");
  WreathElement w{std::vector<Elem>(k, G.identity()), Permutation::cycle(k)};
  return FlatBundle(standard_semitorsor(G, k), {wreath_to_aut(w, k, G)});
}

FrameBundle frame_bundle(const FlatBundle &b)
{
  FrameSpace fs = enumerate_frames(b.fiber());
  WreathGroup wg(b.fiber().group(), fs.orbit_count());
  GSet torsor = frame_torsor(fs, wg);
  std::vector<GSetAut> clutching;
  for (const auto &psi : b.clutching()) {
    std::vector<Point> table(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      Frame moved = fs[i];
      for (auto &p : moved.entries)
        p = psi(p);
      table[i] = static_cast<Point>(fs.require_index(moved));
    }
    clutching.emplace_back(torsor, std::move(table));
  }
  return FrameBundle{FlatBundle(std::move(torsor), std::move(clutching)), std::move(fs),
                     std::move(wg)};
}

std::vector<WreathElement> clutching_wreath(const FlatBundle &b, const Frame &reference)
{
  if (!is_basis(b.fiber(), reference.entries))
    throw DomainError("reference frame is not a basis of the fiber");
  FrameSpace fs = enumerate_frames(b.fiber());
  std::vector<WreathElement> out;
  for (const auto &psi : b.clutching()) {
    Frame moved = reference;
    for (auto &p : moved.entries)
      p = psi(p);
    out.push_back(frame_divide(fs, moved, reference));
  }
  return out;
}

GSetAut holonomy(const FlatBundle &b, const LoopWord &w)
{
  GSetAut result = GSetAut::identity(b.fiber());
  const auto m = static_cast<int>(b.loops());
  for (int letter : w.letters) {
    if (letter == 0 || letter > m || letter < -m)
      throw DomainError("loop letter " + std::to_string(letter) + " out of range");
    const GSetAut &psi = b.clutching()[static_cast<std::size_t>(std::abs(letter) - 1)];
    result = (letter > 0 ? psi : psi.inverse()).compose(result);
  }
  return result;
}

std::size_t map_fiber_count(const EquivariantMap &a)
{
  if (!check_equivariant(a))
    throw DomainError("map is not equivariant");
  if (!is_orbit_bijection(a))
    throw DomainError("map does not induce a bijection of orbits");
  std::vector<std::size_t> count(a.target().size(), 0);
  for (Point v : a.value())
    ++count[v];
  const std::size_t expected = kernel(a.xi()).size();
  for (std::size_t c : count) {
    if (c == 0)
      throw DomainError("map is not surjective");
    if (c != expected)
      throw Error("internal: preimage size differs from the kernel order");
  }
  return expected;
}

std::vector<std::size_t> sn_labelling(std::size_t n, const GSet &action)
{
  if (n < 3)
    throw TooSmall("the labelling is unique only for n >= 3");
  const FiniteGroup &S = action.group();
  if (S.order() != factorial(n) || action.size() != n)
    throw Mismatch("expected an action of S_n on n points");
  for (Elem s = 0; s < S.order(); ++s) {
    if (s == S.identity())
      continue;
    bool trivial = true;
    for (Point a = 0; a < n && trivial; ++a)
      trivial = action.act(s, a) == a;
    if (trivial)
      throw NotFaithful("a non-identity permutation acts trivially");
  }

  std::vector<std::size_t> label(n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<bool> fixed(n, true);
    for (Elem s = 0; s < S.order(); ++s) {
      if (Permutation::unrank(n, s)(i) != i)
        continue;
      for (Point a = 0; a < n; ++a)
        if (action.act(s, a) != a)
          fixed[a] = false;
    }
    if (std::count(fixed.begin(), fixed.end(), true) != 1)
      throw DomainError("stabilizer of " + std::to_string(i + 1) +
                        " does not fix exactly one point");
    auto a = static_cast<std::size_t>(std::find(fixed.begin(), fixed.end(), true) - fixed.begin());
    if (label[a] != n)
      throw DomainError("two stabilizers fix the same point");
    label[a] = i;
  }
  return label;
}

SnActionResult sn_action_on_bundle(const FlatBundle &b)
{
  const GSet &fiber = b.fiber();
  if (fiber.group().order() != 1)
    throw DomainError("S_n actions are considered on coverings only");
  const std::size_t n = fiber.size();
  if (n < 3)
    throw TooSmall("the S_n obstruction needs at least 3 sheets");
  SnActionResult r;
  for (std::size_t i = 0; i < b.loops(); ++i)
    if (!b.clutching()[i].is_identity()) {
      r.obstruction_loop = i;
      r.obstruction = b.clutching()[i];
      return r;
    }
  FiniteGroup S = make_symmetric(n);
  std::vector<Point> act(S.order() * n);
  for (Elem s = 0; s < S.order(); ++s) {
    Permutation p = Permutation::unrank(n, s);
    for (Point a = 0; a < n; ++a)
      act[s * n + a] = p(a);
  }
  r.ok = true;
  r.action = GSet(std::move(S), n, std::move(act));
  return r;
}

CircleClassification classify_circle(const FiniteGroup &G)
{
  AutGroup aut = aut_group(G);
  std::vector<CircleClass> rows;
  for (const auto &cls : conjugacy_classes(aut.group)) {
    const GroupHom &rep = aut.elements[cls.front()];
    FlatBundle b = group_bundle_over_circle(rep);
    rows.push_back(CircleClass{rep, cls.size(), total_components(b), unit_component_is_circle(b)});
  }
  return CircleClassification{G, std::move(aut), std::move(rows)};
}

} // namespace spb
