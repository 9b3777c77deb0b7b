#include "spb/frames.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "spb/error.hpp"
#include "spb/limits.hpp"

namespace spb {

namespace {

void require_same_arity(const WreathElement &a, const WreathElement &b)
{
  if (a.g.size() != b.g.size() || a.sigma.size() != b.sigma.size() || a.g.size() != a.sigma.size())
    throw Mismatch("wreath elements of different degree");
}

/// Visits every (g̃, σ) of G≀I_n with σ(fixed) = fixed and g̃(fixed) = e,
/// or every element when `fixed` is empty.
void for_each_wreath_element(const FiniteGroup &G, std::size_t n, std::optional<std::size_t> fixed,
                             const std::function<void(const WreathElement &)> &visit)
{
  WreathElement w{std::vector<Elem>(n, G.identity()), Permutation::identity(n)};
  for (const auto &sigma : Permutation::all(n)) {
    if (fixed && sigma(static_cast<std::uint32_t>(*fixed)) != *fixed)
      continue;
    w.sigma = sigma;
    auto rec = [&](auto &&self, std::size_t x) -> void {
      if (x == n) {
        visit(w);
        return;
      }
      if (fixed && x == *fixed) {
        w.g[x] = G.identity();
        self(self, x + 1);
        return;
      }
      for (Elem a = 0; a < G.order(); ++a) {
        w.g[x] = a;
        self(self, x + 1);
      }
    };
    rec(rec, 0);
  }
}

std::size_t wreath_order(const FiniteGroup &G, std::size_t n)
{
  return saturating_mul(saturating_pow(G.order(), n), saturating_factorial(n));
}

} // namespace

WreathElement wreath_identity(const FiniteGroup &G, std::size_t n)
{
  return WreathElement{std::vector<Elem>(n, G.identity()), Permutation::identity(n)};
}

WreathElement wreath_mul(const FiniteGroup &G, const WreathElement &a, const WreathElement &b)
{
  require_same_arity(a, b);
  const std::size_t n = a.g.size();
  const Permutation a_inv = a.sigma.inverse();
  WreathElement out{std::vector<Elem>(n), a.sigma.compose(b.sigma)};
  for (std::size_t x = 0; x < n; ++x)
    out.g[x] = G.mul(a.g[x], b.g[a_inv(static_cast<std::uint32_t>(x))]);
  return out;
}

WreathElement wreath_inv(const FiniteGroup &G, const WreathElement &a)
{
  // (g̃,σ)⁻¹ = ((g̃∘σ)⁻¹, σ⁻¹)
  const std::size_t n = a.g.size();
  WreathElement out{std::vector<Elem>(n), a.sigma.inverse()};
  for (std::size_t x = 0; x < n; ++x)
    out.g[x] = G.inv(a.g[a.sigma(static_cast<std::uint32_t>(x))]);
  return out;
}

std::vector<Point> wreath_act(const GSet &F, const WreathElement &w, std::span<const Point> t)
{
  if (t.size() != w.g.size() || w.sigma.size() != w.g.size())
    throw Mismatch("wreath element and tuple have different lengths");
  const Permutation inv = w.sigma.inverse();
  std::vector<Point> out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x)
    out[x] = F.act(w.g[x], t[inv(static_cast<std::uint32_t>(x))]);
  return out;
}

Frame wreath_act(const GSet &F, const WreathElement &w, const Frame &f)
{
  return Frame{wreath_act(F, w, std::span<const Point>(f.entries))};
}

std::pair<Elem, std::size_t> wreath_act_point(const FiniteGroup &G, const WreathElement &w,
                                              Elem h, std::size_t x)
{
  if (x >= w.g.size())
    throw Mismatch("slot out of range for wreath element");
  const std::size_t y = w.sigma(static_cast<std::uint32_t>(x));
  return {G.mul(w.g[y], h), y};
}

bool is_basis(const GSet &F, std::span<const Point> t)
{
  if (!F.is_free())
    throw NotFree("bases are defined for free G-sets");
  const auto &orb = F.orbits();
  if (t.size() != orb.orbit_count)
    return false;
  std::vector<bool> hit(orb.orbit_count, false);
  for (Point p : t) {
    if (p >= F.size())
      throw DomainError("tuple entry out of range");
    auto o = orb.orbit_of[p];
    if (hit[o])
      return false;
    hit[o] = true;
  }
  return true;
}

Frame canonical_frame(const GSet &F) { return Frame{F.orbits().representatives}; }

AssociatedMap associated_map(const GSet &F, const Frame &f)
{
  if (!is_basis(F, f.entries))
    throw DomainError("associated_map needs a basis");
  const FiniteGroup &G = F.group();
  const std::size_t n = f.size();
  GSet model = standard_semitorsor(G, n);

  std::vector<Point> fwd(model.size());
  for (std::size_t x = 0; x < n; ++x)
    for (Elem h = 0; h < G.order(); ++h)
      fwd[semitorsor_point(G, h, x)] = F.act(h, f[x]);

  const auto &orb = F.orbits();
  std::vector<std::size_t> slot_of_orbit(orb.orbit_count);
  for (std::size_t x = 0; x < n; ++x)
    slot_of_orbit[orb.orbit_of[f[x]]] = x;
  std::vector<Point> bwd(F.size());
  for (Point p = 0; p < F.size(); ++p) {
    std::size_t x = slot_of_orbit[orb.orbit_of[p]];
    bwd[p] = semitorsor_point(G, divide(F, p, f[x]), x);
  }
  return AssociatedMap{EquivariantMap(model, F, std::move(fwd)),
                       EquivariantMap(F, model, std::move(bwd))};
}

FrameSpace::FrameSpace(GSet base, std::vector<Frame> frames)
    : base_(std::move(base)), frames_(std::move(frames))
{
  std::sort(frames_.begin(), frames_.end());
}

std::optional<std::size_t> FrameSpace::index_of(const Frame &f) const
{
  auto it = std::lower_bound(frames_.begin(), frames_.end(), f);
  if (it == frames_.end() || *it != f)
    return std::nullopt;
  return static_cast<std::size_t>(it - frames_.begin());
}

std::size_t FrameSpace::require_index(const Frame &f) const
{
  auto i = index_of(f);
  if (!i)
    throw DomainError("frame does not belong to this frame space");
  return *i;
}

FrameSpace enumerate_frames(const GSet &F)
{
  if (!F.is_free())
    throw NotFree("frames are defined for free G-sets");
  const auto &orb = F.orbits();
  const std::size_t n = orb.orbit_count;
  require_within(wreath_order(F.group(), n), limits().max_enumeration, "frame count");

  std::vector<std::vector<Point>> members(n);
  for (Point p = 0; p < F.size(); ++p)
    members[orb.orbit_of[p]].push_back(p);

  std::vector<Frame> frames;
  Frame cur{std::vector<Point>(n)};
  for (const auto &pi : Permutation::all(n)) {
    auto rec = [&](auto &&self, std::size_t x) -> void {
      if (x == n) {
        frames.push_back(cur);
        return;
      }
      for (Point p : members[pi(static_cast<std::uint32_t>(x))]) {
        cur.entries[x] = p;
        self(self, x + 1);
      }
    };
    rec(rec, 0);
  }
  return FrameSpace(F, std::move(frames));
}

WreathElement frame_divide(const FrameSpace &fs, const Frame &f2, const Frame &f1)
{
  fs.require_index(f1);
  fs.require_index(f2);
  const GSet &F = fs.base();
  const auto &q = F.orbits().orbit_of;
  const std::size_t n = f1.size();

  std::vector<std::uint32_t> qf1(n), qf2(n);
  for (std::size_t x = 0; x < n; ++x) {
    qf1[x] = static_cast<std::uint32_t>(q[f1[x]]);
    qf2[x] = static_cast<std::uint32_t>(q[f2[x]]);
  }
  Permutation sigma = Permutation(qf2).inverse().compose(Permutation(qf1));
  const Permutation sigma_inv = sigma.inverse();
  WreathElement w{std::vector<Elem>(n), std::move(sigma)};
  for (std::size_t x = 0; x < n; ++x)
    w.g[x] = divide(F, f2[x], f1[sigma_inv(static_cast<std::uint32_t>(x))]);
  return w;
}

WreathGroup::WreathGroup(const FiniteGroup &base, std::size_t n)
    : base_(base), n_(n), group_(build(base, n, elements_))
{
}

FiniteGroup WreathGroup::build(const FiniteGroup &base, std::size_t n,
                               std::vector<WreathElement> &elements)
{
  const std::size_t order = wreath_order(base, n);
  require_within(order, limits().max_table_order, "wreath product order");
  elements.clear();
  elements.reserve(order);
  for_each_wreath_element(base, n, std::nullopt,
                          [&](const WreathElement &w) { elements.push_back(w); });

  auto index = [&](const WreathElement &w) {
    std::size_t r = 0;
    for (Elem a : w.g)
      r = r * base.order() + a;
    return static_cast<Elem>(w.sigma.rank() * saturating_pow(base.order(), n) + r);
  };
  std::vector<Elem> mul(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      mul[i * order + j] = index(wreath_mul(base, elements[i], elements[j]));
  return FiniteGroup(order, std::move(mul), base.label() + " wr I" + std::to_string(n));
}

Elem WreathGroup::index_of(const WreathElement &w) const
{
  if (w.g.size() != n_ || w.sigma.size() != n_)
    throw Mismatch("wreath element of different degree");
  std::size_t r = 0;
  for (Elem a : w.g)
    r = r * base_.order() + a;
  return static_cast<Elem>(w.sigma.rank() * saturating_pow(base_.order(), n_) + r);
}

GSet frame_torsor(const FrameSpace &fs, const WreathGroup &wg)
{
  if (!(wg.base() == fs.base().group()) || wg.degree() != fs.orbit_count())
    throw Mismatch("wreath group does not match the frame space");
  const std::size_t size = fs.size();
  std::vector<Point> act(wg.group().order() * size);
  for (Elem w = 0; w < wg.group().order(); ++w)
    for (std::size_t i = 0; i < size; ++i)
      act[w * size + i] =
          static_cast<Point>(fs.require_index(wreath_act(fs.base(), wg[w], fs[i])));
  return GSet(wg.group(), size, std::move(act));
}

bool check_frame_equivariance(const EquivariantMap &a, const FrameMap &lifted)
{
  const FiniteGroup &G1 = a.source().group();
  const std::size_t n = lifted.source.orbit_count();
  bool ok = true;
  for_each_wreath_element(G1, n, std::nullopt, [&](const WreathElement &w) {
    if (!ok)
      return;
    WreathElement pushed{std::vector<Elem>(n), w.sigma};
    for (std::size_t x = 0; x < n; ++x)
      pushed.g[x] = a.xi()(w.g[x]);
    for (std::size_t i = 0; i < lifted.source.size() && ok; ++i) {
      const Frame &f = lifted.source[i];
      Frame lhs = lifted(wreath_act(a.source(), w, f));
      Frame rhs = wreath_act(a.target(), pushed, lifted.target[lifted.image[i]]);
      ok = lhs == rhs;
    }
  });
  return ok;
}

FrameMap frame_functor_map(const EquivariantMap &a, Verification v)
{
  if (!a.source().is_free() || !a.target().is_free())
    throw NotFree("frame functor needs free source and target");
  if (!is_orbit_bijection(a))
    throw OrbitObstruction("α/ is not a bijection of orbit sets; α does not lift to frames");
  FrameMap out{enumerate_frames(a.source()), enumerate_frames(a.target()), {}};
  out.image.reserve(out.source.size());
  for (const Frame &f : out.source.frames()) {
    Frame img{std::vector<Point>(f.size())};
    for (std::size_t x = 0; x < f.size(); ++x)
      img.entries[x] = a(f[x]);
    out.image.push_back(out.target.require_index(img));
  }
  if (v == Verification::on && !check_frame_equivariance(a, out))
    throw Error("internal: lifted frame map is not ξ!-equivariant");
  return out;
}

Reconstruction reconstruct_semitorsor(const FrameSpace &fs, std::size_t slot)
{
  const std::size_t n = fs.orbit_count();
  if (slot >= n)
    throw DomainError("slot out of range");
  const GSet &F = fs.base();
  const FiniteGroup &G = F.group();

  std::vector<WreathElement> stabilizer;
  for_each_wreath_element(G, n, slot, [&](const WreathElement &w) { stabilizer.push_back(w); });

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(fs.size(), unset);
  std::vector<std::size_t> rep;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (cls[i] != unset)
      continue;
    for (const auto &h : stabilizer)
      cls[fs.require_index(wreath_act(F, h, fs[i]))] = rep.size();
    rep.push_back(i);
  }

  // G acts through slot `slot`: g·[f̃] = [(g·δ_slot, id)·f̃].
  const std::size_t classes = rep.size();
  std::vector<Point> act(G.order() * classes);
  for (Elem g = 0; g < G.order(); ++g) {
    WreathElement w = wreath_identity(G, n);
    w.g[slot] = g;
    for (std::size_t c = 0; c < classes; ++c)
      act[g * classes + c] =
          static_cast<Point>(cls[fs.require_index(wreath_act(F, w, fs[rep[c]]))]);
  }
  GSet quotient(G, classes, std::move(act));

  Frame reference = canonical_frame(F);
  auto coords = associated_map(F, reference).inverse;
  std::vector<Point> value(classes);
  for (std::size_t c = 0; c < classes; ++c)
    value[c] = coords(fs[rep[c]][slot]);
  EquivariantMap witness(quotient, standard_semitorsor(G, n), std::move(value));
  return Reconstruction{std::move(quotient), std::move(cls), std::move(witness), std::move(reference)};
}

EquivalenceReport check_equivalence(const GSet &F, const GSet &F2)
{
  if (!(F.group() == F2.group()))
    throw Mismatch("check_equivalence needs G-sets over the same group");
  if (!F.is_free() || !F2.is_free())
    throw NotFree("check_equivalence needs free G-sets");
  EquivalenceReport report;
  const std::size_t n = F.orbits().orbit_count;
  if (n != F2.orbits().orbit_count) {
    // No orbit bijection exists, and the frame torsors have different groups.
    report.bijective = true;
    return report;
  }
  require_within(saturating_pow(F2.size(), n), limits().max_enumeration, "Hom-set candidates");

  FrameSpace fs1 = enumerate_frames(F);
  FrameSpace fs2 = enumerate_frames(F2);

  std::vector<EquivariantMap> stor;
  std::vector<Point> images(n, 0);
  auto rec = [&](auto &&self, std::size_t x) -> void {
    if (x == n) {
      auto alpha = extend_from_representatives(F, F2, images);
      if (is_orbit_bijection(alpha))
        stor.push_back(std::move(alpha));
      return;
    }
    for (Point p = 0; p < F2.size(); ++p) {
      images[x] = p;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  report.semitorsor_homs = stor.size();

  // A torsor map is fixed by the image of one frame; each candidate is then
  // checked for equivariance on generators of G≀I_n.
  WreathGroup wg(F.group(), n);
  std::vector<WreathElement> offsets;
  offsets.reserve(fs1.size());
  for (std::size_t i = 0; i < fs1.size(); ++i)
    offsets.push_back(frame_divide(fs1, fs1[i], fs1[0]));

  std::map<std::vector<std::size_t>, std::size_t> torsor_maps;
  for (const Frame &t : fs2.frames()) {
    std::vector<std::size_t> table(fs1.size());
    for (std::size_t i = 0; i < fs1.size(); ++i)
      table[i] = fs2.require_index(wreath_act(F2, offsets[i], t));
    bool equivariant = true;
    for (Elem s : wg.group().generators())
      for (std::size_t i = 0; i < fs1.size() && equivariant; ++i) {
        auto moved = fs1.require_index(wreath_act(F, wg[s], fs1[i]));
        equivariant = fs2[table[moved]] == wreath_act(F2, wg[s], fs2[table[i]]);
      }
    if (equivariant)
      torsor_maps.emplace(std::move(table), torsor_maps.size());
  }
  report.torsor_homs = torsor_maps.size();

  std::vector<bool> hit(torsor_maps.size(), false);
  bool ok = stor.size() == torsor_maps.size();
  for (const auto &alpha : stor) {
    if (!ok)
      break;
    auto lifted = frame_functor_map(alpha, Verification::off);
    auto it = torsor_maps.find(lifted.image);
    if (it == torsor_maps.end() || hit[it->second]) {
      ok = false;
      break;
    }
    hit[it->second] = true;
  }
  report.bijective = ok;
  return report;
}

} // namespace spb
