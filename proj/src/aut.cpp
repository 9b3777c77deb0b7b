#include "spb/aut.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spb/error.hpp"
#include "spb/limits.hpp"

namespace spb {

GSetAut::GSetAut(GSet gset, std::vector<Point> table, bool)
    : gset_(std::move(gset)), table_(std::move(table))
{
}

GSetAut::GSetAut(GSet gset, std::vector<Point> table)
    : gset_(std::move(gset)), table_(std::move(table))
{
  if (table_.size() != gset_.size())
    throw Mismatch("automorphism table size differs from carrier size");
  std::vector<bool> hit(table_.size(), false);
  for (Point v : table_) {
    if (v >= table_.size() || hit[v])
      throw DomainError("automorphism table is not a bijection");
    hit[v] = true;
  }
  for (Elem s : gset_.group().generators())
    for (Point f = 0; f < gset_.size(); ++f)
      if (table_[gset_.act(s, f)] != gset_.act(s, table_[f]))
        throw DomainError("automorphism table is not equivariant");
}

GSetAut::GSetAut(const EquivariantMap &map) : GSetAut(map.source(), map.value())
{
  if (!(map.source() == map.target()) || !(map.xi() == GroupHom::identity(map.source().group())))
    throw DomainError("an automorphism maps F to itself with ξ = id");
}

GSetAut GSetAut::identity(const GSet &f)
{
  std::vector<Point> t(f.size());
  for (Point p = 0; p < f.size(); ++p)
    t[p] = p;
  return GSetAut(f, std::move(t), true);
}

GSetAut GSetAut::compose(const GSetAut &other) const
{
  if (!(gset_ == other.gset_))
    throw Mismatch("composing automorphisms of different G-sets");
  std::vector<Point> t(table_.size());
  for (Point p = 0; p < t.size(); ++p)
    t[p] = table_[other.table_[p]];
  return GSetAut(gset_, std::move(t), true);
}

GSetAut GSetAut::inverse() const
{
  std::vector<Point> t(table_.size());
  for (Point p = 0; p < t.size(); ++p)
    t[table_[p]] = p;
  return GSetAut(gset_, std::move(t), true);
}

bool GSetAut::is_identity() const
{
  for (Point p = 0; p < table_.size(); ++p)
    if (table_[p] != p)
      return false;
  return true;
}

std::vector<GSetAut> enumerate_automorphisms(const GSet &F)
{
  if (!F.is_free())
    throw NotFree("automorphism enumeration needs a free G-set");
  const std::size_t n = F.orbits().orbit_count;
  require_within(saturating_pow(F.size(), n), limits().max_enumeration,
                 "automorphism candidates");
  std::vector<std::vector<Point>> tables;
  std::vector<Point> images(n);
  auto rec = [&](auto &&self, std::size_t x) -> void {
    if (x == n) {
      auto m = extend_from_representatives(F, F, images);
      std::vector<bool> hit(F.size(), false);
      for (Point v : m.value()) {
        if (hit[v])
          return;
        hit[v] = true;
      }
      tables.push_back(m.value());
      return;
    }
    for (Point p = 0; p < F.size(); ++p) {
      images[x] = p;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  std::sort(tables.begin(), tables.end());
  std::vector<GSetAut> out;
  out.reserve(tables.size());
  for (auto &t : tables)
    out.emplace_back(F, std::move(t));
  return out;
}

GSetAutGroup aut_group_of_gset(const GSet &F)
{
  if (!F.is_free())
    throw NotFree("Aut(F) is computed for free G-sets only");
  const FiniteGroup &G = F.group();
  const std::size_t n = F.orbits().orbit_count;
  Frame frame = canonical_frame(F);
  auto phi = associated_map(F, frame);
  WreathGroup wg(G, n);

  std::vector<GSetAut> elements;
  elements.reserve(wg.elements().size());
  for (const auto &w : wg.elements()) {
    GSetAut model = wreath_to_aut(w, n, G);
    std::vector<Point> t(F.size());
    for (Point p = 0; p < F.size(); ++p)
      t[p] = phi.forward(model(phi.inverse(p)));
    elements.emplace_back(F, std::move(t));
  }

  const std::size_t order = elements.size();
  std::map<std::vector<Point>, Elem> index;
  for (std::size_t i = 0; i < order; ++i)
    index.emplace(elements[i].table(), static_cast<Elem>(i));
  if (index.size() != order)
    throw Error("internal: wreath-conjugated automorphisms are not distinct");
  std::vector<Elem> mul(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      mul[i * order + j] = index.at(elements[i].compose(elements[j]).table());
  return GSetAutGroup{FiniteGroup(order, std::move(mul), "Aut(F)"), std::move(elements),
                      std::move(frame)};
}

Permutation cq(const GSetAut &psi)
{
  const auto &orb = psi.gset().orbits();
  std::vector<std::uint32_t> img(orb.orbit_count);
  for (std::size_t x = 0; x < orb.orbit_count; ++x)
    img[x] = static_cast<std::uint32_t>(orb.orbit_of[psi(orb.representatives[x])]);
  return Permutation(std::move(img));
}

namespace {

std::vector<std::size_t> slots_by_orbit(const GSet &F, const Frame &f)
{
  if (!is_basis(F, f.entries))
    throw DomainError("frame is not a basis");
  const auto &orb = F.orbits();
  std::vector<std::size_t> slot(orb.orbit_count);
  for (std::size_t x = 0; x < f.size(); ++x)
    slot[orb.orbit_of[f[x]]] = x;
  return slot;
}

} // namespace

GSetAut section_from_frame(const GSet &F, const Frame &f, const Permutation &sigma)
{
  auto slot = slots_by_orbit(F, f);
  if (sigma.size() != f.size())
    throw Mismatch("permutation degree differs from frame length");
  std::vector<Point> t(F.size());
  for (Point p = 0; p < F.size(); ++p) {
    std::size_t x = slot[F.orbits().orbit_of[p]];
    Elem h = divide(F, p, f[x]);
    t[p] = F.act(h, f[sigma(static_cast<std::uint32_t>(x))]);
  }
  return GSetAut(F, std::move(t));
}

std::vector<Elem> autq_component(const GSetAut &psi, const Frame &f)
{
  const GSet &F = psi.gset();
  slots_by_orbit(F, f);
  if (!cq(psi).is_identity())
    throw DomainError("ψ permutes orbits, so it is not in Aut(q)");
  std::vector<Elem> g(f.size());
  for (std::size_t x = 0; x < f.size(); ++x)
    g[x] = divide(F, f[x], psi(f[x]));
  return g;
}

GSetAut autq_from_component(const GSet &F, const Frame &f, std::span<const Elem> g)
{
  auto slot = slots_by_orbit(F, f);
  if (g.size() != f.size())
    throw Mismatch("component tuple length differs from frame length");
  const FiniteGroup &G = F.group();
  std::vector<Point> t(F.size());
  for (Point p = 0; p < F.size(); ++p) {
    std::size_t x = slot[F.orbits().orbit_of[p]];
    Elem h = divide(F, p, f[x]);
    t[p] = F.act(G.mul(h, G.inv(g[x])), f[x]);
  }
  return GSetAut(F, std::move(t));
}

GSetAut wreath_to_aut(const WreathElement &w, std::size_t n, const FiniteGroup &G)
{
  if (w.g.size() != n || w.sigma.size() != n)
    throw Mismatch("wreath element degree differs from n");
  for (Elem a : w.g)
    if (a >= G.order())
      throw DomainError("wreath element entry out of range");
  GSet S = standard_semitorsor(G, n);
  std::vector<Point> t(S.size());
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = w.sigma(static_cast<std::uint32_t>(x));
    for (Elem g = 0; g < G.order(); ++g)
      t[semitorsor_point(G, g, x)] = semitorsor_point(G, G.mul(g, G.inv(w.g[y])), y);
  }
  return GSetAut(std::move(S), std::move(t));
}

WreathElement aut_to_wreath(const GSetAut &psi)
{
  const GSet &F = psi.gset();
  const FiniteGroup &G = F.group();
  const std::size_t n = F.size() / G.order();
  if (n == 0 || F.size() % G.order() != 0 || !(F == standard_semitorsor(G, n)))
    throw DomainError("aut_to_wreath needs an automorphism of a standard semi-torsor");
  Permutation sigma = cq(psi);
  const Permutation sigma_inv = sigma.inverse();
  WreathElement w{std::vector<Elem>(n), sigma};
  for (std::size_t x = 0; x < n; ++x) {
    // ψ(e, σ⁻¹(x)) = (g̃(x)⁻¹, x)
    Point p = psi(semitorsor_point(G, G.identity(), sigma_inv(static_cast<std::uint32_t>(x))));
    w.g[x] = G.inv(semitorsor_coords(G, p).first);
  }
  return w;
}

SesReport ses_report(const GSet &F)
{
  SesReport r;
  auto auts = enumerate_automorphisms(F);
  const auto &orb = F.orbits();
  const std::size_t n = orb.orbit_count;
  r.aut_order = auts.size();
  r.sym_order = factorial(n);

  auto wreath_route = aut_group_of_gset(F);
  r.frame = wreath_route.frame;
  {
    std::vector<std::vector<Point>> a, b;
    for (const auto &psi : auts)
      a.push_back(psi.table());
    for (const auto &psi : wreath_route.elements)
      b.push_back(psi.table());
    std::sort(b.begin(), b.end());
    r.matches_wreath_route = a == b;
  }

  std::vector<Permutation> images;
  images.reserve(auts.size());
  std::set<std::vector<Point>> kernel, autq;
  for (const auto &psi : auts) {
    images.push_back(cq(psi));
    if (images.back().is_identity())
      kernel.insert(psi.table());
    bool preserves = true;
    for (Point p = 0; p < F.size() && preserves; ++p)
      preserves = orb.orbit_of[psi(p)] == orb.orbit_of[p];
    if (preserves)
      autq.insert(psi.table());
  }
  r.autq_order = autq.size();
  r.kernel_is_autq = kernel == autq;
  r.autq_is_product = autq.size() == saturating_pow(F.group().order(), n);

  r.cq_homomorphism = true;
  for (std::size_t i = 0; i < auts.size() && r.cq_homomorphism; ++i)
    for (std::size_t j = 0; j < auts.size() && r.cq_homomorphism; ++j)
      r.cq_homomorphism = cq(auts[i].compose(auts[j])) == images[i].compose(images[j]);

  std::set<Permutation> distinct(images.begin(), images.end());
  r.cq_surjective = distinct.size() == r.sym_order;

  auto perms = Permutation::all(n);
  std::vector<GSetAut> section;
  for (const auto &s : perms)
    section.push_back(section_from_frame(F, r.frame, s));
  r.section_splits = true;
  for (std::size_t i = 0; i < perms.size() && r.section_splits; ++i) {
    r.section_splits = cq(section[i]) == perms[i];
    for (std::size_t j = 0; j < perms.size() && r.section_splits; ++j)
      r.section_splits = section[i].compose(section[j]) ==
                         section_from_frame(F, r.frame, perms[i].compose(perms[j]));
  }
  return r;
}

} // namespace spb
