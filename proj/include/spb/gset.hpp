#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "spb/group.hpp"

namespace spb {

/// Carrier index of a finite G-set.
using Point = std::uint32_t;

/// Orbits of a G-set, indexed canonically by smallest carrier member.
struct OrbitPartition
{
  /// q: F -> F/G as a table.
  std::vector<std::size_t> orbit_of;
  std::size_t orbit_count = 0;
  /// Smallest carrier index of each orbit.
  std::vector<Point> representatives;
};

/// A finite set with a left action of a finite group, stored as a full
/// |G|×size table. Immutable handle; copies share data.
class GSet
{
public:
  /// act[g * size + f] = g·f. Construction verifies the action axioms.
  GSet(FiniteGroup group, std::size_t size, std::vector<Point> act);

  const FiniteGroup &group() const { return d_->group; }
  std::size_t size() const { return d_->size; }
  Point act(Elem g, Point f) const { return d_->act[g * d_->size + f]; }
  const std::vector<Point> &table() const { return d_->act; }
  const OrbitPartition &orbits() const { return d_->orbits; }
  bool is_free() const { return d_->free; }

  friend bool operator==(const GSet &a, const GSet &b);

private:
  struct Data
  {
    FiniteGroup group;
    std::size_t size;
    std::vector<Point> act;
    OrbitPartition orbits;
    bool free;
  };
  std::shared_ptr<const Data> d_;
};

const OrbitPartition &orbits(const GSet &f);
/// (g, f) ↦ (g·f, f) is injective.
bool is_free(const GSet &f);
/// (g, f) ↦ (g·f, f) is onto F×F: exactly one orbit.
bool is_transitive(const GSet &f);
/// Free with discrete quotient; for finite carriers the same as is_free.
bool is_semitorsor(const GSet &f);

/// G×I_n with g·(h, x) = (gh, x). The point (h, x) has index x·|G| + h.
GSet standard_semitorsor(const FiniteGroup &g, std::size_t n);
Point semitorsor_point(const FiniteGroup &g, Elem h, std::size_t x);
std::pair<Elem, std::size_t> semitorsor_coords(const FiniteGroup &g, Point p);

/// `size` points with every element acting as the identity.
GSet trivial_action(const FiniteGroup &g, std::size_t size);
/// F₁ ⊔ F₂ over the same group; points of F₂ are shifted by |F₁|.
GSet disjoint_union(const GSet &a, const GSet &b);
/// The orbit set F/G as a set with trivial-group action.
GSet orbit_set(const GSet &f);

/// The unique g with g·f = f_prime. Throws NotFree on a non-free G-set and
/// NoQuotient when the points lie in different orbits.
Elem divide(const GSet &F, Point f_prime, Point f);

/// A ξ-equivariant map between G-sets, stored as a full value table.
/// Construction checks shapes only; check_equivariant() tests the
/// equivariance law.
class EquivariantMap
{
public:
  EquivariantMap(GSet source, GSet target, GroupHom xi, std::vector<Point> value);
  /// ξ = id convenience overload; source and target must share the group.
  EquivariantMap(GSet source, GSet target, std::vector<Point> value);
  static EquivariantMap identity(const GSet &f);

  const GSet &source() const { return source_; }
  const GSet &target() const { return target_; }
  const GroupHom &xi() const { return xi_; }
  const std::vector<Point> &value() const { return value_; }
  Point operator()(Point f) const { return value_[f]; }

private:
  GSet source_;
  GSet target_;
  GroupHom xi_;
  std::vector<Point> value_;
};

bool check_equivariant(const EquivariantMap &a);
/// a∘b. Requires b.target() == a.source().
EquivariantMap compose_equivariant(const EquivariantMap &a, const EquivariantMap &b);
/// The orbit map α/: X₁ -> X₂ with q₂∘α = α/∘q₁.
std::vector<std::size_t> induced_orbit_map(const EquivariantMap &a);
bool is_orbit_bijection(const EquivariantMap &a);
/// Q: F -> F/G, equivariant over G -> 1.
EquivariantMap quotient_map(const GSet &f);

/// Extends f(rep_x) = images[x] equivariantly over a free source, ξ = id.
/// Throws NotFree if `source` is not free.
EquivariantMap extend_from_representatives(const GSet &source, const GSet &target,
                                           const std::vector<Point> &images);

} // namespace spb
