#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spb/aut.hpp"

namespace spb {

/// group: the fiber is a group G carried as a plain set (trivial-group action
/// on |G| points) and clutching maps are automorphisms of G.
/// gspace: the fiber is a free G-set and clutching maps are G-automorphisms.
enum class BundleMode
{
  group,
  gspace
};

/// An element of the free group on the loops: letter ±i is loop i (1-based)
/// traversed forwards or backwards.
struct LoopWord
{
  std::vector<int> letters;
};

/// A flat bundle over a wedge of m circles, stored as the monodromy of each
/// loop.
class FlatBundle
{
public:
  /// gspace mode. Throws NotFree for a non-free fiber, DomainError for an
  /// empty clutching list, Mismatch for clutching on another G-set.
  FlatBundle(GSet fiber, std::vector<GSetAut> clutching);
  /// group mode. Each clutching map must be an automorphism of `model`.
  FlatBundle(FiniteGroup model, const std::vector<GroupHom> &clutching);

  BundleMode mode() const { return mode_; }
  const GSet &fiber() const { return fiber_; }
  std::size_t loops() const { return clutching_.size(); }
  const std::vector<GSetAut> &clutching() const { return clutching_; }
  /// Present in group mode only.
  const std::optional<FiniteGroup> &model_group() const { return model_; }

private:
  BundleMode mode_;
  GSet fiber_;
  std::vector<GSetAut> clutching_;
  std::optional<FiniteGroup> model_;
};

/// The group bundle over the circle glued by an automorphism a of G.
FlatBundle group_bundle_over_circle(const GroupHom &a);

/// Orbits of the group generated by the clutching maps, canonically indexed.
OrbitPartition component_partition(const FlatBundle &b);
std::size_t total_components(const FlatBundle &b);

/// Whether the component through the unit is a single circle. Group mode only.
bool unit_component_is_circle(const FlatBundle &b);

/// Simultaneous conjugacy of the clutching lists by one fiber automorphism
/// (group automorphisms in group mode). Throws Mismatch on different modes,
/// fibers or loop counts.
bool bundle_isomorphic(const FlatBundle &b1, const FlatBundle &b2);
std::optional<GSetAut> bundle_isomorphism(const FlatBundle &b1, const FlatBundle &b2);
bool is_trivializable(const FlatBundle &b);

/// B/G -> M: the covering with fiber F/G and clutching C_q(ψᵢ).
FlatBundle quotient_bundle(const FlatBundle &b);

/// One loop on standard_semitorsor(G, k) glued by I(e, (1 2 … k)).
FlatBundle finite_winding_bundle(const FiniteGroup &G, std::size_t k);

struct FrameBundle
{
  FlatBundle bundle;
  FrameSpace frames;
  WreathGroup wreath;
};
/// Fiber Fr(F) as a G≀I_n-torsor, clutching f̃ ↦ ψᵢ∘f̃.
FrameBundle frame_bundle(const FlatBundle &b);

/// wᵢ = [ψᵢ∘f̃ / f̃] for the reference basis f̃.
std::vector<WreathElement> clutching_wreath(const FlatBundle &b, const Frame &reference);

/// ψ_{e_r}^{±1}∘…∘ψ_{e_1}^{±1}: the first letter acts first. Throws
/// DomainError on an out-of-range letter.
GSetAut holonomy(const FlatBundle &b, const LoopWord &w);

/// Size of every preimage of a surjective equivariant map with bijective
/// orbit map, which is |ker ξ|. Throws DomainError when the preconditions
/// fail.
std::size_t map_fiber_count(const EquivariantMap &a);

/// A → I_n with aᵢ ↦ i, where aᵢ is the unique point fixed by the stabilizer
/// of i. `action` is an S_n-set on n points over make_symmetric(n).
/// Throws TooSmall for n < 3, NotFaithful for a non-faithful action and
/// DomainError when some stabilizer does not fix exactly one point.
std::vector<std::size_t> sn_labelling(std::size_t n, const GSet &action);

struct SnActionResult
{
  bool ok = false;
  /// On success: the fiber-preserving S_n action, identical on every fiber in
  /// the trivialization.
  std::optional<GSet> action;
  /// On failure: the first loop (0-based) with non-identity clutching.
  std::size_t obstruction_loop = 0;
  std::optional<GSetAut> obstruction;
};
/// For a covering (trivial-group fiber) with n ≥ 3 sheets. Throws TooSmall
/// for n < 3 and DomainError for a fiber with non-trivial group.
SnActionResult sn_action_on_bundle(const FlatBundle &b);

/// Bundles over the circle with fiber G, one row per conjugacy class of Aut(G).
struct CircleClass
{
  GroupHom representative;
  std::size_t class_size = 0;
  std::size_t components = 0;
  bool unit_component_is_circle = false;
};
struct CircleClassification
{
  FiniteGroup group;
  AutGroup aut;
  std::vector<CircleClass> classes;
};
CircleClassification classify_circle(const FiniteGroup &G);

} // namespace spb
