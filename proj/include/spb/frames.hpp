#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spb/gset.hpp"
#include "spb/permutation.hpp"

namespace spb {

/// A tuple f̃: I_n -> F. Stored frames satisfy the basis criterion.
struct Frame
{
  std::vector<Point> entries;

  std::size_t size() const { return entries.size(); }
  Point operator[](std::size_t x) const { return entries[x]; }
  auto operator<=>(const Frame &) const = default;
};

/// Element (g̃, σ) of the wreath product G≀I_n.
struct WreathElement
{
  std::vector<Elem> g;
  Permutation sigma;

  bool operator==(const WreathElement &) const = default;
};

WreathElement wreath_identity(const FiniteGroup &G, std::size_t n);
/// (g̃,σ)·(g̃′,σ′) = (g̃·(g̃′∘σ⁻¹), σσ′).
WreathElement wreath_mul(const FiniteGroup &G, const WreathElement &a, const WreathElement &b);
WreathElement wreath_inv(const FiniteGroup &G, const WreathElement &a);

/// ((g̃,σ), t) ↦ g̃·(t∘σ⁻¹), i.e. result[x] = g̃(x)·t[σ⁻¹(x)].
std::vector<Point> wreath_act(const GSet &F, const WreathElement &w, std::span<const Point> t);
Frame wreath_act(const GSet &F, const WreathElement &w, const Frame &f);

/// Action of G≀I_n on G×I_n: (g̃,σ)·(h,x) = (g̃(σ(x))·h, σ(x)).
std::pair<Elem, std::size_t> wreath_act_point(const FiniteGroup &G, const WreathElement &w,
                                              Elem h, std::size_t x);

/// q∘t is a bijection I_n -> F/G. Throws NotFree on a non-free F.
bool is_basis(const GSet &F, std::span<const Point> t);

/// The frame whose entries are the orbit representatives (a section of q).
Frame canonical_frame(const GSet &F);

/// φ_f̃(g, x) = g·f̃(x) as a map standard_semitorsor(G, n) -> F, with its inverse
/// f ↦ ([f / f̃(x)], x) where x = (q∘f̃)⁻¹(q(f)).
struct AssociatedMap
{
  EquivariantMap forward;
  EquivariantMap inverse;
};
/// Throws DomainError if `f` is not a basis of F.
AssociatedMap associated_map(const GSet &F, const Frame &f);

/// All bases of a free G-set, in lexicographic order of entry tuples.
class FrameSpace
{
public:
  FrameSpace(GSet base, std::vector<Frame> frames);

  const GSet &base() const { return base_; }
  const std::vector<Frame> &frames() const { return frames_; }
  std::size_t size() const { return frames_.size(); }
  std::size_t orbit_count() const { return base_.orbits().orbit_count; }
  const Frame &operator[](std::size_t i) const { return frames_[i]; }
  std::optional<std::size_t> index_of(const Frame &f) const;
  /// Throws DomainError when `f` is not in this space.
  std::size_t require_index(const Frame &f) const;

private:
  GSet base_;
  std::vector<Frame> frames_;
};

/// Throws NotFree or BoundExceeded.
FrameSpace enumerate_frames(const GSet &F);

/// The unique w with w·f1 = f2: σ = (q∘f2)⁻¹∘(q∘f1), then slot-wise division.
WreathElement frame_divide(const FrameSpace &fs, const Frame &f2, const Frame &f1);

/// G≀I_n as a table group. Elements are ordered by rank of σ, then
/// lexicographically by g̃; group.mul agrees with wreath_mul.
class WreathGroup
{
public:
  WreathGroup(const FiniteGroup &base, std::size_t n);

  const FiniteGroup &base() const { return base_; }
  std::size_t degree() const { return n_; }
  const FiniteGroup &group() const { return group_; }
  const std::vector<WreathElement> &elements() const { return elements_; }
  const WreathElement &operator[](Elem i) const { return elements_[i]; }
  Elem index_of(const WreathElement &w) const;

private:
  static FiniteGroup build(const FiniteGroup &base, std::size_t n,
                           std::vector<WreathElement> &elements);

  FiniteGroup base_;
  std::size_t n_;
  std::vector<WreathElement> elements_;
  FiniteGroup group_;
};

/// The frame space as a G≀I_n-set (a torsor by construction).
GSet frame_torsor(const FrameSpace &fs, const WreathGroup &wg);

/// Whether debug-only cross-checks run.
enum class Verification
{
  off,
  on
};
#ifdef NDEBUG
inline constexpr Verification default_verification = Verification::off;
#else
inline constexpr Verification default_verification = Verification::on;
#endif

/// α!: f̃ ↦ α∘f̃ between frame spaces.
struct FrameMap
{
  FrameSpace source;
  FrameSpace target;
  std::vector<std::size_t> image;

  Frame operator()(const Frame &f) const { return target[image[source.require_index(f)]]; }
};

/// Throws OrbitObstruction unless α/ is a bijection. With Verification::on,
/// also checks α!(w·f̃) = ξ!(w)·α!(f̃) for every wreath element and frame and
/// throws Error on failure.
FrameMap frame_functor_map(const EquivariantMap &a, Verification v = default_verification);

/// Exhaustive ξ!-equivariance check of a frame map, ξ! = (ξ^X, id).
bool check_frame_equivariance(const EquivariantMap &a, const FrameMap &lifted);

/// F recovered from Fr(F) by quotienting the stabilizer of one slot.
struct Reconstruction
{
  /// Classes of frames under G≀(I_n − slot), with G acting on the slot.
  GSet quotient;
  /// Frame index -> class index.
  std::vector<std::size_t> class_of_frame;
  /// G-isomorphism quotient -> standard_semitorsor(G, n), in coordinates of
  /// `reference`.
  EquivariantMap witness;
  Frame reference;
};
Reconstruction reconstruct_semitorsor(const FrameSpace &fs, std::size_t slot);

struct EquivalenceReport
{
  /// |Hom(F, F2)| in semi-torsors: ξ = id, bijective orbit map.
  std::size_t semitorsor_homs = 0;
  /// |Hom(Fr F, Fr F2)| as G≀I_n-torsors.
  std::size_t torsor_homs = 0;
  /// α ↦ α! is a bijection between the two Hom-sets.
  bool bijective = false;
};
/// Both inputs must be free over the same group.
EquivalenceReport check_equivalence(const GSet &F, const GSet &F2);

} // namespace spb
