#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spb/frames.hpp"

namespace spb {

/// An equivariant bijection F -> F with ξ = id.
class GSetAut
{
public:
  /// Throws DomainError unless `table` is a bijective ξ = id equivariant map.
  GSetAut(GSet gset, std::vector<Point> table);
  explicit GSetAut(const EquivariantMap &map);
  static GSetAut identity(const GSet &f);

  const GSet &gset() const { return gset_; }
  const std::vector<Point> &table() const { return table_; }
  Point operator()(Point f) const { return table_[f]; }
  EquivariantMap map() const { return EquivariantMap(gset_, gset_, table_); }

  /// (*this)∘other: apply `other` first.
  GSetAut compose(const GSetAut &other) const;
  GSetAut inverse() const;
  bool is_identity() const;

  friend bool operator==(const GSetAut &a, const GSetAut &b)
  {
    return a.table_ == b.table_ && a.gset_ == b.gset_;
  }

private:
  GSetAut(GSet gset, std::vector<Point> table, bool /*trusted*/);

  GSet gset_;
  std::vector<Point> table_;
};

/// Every automorphism of a free G-set, found by trying all images of the
/// orbit representatives. Sorted by table. Independent of the wreath route.
std::vector<GSetAut> enumerate_automorphisms(const GSet &F);

/// Aut(F) of a free G-set, obtained by conjugating I(G≀X) through the
/// canonical frame: element i is φ_f̃ ∘ I(w_i) ∘ φ_f̃⁻¹ where w_i is element i
/// of the wreath group, and group.mul(i, j) is composition.
struct GSetAutGroup
{
  FiniteGroup group;
  std::vector<GSetAut> elements;
  Frame frame;
};
GSetAutGroup aut_group_of_gset(const GSet &F);

/// C_q(ψ): the permutation of orbits with q∘ψ = C_q(ψ)∘q.
Permutation cq(const GSetAut &psi);

/// ψ_σ: h·f̃(x) ↦ h·f̃(σ(x)). When f̃ is a section of q, C_q(ψ_σ) = σ.
GSetAut section_from_frame(const GSet &F, const Frame &f, const Permutation &sigma);

/// g̃_{ψ,f̃}(x) = [f̃(x) / ψ(f̃(x))]: the inverse of the element translating
/// f̃(x) to ψ(f̃(x)). Throws DomainError unless C_q(ψ) = id.
std::vector<Elem> autq_component(const GSetAut &psi, const Frame &f);
/// Inverse of autq_component for fixed f̃: h·f̃(x) ↦ h·g̃(x)⁻¹·f̃(x).
GSetAut autq_from_component(const GSet &F, const Frame &f, std::span<const Elem> g);

/// I(g̃,σ): (g, x) ↦ (g·g̃(σ(x))⁻¹, σ(x)) on standard_semitorsor(G, n).
GSetAut wreath_to_aut(const WreathElement &w, std::size_t n, const FiniteGroup &G);
/// Inverse of wreath_to_aut. Throws DomainError unless ψ acts on a standard
/// semi-torsor.
WreathElement aut_to_wreath(const GSetAut &psi);

/// Verification of 1 -> Aut(q) -> Aut(F) -> Sym(F/G) -> 1 and its splitting.
struct SesReport
{
  std::size_t aut_order = 0;
  std::size_t autq_order = 0;
  std::size_t sym_order = 0;
  /// ker(C_q) equals the orbit-preserving automorphisms.
  bool kernel_is_autq = false;
  bool cq_homomorphism = false;
  bool cq_surjective = false;
  /// σ ↦ ψ_σ through `frame` is a homomorphism with C_q∘s = id.
  bool section_splits = false;
  /// The brute-force Aut(F) and the wreath-conjugated Aut(F) coincide.
  bool matches_wreath_route = false;
  /// |Aut(q)| = |G|^n.
  bool autq_is_product = false;
  Frame frame;

  bool ok() const
  {
    return kernel_is_autq && cq_homomorphism && cq_surjective && section_splits &&
           matches_wreath_route && autq_is_product && aut_order == autq_order * sym_order;
  }
};
SesReport ses_report(const GSet &F);

} // namespace spb
