#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace spb {

/// Dense element index 0..order-1. Element 0 need not be the identity.
using Elem = std::uint32_t;

/// A finite group given by its Cayley table.
///
/// FiniteGroup is an immutable handle: copies share the same table, so
/// passing groups by value is cheap. Construction validates the identity,
/// the Latin-square property (hence inverses) and associativity (Light's
/// test over a generating set). satisfies_group_axioms() re-checks all three
/// axioms exhaustively.
class FiniteGroup
{
public:
  /// `mul` is row-major, mul[a * order + b] = a·b.
  FiniteGroup(std::size_t order, std::vector<Elem> mul, std::string label);
  /// Convenience overload for nested tables. Throws DomainError on ragged rows.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>> &mul, std::string label);

  std::size_t order() const { return d_->order; }
  Elem mul(Elem a, Elem b) const { return d_->mul[a * d_->order + b]; }
  Elem inv(Elem a) const { return d_->inv[a]; }
  Elem identity() const { return d_->identity; }
  const std::string &label() const { return d_->label; }

  /// An irredundant generating set, largest element orders first.
  const std::vector<Elem> &generators() const { return d_->generators; }

  std::size_t element_order(Elem a) const;
  bool is_abelian() const;
  /// g·a·g⁻¹
  Elem conjugate(Elem g, Elem a) const { return mul(mul(g, a), inv(g)); }

  /// Same table (labels are ignored).
  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b);

private:
  struct Data
  {
    std::size_t order;
    std::vector<Elem> mul;
    std::vector<Elem> inv;
    Elem identity;
    std::string label;
    std::vector<Elem> generators;
  };
  std::shared_ptr<const Data> d_;
};

/// Exhaustive O(n³) check of associativity, identity and inverses.
bool satisfies_group_axioms(const FiniteGroup &g);

FiniteGroup make_trivial();
/// Z_n under addition; element k is the residue k.
FiniteGroup make_cyclic(std::size_t n);
/// G×H; the pair (a, b) has index a·|H| + b.
FiniteGroup make_direct_product(const FiniteGroup &g, const FiniteGroup &h);
/// S_n; element i is Permutation::unrank(n, i) and a·b = a∘b (b acts first).
FiniteGroup make_symmetric(std::size_t n);

/// A homomorphism of finite groups given by its image table.
/// Construction verifies the homomorphism property.
class GroupHom
{
public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> image);
  static GroupHom identity(const FiniteGroup &g);

  const FiniteGroup &source() const { return source_; }
  const FiniteGroup &target() const { return target_; }
  const std::vector<Elem> &image() const { return image_; }
  Elem operator()(Elem a) const { return image_[a]; }

  friend bool operator==(const GroupHom &a, const GroupHom &b)
  {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.image_ == b.image_;
  }

private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> image_;
};

/// All automorphisms of `g`, sorted by image table (the identity comes first).
/// Generator-image backtracking over g.generators().
std::vector<GroupHom> automorphisms(const FiniteGroup &g);

/// Some isomorphism g -> h, if one exists.
std::optional<GroupHom> find_isomorphism(const FiniteGroup &g, const FiniteGroup &h);

/// Aut(G) materialized as a group under composition; element i of `group`
/// is `elements[i]`, and group.mul(i, j) is elements[i]∘elements[j].
struct AutGroup
{
  FiniteGroup group;
  std::vector<GroupHom> elements;
};
AutGroup aut_group(const FiniteGroup &g);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup &g);

/// Sorted list of elements mapped to the identity.
std::vector<Elem> kernel(const GroupHom &h);

/// f∘g. Requires g.target() == f.source().
GroupHom compose_hom(const GroupHom &f, const GroupHom &g);
bool is_isomorphism(const GroupHom &h);

} // namespace spb
