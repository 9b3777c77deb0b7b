#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "spb/bundles.hpp"
#include "spb/permutation.hpp"

namespace spb {

using Rational = boost::rational<std::int64_t>;

/// An element of U(1) as an exact rotation number in [0, 1).
class Angle
{
public:
  Angle() = default;
  /// Reduces p/q modulo 1. Throws DomainError for q = 0.
  Angle(std::int64_t p, std::int64_t q = 1);
  explicit Angle(const Rational &r);
  /// Accepts "p/q" or "p" with optional sign.
  static Angle parse(std::string_view text);

  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }
  const Rational &value() const { return value_; }
  bool is_zero() const { return value_.numerator() == 0; }
  std::string to_string() const;

  friend Angle operator+(const Angle &a, const Angle &b) { return Angle(a.value_ + b.value_); }
  friend Angle operator-(const Angle &a, const Angle &b) { return Angle(a.value_ - b.value_); }
  Angle operator-() const { return Angle(-value_); }
  /// z ↦ z^q.
  Angle power(std::int64_t q) const { return Angle(value_ * q); }

  friend bool operator==(const Angle &a, const Angle &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Angle &a, const Angle &b)
  {
    if (a.value_ < b.value_)
      return std::strong_ordering::less;
    if (b.value_ < a.value_)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  Rational value_{0};
};

/// (g̃, σ) in U(1)≀I_k.
struct U1Wreath
{
  std::vector<Angle> angles;
  Permutation sigma;

  std::size_t size() const { return angles.size(); }
  bool operator==(const U1Wreath &) const = default;
};

/// A point of ⊔ᵏ S¹: rotation number on sheet `slot`.
struct FiberPoint
{
  Angle angle;
  std::size_t slot = 0;

  bool operator==(const FiberPoint &) const = default;
};

/// An element of u(1)^k.
struct AlgebraVector
{
  std::vector<Rational> entries;

  bool operator==(const AlgebraVector &) const = default;
};

U1Wreath u1wreath_identity(std::size_t k);
/// Throws DomainError when the angle and permutation arities differ.
void validate(const U1Wreath &w);
/// (g̃,σ)·(g̃′,σ′) = (g̃ + g̃′∘σ⁻¹, σσ′).
U1Wreath u1wreath_mul(const U1Wreath &a, const U1Wreath &b);
U1Wreath u1wreath_inv(const U1Wreath &a);

/// (g̃,σ)·(θ, x) = (θ + g̃(σ(x)), σ(x)).
FiberPoint act_point(const U1Wreath &w, const FiberPoint &p);

/// A flat U(1)-semi-principal bundle over a wedge of circles with k sheets,
/// given by the holonomy of each loop.
class U1FlatBundle
{
public:
  /// Throws DomainError for k = 0, no loops or malformed generators.
  U1FlatBundle(std::size_t k, std::vector<U1Wreath> generators);

  std::size_t k() const { return k_; }
  std::size_t loops() const { return generators_.size(); }
  const std::vector<U1Wreath> &generators() const { return generators_; }

private:
  std::size_t k_;
  std::vector<U1Wreath> generators_;
};

/// The winding torus: k sheets glued by (angles, (1 2 … k)), one loop.
U1FlatBundle u1_winding_bundle(std::size_t k, std::vector<Angle> angles = {});

/// Product over the word with the first letter acting first. Throws
/// DomainError on an out-of-range letter.
U1Wreath holonomy_u1(const U1FlatBundle &b, const LoopWord &w);
/// The horizontal lift of the loop word starting at `start`, evaluated at its end.
FiberPoint transport(const U1FlatBundle &b, const LoopWord &w, const FiberPoint &start);

/// A basis of ⊔ᵏ S¹: one point on each sheet.
struct U1Frame
{
  std::vector<FiberPoint> points;

  bool operator==(const U1Frame &) const = default;
};
/// Throws DomainError unless the slots form a permutation of I_k.
void validate(const U1Frame &f, std::size_t k);
/// The frame x ↦ m·(0, x). Every basis is of this form for exactly one m.
U1Frame frame_of(const U1Wreath &m);
/// The m with frame_of(m) = f.
U1Wreath wreath_of(const U1Frame &f);
/// Structure action on frames: result[x] = g̃(x)·f[σ⁻¹(x)].
U1Frame act_frame(const U1Wreath &w, const U1Frame &f);

/// Holonomy of the frame connection. Under f ↔ wreath_of(f) it acts by left
/// multiplication, and it coincides with holonomy_u1.
U1Wreath frame_holonomy(const U1FlatBundle &b, const LoopWord &w);
/// Transport of a frame, computed entry by entry.
U1Frame transport_frame(const U1FlatBundle &b, const LoopWord &w, const U1Frame &start);

/// Ad_(g̃,σ)(v) = v∘σ⁻¹; the angle part acts trivially.
AlgebraVector adjoint(const U1Wreath &w, const AlgebraVector &v);

/// Pushforward along ξ: z ↦ z^q, applied to every generator.
U1Wreath push_wreath(const U1Wreath &w, std::int64_t q);
U1FlatBundle pushforward(const U1FlatBundle &b, std::int64_t q);

/// Discrete evaluation of ω along a sampled path on one sheet: the forward
/// differences [γ(t+h) / γ(t)] / h, with the division taken in (−1/2, 1/2].
struct DivisionReport
{
  std::size_t slot = 0;
  std::vector<Rational> rates;
  /// Set when every forward difference is the same.
  std::optional<Rational> uniform_rate;
};
/// Throws NoQuotient for samples on different sheets and DomainError for
/// fewer than two samples or a non-positive step.
DivisionReport division_form_check(const std::vector<FiberPoint> &path, const Rational &step);

/// Samples t ↦ exp(tY)·start at t = 0, h, 2h, …, (count−1)h.
std::vector<FiberPoint> exponential_path(const FiberPoint &start, const Rational &rate,
                                         const Rational &step, std::size_t count);

std::string to_string(const Rational &r);

} // namespace spb
