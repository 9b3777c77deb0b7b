#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spb {

/// A bijection of I_n = {0, ..., n-1}, stored as its forward image table.
/// The inverse is always computed, never cached.
class Permutation
{
public:
  Permutation() = default;

  /// Throws DomainError if `images` is not a bijection of I_n.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  /// The cycle x -> x + 1 (mod n), written (1 2 ... n) in 1-based notation.
  static Permutation cycle(std::size_t n);
  static Permutation transposition(std::size_t n, std::uint32_t a, std::uint32_t b);
  /// Inverse of rank(): permutations of I_n ranked lexicographically by image table.
  static Permutation unrank(std::size_t n, std::size_t rank);
  /// Every permutation of I_n in lexicographic order of image tables.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t> &images() const { return images_; }

  /// (*this)∘other: apply `other` first.
  Permutation compose(const Permutation &other) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t rank() const;
  std::size_t order() const;

  /// 1-based cycle notation, e.g. "(1 2)(3 4)"; identity prints as "id".
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<std::uint32_t> images_;
};

std::size_t factorial(std::size_t n);

/// n! with saturation at SIZE_MAX instead of overflow.
std::size_t saturating_factorial(std::size_t n);
/// base^exp with saturation at SIZE_MAX instead of overflow.
std::size_t saturating_pow(std::size_t base, std::size_t exp);
std::size_t saturating_mul(std::size_t a, std::size_t b);

} // namespace spb
