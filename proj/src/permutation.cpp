#include "spb/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "spb/error.hpp"

namespace spb {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (auto y : images_) {
    if (y >= images_.size() || seen[y])
      throw DomainError("not a permutation of I_" + std::to_string(images_.size()));
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n)
{
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

Permutation Permutation::cycle(std::size_t n)
{
  Permutation p;
  p.images_.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    p.images_[x] = static_cast<std::uint32_t>((x + 1) % n);
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::uint32_t a, std::uint32_t b)
{
  if (a >= n || b >= n)
    throw DomainError("transposition point out of range");
  Permutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::unrank(std::size_t n, std::size_t rank)
{
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  Permutation p;
  p.images_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t f = factorial(n - 1 - i);
    std::size_t k = rank / f;
    rank %= f;
    p.images_.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return p;
}

std::vector<Permutation> Permutation::all(std::size_t n)
{
  std::vector<Permutation> out;
  Permutation p = identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images_.begin(), p.images_.end()));
  return out;
}

Permutation Permutation::compose(const Permutation &other) const
{
  if (other.size() != size())
    throw Mismatch("composing permutations of different degree");
  Permutation p;
  p.images_.resize(size());
  for (std::size_t x = 0; x < size(); ++x)
    p.images_[x] = images_[other.images_[x]];
  return p;
}

Permutation Permutation::inverse() const
{
  Permutation p;
  p.images_.resize(size());
  for (std::size_t x = 0; x < size(); ++x)
    p.images_[images_[x]] = static_cast<std::uint32_t>(x);
  return p;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

std::size_t Permutation::rank() const
{
  // Lehmer code in the factorial number system.
  std::size_t r = 0;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (images_[j] < images_[i])
        ++smaller;
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

std::size_t Permutation::order() const
{
  std::size_t ord = 1;
  std::vector<bool> seen(size(), false);
  for (std::size_t x = 0; x < size(); ++x) {
    if (seen[x])
      continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycle_string() const
{
  std::string out;
  std::vector<bool> seen(size(), false);
  for (std::size_t x = 0; x < size(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    out += '(';
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x)
        out += ' ';
      out += std::to_string(y + 1);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

std::size_t factorial(std::size_t n)
{
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

std::size_t saturating_mul(std::size_t a, std::size_t b)
{
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_factorial(std::size_t n)
{
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f = saturating_mul(f, i);
  return f;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp)
{
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i)
    r = saturating_mul(r, base);
  return r;
}

} // namespace spb
