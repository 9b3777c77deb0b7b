#pragma once

#include <cstddef>

namespace spb {

/// Desk-scale bounds applied by every brute-force operation.
struct Limits
{
  /// Largest group order for which a Cayley table is built.
  std::size_t max_table_order = 5040;
  /// Largest n accepted by make_symmetric. Note that S_n is still a table
  /// group, so max_table_order caps it as well (8! > 5040).
  std::size_t max_symmetric_degree = 8;
  /// Largest number of candidates any exhaustive enumeration may visit
  /// (frames, Hom-set candidates, automorphism candidates).
  std::size_t max_enumeration = 2'000'000;
};

const Limits &limits();
void set_limits(const Limits &l);

/// Throws BoundExceeded with `what` in the message when `count > bound`.
void require_within(std::size_t count, std::size_t bound, const char *what);

} // namespace spb
