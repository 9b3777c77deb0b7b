#include "spb/limits.hpp"

#include <string>

#include "spb/error.hpp"

namespace spb {

namespace {
Limits g_limits;
}

const Limits &limits() { return g_limits; }

void set_limits(const Limits &l) { g_limits = l; }

void require_within(std::size_t count, std::size_t bound, const char *what)
{
  if (count > bound)
    throw BoundExceeded(std::string(what) + ": " + std::to_string(count) +
                        " exceeds enumeration bound " + std::to_string(bound));
}

} // namespace spb
