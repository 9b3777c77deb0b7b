#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spb/transport.hpp"

namespace spb::verify {

inline constexpr std::uint64_t default_seed = 0x5eed5b1dULL;

struct SuiteOptions
{
  std::size_t max_group = 4;
  std::size_t max_orbits = 3;
  /// Restrict to one group / one orbit count.
  std::optional<FiniteGroup> group;
  std::optional<std::size_t> orbits;
  std::uint64_t seed = default_seed;
};

struct FixtureResult
{
  FixtureResult() = default;
  explicit FixtureResult(std::string name) : fixture(std::move(name)) {}

  std::string fixture;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// First failure, or a summary on success.
  std::string detail;

  void expect(bool ok, const std::string &what);
};

struct SuiteResult
{
  std::string suite;
  std::vector<FixtureResult> fixtures;

  std::size_t checks() const;
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

const std::vector<std::string> &suite_names();
/// Throws SchemaError for an unknown suite.
SuiteResult run_suite(std::string_view name, const SuiteOptions &options);

/// Every group of order ≤ 4 up to isomorphism (Z1, Z2, Z3, Z4, Z2×Z2), then
/// cyclic groups, Z2×Z3 and S3 for larger bounds.
std::vector<FiniteGroup> fixture_groups(std::size_t max_order);
/// The same G-set with points renamed: p ↦ perm[p].
GSet relabel(const GSet &F, const std::vector<Point> &perm);
/// standard_semitorsor(G, n) and a randomly relabelled copy.
std::vector<GSet> free_fixtures(const FiniteGroup &G, std::size_t n, std::mt19937_64 &rng);
/// Random U(1) bundles with k ≤ max_k sheets and denominators ≤ 12, plus the
/// winding models.
std::vector<U1FlatBundle> u1_fixtures(std::size_t max_k, std::mt19937_64 &rng);
Angle random_angle(std::mt19937_64 &rng, std::int64_t max_denominator = 12);
U1Wreath random_u1wreath(std::size_t k, std::mt19937_64 &rng);
/// All words of length ≤ max_length over m loops, shortest first.
std::vector<LoopWord> all_words(std::size_t m, std::size_t max_length);

} // namespace spb::verify
