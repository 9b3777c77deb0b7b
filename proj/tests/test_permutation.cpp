#include <gtest/gtest.h>

#include <set>

#include "spb/error.hpp"
#include "spb/permutation.hpp"

using namespace spb;

TEST(Permutation, RankUnrankIsBijective)
{
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::size_t r = 0; r < factorial(n); ++r) {
      Permutation p = Permutation::unrank(n, r);
      EXPECT_EQ(p.rank(), r);
      seen.insert(p.images());
    }
    EXPECT_EQ(seen.size(), factorial(n));
  }
}

TEST(Permutation, AllIsLexicographic)
{
  auto all = Permutation::all(4);
  ASSERT_EQ(all.size(), 24u);
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    EXPECT_LT(all[i].images(), all[i + 1].images());
  EXPECT_TRUE(all.front().is_identity());
}

TEST(Permutation, ComposeAppliesRightFactorFirst)
{
  Permutation a({1, 2, 0});
  Permutation b({1, 0, 2});
  Permutation ab = a.compose(b);
  for (std::uint32_t x = 0; x < 3; ++x)
    EXPECT_EQ(ab(x), a(b(x)));
  EXPECT_TRUE(a.compose(a.inverse()).is_identity());
}

TEST(Permutation, CycleStringsAndOrder)
{
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "id");
  EXPECT_EQ(Permutation::cycle(3).to_cycle_string(), "(1 2 3)");
  EXPECT_EQ(Permutation::transposition(4, 1, 3).to_cycle_string(), "(2 4)");
  EXPECT_EQ(Permutation({1, 0, 3, 4, 2}).order(), 6u);
}

TEST(Permutation, RejectsNonBijections)
{
  EXPECT_THROW(Permutation({0, 0, 1}), DomainError);
  EXPECT_THROW(Permutation({0, 3, 1}), DomainError);
}

TEST(Permutation, SaturatingArithmetic)
{
  EXPECT_EQ(saturating_pow(4, 3), 64u);
  EXPECT_EQ(saturating_factorial(5), 120u);
  EXPECT_EQ(saturating_pow(1000, 100), static_cast<std::size_t>(-1));
}
