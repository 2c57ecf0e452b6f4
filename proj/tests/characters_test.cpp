#include "hookblock/characters.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace hookblock {
namespace {

constexpr Int kPrimes[] = {2, 3, 5, 7};

TEST(Kostka, Examples)
{
  EXPECT_EQ(kostka(Partition({2, 1}), {1, 1, 1}), 2);
  EXPECT_EQ(kostka(Partition({3, 2}), {3, 2}), 1);
  EXPECT_EQ(kostka(hook_partition(5, 2), {1, 1, 1, 1, 1}), 6);
  EXPECT_THROW(kostka(Partition({2, 1}), {1, 1}), std::invalid_argument);
  EXPECT_THROW(kostka(Partition({2, 1}), {4, -1}), std::invalid_argument);
}

TEST(Kostka, MatchesBruteForceUpToSix)
{
  for(Int r = 1; r <= 6; ++r)
    for(const Partition &lambda : partitions_of(r))
      for(const Partition &mu : partitions_of(r))
        {
          std::vector<Int> content = mu.parts();
          // A non-sorted content with interior zeros.
          std::reverse(content.begin(), content.end());
          content.insert(content.begin() + 1, 0);
          EXPECT_EQ(kostka(lambda, content),
                    oracle::brute_force_kostka(lambda, content))
            << lambda.to_string() << " / " << mu.to_string();
        }
}

TEST(Kostka, TriangularAndSymmetricUpToEight)
{
  for(Int r = 1; r <= 8; ++r)
    for(const Partition &lambda : partitions_of(r))
      for(const Partition &mu : partitions_of(r))
        {
          const Int k = kostka(lambda, mu.parts());
          if(!dominates(lambda, mu))
            {
              EXPECT_EQ(k, 0) << lambda.to_string() << " / " << mu.to_string();
            }
          if(lambda == mu)
            {
              EXPECT_EQ(k, 1);
            }
          // W-symmetry: every rearrangement of mu (exhaustive to r = 6, the
          // reversal above that).
          std::vector<Int> content = mu.parts();
          std::sort(content.begin(), content.end());
          if(r <= 6)
            do
              EXPECT_EQ(kostka(lambda, content), k);
            while(std::next_permutation(content.begin(), content.end()));
          else
            EXPECT_EQ(kostka(lambda, content), k);
        }
}

TEST(WeylCharacter, Examples)
{
  const CharacterElement det = weyl_character(Partition({1, 1, 1}), 3);
  EXPECT_EQ(det.mults().size(), 1u);
  EXPECT_EQ(det.mult(Partition({1, 1, 1})), 1);
  EXPECT_EQ(det.dim(), 1);

  const CharacterElement adj = weyl_character(Partition({2, 1}), 3);
  EXPECT_EQ(adj.mult(Partition({2, 1})), 1);
  EXPECT_EQ(adj.mult(Partition({1, 1, 1})), 2);
  EXPECT_EQ(adj.dim(), 8);

  const CharacterElement sym5 = weyl_character(Partition{5}, 5);
  EXPECT_EQ(sym5.mults().size(), 7u);
  for(const Partition &mu : partitions_of(5))
    EXPECT_EQ(sym5.mult(mu), 1);

  EXPECT_THROW(weyl_character(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST(WeylCharacter, DimensionFormulaAgreesUpToEight)
{
  for(Int r = 1; r <= 8; ++r)
    for(const Partition &lambda : partitions_of(r))
      {
        const auto n = static_cast<std::size_t>(r);
        EXPECT_EQ(weyl_character(lambda, n).dim(), oracle::weyl_dimension(lambda, n))
          << lambda.to_string();
      }
}

TEST(WeylCharacter, SatisfiesTheWeylCharacterFormula)
{
  // a_rho * ch Delta(lambda) = a_(lambda + rho) as polynomials.
  for(std::size_t n = 1; n <= 4; ++n)
    for(Int r = 0; r <= 5; ++r)
      for(const Partition &lambda : partitions_of(r, n))
        {
          oracle::Poly ch;
          for(const auto &[weight, m] : weyl_character(lambda, n).expand())
            oracle::add_into(ch, weight.coords(), m);
          std::vector<Int> shifted = lambda.padded(n);
          const std::vector<Int> rho_v = oracle::rho_vector(n);
          for(std::size_t k = 0; k < n; ++k)
            shifted[k] += rho_v[k];
          EXPECT_EQ(oracle::multiply(oracle::alternant(rho_v), ch),
                    oracle::alternant(shifted))
            << lambda.to_string() << " n=" << n;
        }
}

TEST(ChiStraighten, Examples)
{
  const StraightenedTerm dominant = chi_straighten(Weight({2, 1, 0}));
  EXPECT_EQ(dominant.sign, 1);
  EXPECT_EQ(*dominant.dominant, Weight({2, 1, 0}));

  // (0,1,0) + rho = (2,2,0).
  EXPECT_EQ(chi_straighten(Weight({0, 1, 0})).sign, 0);

  const StraightenedTerm swapped = chi_straighten(Weight({1, 3, 0}));
  EXPECT_EQ(swapped.sign, -1);
  EXPECT_EQ(*swapped.dominant, Weight({2, 2, 0}));
  EXPECT_TRUE(swapped.polynomial);

  // (-3,0,0) + rho = (-1,1,0) -> (1,0,-1) by an even permutation.
  const StraightenedTerm negative = chi_straighten(Weight({-3, 0, 0}));
  EXPECT_EQ(negative.sign, 1);
  EXPECT_EQ(*negative.dominant, Weight({-1, -1, -1}));
  EXPECT_FALSE(negative.polynomial);
}

TEST(ChiStraighten, AgreesWithAlternants)
{
  // chi(mu) = sign chi(nu) means a_(mu+rho) = sign a_(nu+rho).
  std::vector<Int> c(3, -2);
  for(;;)
    {
      const Weight mu(c);
      const StraightenedTerm term = chi_straighten(mu);
      std::vector<Int> shifted = c;
      for(std::size_t k = 0; k < 3; ++k)
        shifted[k] += static_cast<Int>(2 - k);
      const oracle::Poly lhs = oracle::alternant(shifted);
      if(term.sign == 0)
        EXPECT_TRUE(lhs.empty());
      else
        {
          std::vector<Int> target = term.dominant->coords();
          for(std::size_t k = 0; k < 3; ++k)
            target[k] += static_cast<Int>(2 - k);
          oracle::Poly rhs = oracle::alternant(target);
          for(auto &entry : rhs)
            entry.second *= term.sign;
          EXPECT_EQ(lhs, rhs) << mu.to_string();
          EXPECT_TRUE(term.dominant->is_dominant());
          // Idempotent on its output.
          const StraightenedTerm again = chi_straighten(*term.dominant);
          EXPECT_EQ(again.sign, 1);
          EXPECT_EQ(*again.dominant, *term.dominant);
        }
      std::size_t k = 0;
      while(k < c.size() && c[k] == 4)
        c[k++] = -2;
      if(k == c.size())
        break;
      ++c[k];
    }
}

TEST(CharacterElement, Arithmetic)
{
  EXPECT_EQ(CharacterElement(3).dim(), 0);
  EXPECT_TRUE(CharacterElement(3).is_zero());
  EXPECT_THROW(weyl_character(Partition({2}), 2) + weyl_character(Partition({2}), 3),
               std::invalid_argument);
  const CharacterElement a = weyl_character(Partition({2, 1}), 3);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a + a).dim(), 16);
  EXPECT_EQ((3 * a).mult(Partition({1, 1, 1})), 6);
  EXPECT_FALSE((CharacterElement(3) - a).is_nonnegative());
  EXPECT_EQ(a.expand().size(), 7u); // six permutations of (2,1,0) plus (1,1,1)
}

TEST(WeylCharacterCombination, VirtualExpansionIsGuarded)
{
  WeylCharacterCombination combo(3);
  combo.add_term(Partition({1, 1, 1}), 1);
  combo.add_term(Partition({2, 1}), -1);
  EXPECT_THROW(to_character(combo), std::domain_error);
  EXPECT_EQ(to_character(combo, Virtual::allowed).dim(), -7);
  combo.add_term(Partition({2, 1}), 1);
  EXPECT_EQ(combo.terms().size(), 1u);
}

TEST(HookSimpleCharacter, Examples)
{
  const CharacterElement l21 = hook_simple_character(3, 3, 1);
  EXPECT_EQ(l21, weyl_character(Partition({2, 1}), 3)
                   - weyl_character(Partition({1, 1, 1}), 3));
  EXPECT_EQ(l21.dim(), 7);
  for(Int p : kPrimes)
    for(std::size_t n = 2; n <= static_cast<std::size_t>(p) + 2; ++n)
      {
        const Int top = hook_range_top(p, n);
        EXPECT_EQ(hook_simple_character(p, n, top),
                  weyl_character(hook_partition(p, top), n));
      }
  EXPECT_THROW(hook_simple_character(3, 2, 2), std::out_of_range);
  EXPECT_THROW(hook_simple_character(4, 4, 1), std::invalid_argument);
}

TEST(HookSimpleCharacter, NonnegativeForAllHooks)
{
  for(Int p : kPrimes)
    for(std::size_t n = 1; n <= static_cast<std::size_t>(p) + 2; ++n)
      for(Int i = 0; i <= hook_range_top(p, n); ++i)
        EXPECT_TRUE(hook_simple_character(p, n, i).is_nonnegative())
          << "p=" << p << " n=" << n << " i=" << i;
}

TEST(HookSimpleCharacter, OneRowIsAFrobeniusTwist)
{
  // L((p)) is the Frobenius twist of the natural module: dimension n, and
  // its only dominant weight is (p).
  for(Int p : kPrimes)
    for(std::size_t n = 2; n <= static_cast<std::size_t>(p) + 2; ++n)
      {
        const CharacterElement ch = hook_simple_character(p, n, 0);
        EXPECT_EQ(ch.dim(), static_cast<Int>(n));
        EXPECT_EQ(ch.mults().size(), 1u);
        EXPECT_EQ(ch.mult(Partition{p}), 1);
      }
}

TEST(HookSimpleCharacter, AllOnesWeightIsAlternatingBinomialSum)
{
  // mult of (1^p) in ch L(lambda^i) = sum_{j>=i} (-1)^(j-i) C(p-1, j)
  // = C(p-2, i-1), which is 0 at i = 0.
  for(Int p : kPrimes)
    for(std::size_t n : {static_cast<std::size_t>(p), static_cast<std::size_t>(p) + 2})
      for(Int i = 0; i <= p - 1; ++i)
        {
          const Partition ones(std::vector<Int>(static_cast<std::size_t>(p), 1));
          Int alternating = 0;
          for(Int j = i; j <= p - 1; ++j)
            alternating += ((j - i) % 2 ? -1 : 1) * checked::binomial(p - 1, j);
          EXPECT_EQ(alternating, checked::binomial(p - 2, i - 1));
          EXPECT_EQ(hook_simple_character(p, n, i).mult(ones), alternating);
        }
}

TEST(HookSimpleCharacter, WeylCharacterSplitsIntoTwoSimples)
{
  for(Int p : kPrimes)
    for(std::size_t n = 2; n <= static_cast<std::size_t>(p) + 2; ++n)
      {
        const Int top = hook_range_top(p, n);
        for(Int i = 0; i < top; ++i)
          EXPECT_EQ(weyl_character(hook_partition(p, i), n),
                    hook_simple_character(p, n, i)
                      + hook_simple_character(p, n, i + 1));
      }
}

} // namespace
} // namespace hookblock
