#include "hookblock/jantzen.hpp"

#include <gtest/gtest.h>

namespace hookblock {
namespace {

constexpr Int kPrimes[] = {2, 3, 5, 7};

TEST(JantzenSum, AdjointInCharacteristicThree)
{
  const JantzenSum sum = jantzen_sum(Partition({2, 1}), 3, 3);
  ASSERT_EQ(sum.terms.terms().size(), 1u);
  EXPECT_EQ(sum.terms.coefficient(Partition({1, 1, 1})), 1);
  ASSERT_EQ(sum.ledger.size(), 1u);
  const JantzenTerm &term = sum.ledger.front();
  EXPECT_EQ(term.i, 1u);
  EXPECT_EQ(term.j, 3u);
  EXPECT_EQ(term.m, 1);
  EXPECT_EQ(term.valuation, 1);
  EXPECT_EQ(term.sign, 1);
  EXPECT_EQ(*term.straightened, Partition({1, 1, 1}));
}

TEST(JantzenSum, OneRowInCharacteristicFive)
{
  // (5) + rho = (9,3,2,1,0); roots eps_1 - eps_j for j = 2..5 each admit
  // m p = 5 once, giving chi(lambda^1) - chi(lambda^2) + chi(lambda^3)
  // - chi(lambda^4).
  const JantzenSum sum = jantzen_sum(Partition{5}, 5, 5);
  WeylCharacterCombination expected(5);
  for(Int i = 1; i <= 4; ++i)
    expected.add_term(hook_partition(5, i), i % 2 ? 1 : -1);
  EXPECT_EQ(sum.terms, expected);
}

TEST(JantzenSum, ValuationCountsHigherPowers)
{
  // (9) for p = 3, n = 2: lambda + rho = (10, 0).
  //   m p = 3: (3, 7) -> -chi(6,3)
  //   m p = 6: (6, 4) -> +chi(5,4)
  //   m p = 9: (9, 1) -> +chi(8,1), valuation 2
  const JantzenSum sum = jantzen_sum(Partition{9}, 2, 3);
  ASSERT_EQ(sum.ledger.size(), 3u);
  EXPECT_EQ(sum.ledger[2].valuation, 2);
  EXPECT_EQ(sum.ledger[0].sign, -1);
  EXPECT_EQ(sum.terms.terms().size(), 3u);
  EXPECT_EQ(sum.terms.coefficient(Partition({8, 1})), 2);
  EXPECT_EQ(sum.terms.coefficient(Partition({6, 3})), -1);
  EXPECT_EQ(sum.terms.coefficient(Partition({5, 4})), 1);
}

TEST(JantzenSum, DominatedTermsOnly)
{
  for(Int p : kPrimes)
    for(std::size_t n = 1; n <= 5; ++n)
      for(Int r = 0; r <= 8; ++r)
        for(const Partition &lambda : partitions_of(r, n))
          {
            const JantzenSum sum = jantzen_sum(lambda, n, p);
            for(const auto &[nu, c] : sum.terms.terms())
              {
                EXPECT_NE(nu, lambda);
                EXPECT_EQ(nu.size(), lambda.size());
                EXPECT_TRUE(dominates(lambda, nu));
              }
          }
}

TEST(JantzenSum, VanishesBelowP)
{
  // Delta(lambda) is simple for |lambda| < p. Raw terms can occur (the
  // reflection fits under the pairing) but they straighten to zero.
  for(Int p : {2, 3, 5})
    for(std::size_t n = 1; n <= 5; ++n)
      for(Int r = 0; r < p; ++r)
        for(const Partition &lambda : partitions_of(r, n))
          {
            const JantzenSum sum = jantzen_sum(lambda, n, p);
            EXPECT_TRUE(to_character(sum.terms, Virtual::allowed).is_zero())
              << lambda.to_string() << " n=" << n << " p=" << p;
          }
}

TEST(NextHookInJantzenSum, Examples)
{
  EXPECT_TRUE(verify_lemma_A(3, 3, 1));
  for(Int i = 0; i <= 3; ++i)
    EXPECT_TRUE(verify_lemma_A(5, 5, i));
  EXPECT_TRUE(verify_lemma_A(2, 2, 0));
  EXPECT_TRUE(jantzen_sum(Partition{2}, 2, 2).terms.coefficient(Partition({1, 1})) >= 1);
  EXPECT_THROW(verify_lemma_A(3, 3, 2), std::out_of_range);
}

TEST(NextHookInJantzenSum, HoldsForAllSmallCases)
{
  for(Int p : kPrimes)
    for(std::size_t n = 2; n <= static_cast<std::size_t>(p); ++n)
      for(Int i = 0; i < hook_range_top(p, n); ++i)
        EXPECT_TRUE(verify_lemma_A(p, n, i)) << "p=" << p << " n=" << n << " i=" << i;
}

TEST(JantzenSum, HookSumIsAMultipleOfTheNextSimple)
{
  for(Int p : kPrimes)
    for(std::size_t n = 2; n <= static_cast<std::size_t>(p) + 2; ++n)
      {
        const Int top = hook_range_top(p, n);
        for(Int i = 0; i <= top; ++i)
          {
            const CharacterElement sum = to_character(
              jantzen_sum(hook_partition(p, i), n, p).terms, Virtual::allowed);
            if(i == top)
              {
                // Delta(lambda^top) is simple.
                EXPECT_TRUE(sum.is_zero()) << "p=" << p << " n=" << n;
                continue;
              }
            const CharacterElement next = hook_simple_character(p, n, i + 1);
            const Int k = sum.mult(hook_partition(p, i + 1));
            EXPECT_GE(k, 1);
            EXPECT_EQ(sum, k * next) << "p=" << p << " n=" << n << " i=" << i;
          }
      }
}

} // namespace
} // namespace hookblock
