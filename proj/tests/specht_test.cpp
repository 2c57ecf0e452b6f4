#include "hookblock/mullineux.hpp"
#include "hookblock/specht.hpp"

#include <gtest/gtest.h>

#include <random>

namespace hookblock {
namespace {

constexpr Int kPrimes[] = {2, 3, 5, 7};

// Rank by brute force: the largest k with a nonzero k x k minor mod p.
Int minor_det(const IntMatrix &m, const std::vector<std::size_t> &rows,
              const std::vector<std::size_t> &cols)
{
  if(rows.size() == 1)
    return m(rows[0], cols[0]);
  Int total = 0;
  for(std::size_t k = 0; k < cols.size(); ++k)
    {
      std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> sub_cols;
      for(std::size_t c = 0; c < cols.size(); ++c)
        if(c != k)
          sub_cols.push_back(cols[c]);
      const Int term = m(rows[0], cols[k]) * minor_det(m, sub_rows, sub_cols);
      total += k % 2 ? -term : term;
    }
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
  std::vector<std::vector<std::size_t>> out;
  for(unsigned mask = 0; mask < (1u << n); ++mask)
    if(static_cast<std::size_t>(__builtin_popcount(mask)) == k)
      {
        std::vector<std::size_t> s;
        for(std::size_t b = 0; b < n; ++b)
          if(mask & (1u << b))
            s.push_back(b);
        out.push_back(s);
      }
  return out;
}

std::size_t brute_force_rank(const IntMatrix &m, Int p)
{
  for(std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for(const auto &rows : subsets(m.rows(), k))
      for(const auto &cols : subsets(m.cols(), k))
        if(p == 0 ? minor_det(m, rows, cols) != 0
                  : mod(minor_det(m, rows, cols), p) != 0)
          return k;
  return 0;
}

TEST(Polytabloid, OneRowAndOneColumn)
{
  const auto row = polytabloid(enumerate_standard_tableaux(Partition{4}).front());
  ASSERT_EQ(row.size(), 1u);
  EXPECT_EQ(row.begin()->second, 1);

  const auto column
    = polytabloid(enumerate_standard_tableaux(Partition({1, 1, 1, 1})).front());
  EXPECT_EQ(column.size(), 24u);
  for(const auto &[tabloid, c] : column)
    EXPECT_EQ(c * c, 1);
}

TEST(Polytabloid, TwoOne)
{
  // t = 12/3: columns {1,3} and {2}; e_t = {12|3} - {23|1}.
  const Tableau t(Partition({2, 1}), {{1, 2}, {3}});
  const TabloidVector e = polytabloid(t);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e.at(Tabloid({0, 0, 1})), 1);
  EXPECT_EQ(e.at(Tabloid({1, 0, 0})), -1);
  EXPECT_EQ(Tabloid({1, 0, 0}).rows(), (std::vector<std::vector<Int>>{{2, 3}, {1}}));
  EXPECT_THROW(polytabloid(Tableau(Partition({2, 1}), {{2, 3}, {1}})),
               std::invalid_argument);
}

TEST(GramMatrix, Examples)
{
  EXPECT_EQ(gram_matrix(Partition{5}), [] {
    IntMatrix m(1, 1);
    m(0, 0) = 1;
    return m;
  }());
  for(Int r = 1; r <= 6; ++r)
    {
      const IntMatrix g = gram_matrix(Partition(std::vector<Int>(r, 1)));
      ASSERT_EQ(g.rows(), 1u);
      EXPECT_EQ(g(0, 0), checked::factorial(r));
    }
  const IntMatrix g = gram_matrix(Partition({2, 1}));
  ASSERT_EQ(g.rows(), 2u);
  EXPECT_EQ(g(0, 0), 2);
  EXPECT_EQ(g(1, 1), 2);
  EXPECT_EQ(g(0, 1), 1);
  EXPECT_EQ(rank_mod_p(g, 3), 1u);
  EXPECT_EQ(rank_mod_p(g, 2), 2u);
  EXPECT_THROW(gram_matrix(Partition({5, 4})), std::length_error);
}

TEST(GramMatrix, SymmetricWithColumnGroupDiagonal)
{
  for(Int r = 1; r <= 6; ++r)
    for(const Partition &lambda : partitions_of(r))
      {
        const IntMatrix g = gram_matrix(lambda);
        EXPECT_TRUE(g.is_symmetric());
        Int column_group = 1;
        const Partition dual = conjugate(lambda);
        for(Int h : dual.parts())
          column_group *= checked::factorial(h);
        for(std::size_t k = 0; k < g.rows(); ++k)
          EXPECT_EQ(g(k, k), column_group) << lambda.to_string();
      }
}

TEST(GramMatrix, NondegenerateOverTheRationals)
{
  for(Int r = 1; r <= 7; ++r)
    for(const Partition &lambda : partitions_of(r))
      EXPECT_EQ(static_cast<Int>(rank_rational(gram_matrix(lambda))),
                standard_tableaux_count(lambda))
        << lambda.to_string();
}

TEST(GramMatrix, RankIgnoresBasisOrder)
{
  for(Int p : kPrimes)
    for(Int r = 1; r <= 6; ++r)
      for(const Partition &lambda : partitions_of(r))
        {
          const IntMatrix g = gram_matrix(lambda);
          const std::size_t size = g.rows();
          IntMatrix reordered(size, size);
          for(std::size_t a = 0; a < size; ++a)
            for(std::size_t b = 0; b < size; ++b)
              reordered(a, b) = g((a + 1) % size, (size - 1 - b));
          EXPECT_EQ(rank_mod_p(reordered, p), rank_mod_p(g, p));
        }
}

TEST(Rank, ModularAndRationalAgreeWithMinors)
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 4);
  for(int trial = 0; trial < 400; ++trial)
    {
      IntMatrix m(static_cast<std::size_t>(dim(rng)),
                  static_cast<std::size_t>(dim(rng)));
      // Low-rank structure shows up often with a repeated row.
      for(std::size_t r = 0; r < m.rows(); ++r)
        for(std::size_t c = 0; c < m.cols(); ++c)
          m(r, c) = (trial % 3 == 0 && r > 0) ? m(0, c) * 2 : entry(rng);
      for(Int p : kPrimes)
        EXPECT_EQ(rank_mod_p(m, p), brute_force_rank(m, p));
      EXPECT_EQ(rank_rational(m), brute_force_rank(m, 0));
      EXPECT_EQ(rank_rational(m), rank_mod_p(m, 1000003));
    }
}

TEST(SimpleDimensions, Examples)
{
  EXPECT_EQ(dim_simple_D_upper(Partition({2, 1}), 3), 1);
  for(Int p : kPrimes)
    for(Int r = 1; r <= 6; ++r)
      EXPECT_EQ(dim_simple_D_upper(Partition{r}, p), 1);
  const std::vector<Int> expected{1, 3, 3, 1};
  for(Int j = 0; j <= 3; ++j)
    EXPECT_EQ(dim_simple_D_upper(hook_partition(5, j), 5),
              expected[static_cast<std::size_t>(j)]);
  EXPECT_THROW(dim_simple_D_upper(Partition({1, 1, 1}), 3), std::invalid_argument);
  EXPECT_THROW(dim_simple_D_lower(Partition{3}, 3), std::invalid_argument);
}

TEST(SimpleDimensions, SymmetricGroupOfDegreeFour)
{
  // Standard tables: S_4 in characteristic 3 has simples of dimension
  // 1, 3, 1, 3; in characteristic 2, of dimension 1, 2.
  EXPECT_EQ(dim_simple_D_upper(Partition{4}, 3), 1);
  EXPECT_EQ(dim_simple_D_upper(Partition({3, 1}), 3), 3);
  EXPECT_EQ(dim_simple_D_upper(Partition({2, 2}), 3), 1);
  EXPECT_EQ(dim_simple_D_upper(Partition({2, 1, 1}), 3), 3);
  EXPECT_EQ(dim_simple_D_upper(Partition{4}, 2), 1);
  EXPECT_EQ(dim_simple_D_upper(Partition({3, 1}), 2), 2);
  EXPECT_EQ(dim_simple_D_upper(Partition({2, 1}), 2), 2);
}

TEST(SimpleDimensions, SumOfSquaresBoundedByGroupOrder)
{
  for(Int p : {5, 7})
    for(Int r = 1; r <= 6; ++r)
      {
        Int total = 0;
        for(const Partition &mu : partitions_of(r))
          if(is_p_regular(mu, p))
            {
              const Int d = dim_simple_D_upper(mu, p);
              total += d * d;
            }
        if(p > r)
          EXPECT_EQ(total, checked::factorial(r));
        else
          EXPECT_LT(total, checked::factorial(r));
      }
}

TEST(SimpleDimensions, SignTwistPreservesDimension)
{
  // D^Mull(lambda) = D^lambda (x) sgn.
  for(Int p : kPrimes)
    for(Int r = 1; r <= 7; ++r)
      for(const Partition &lambda : partitions_of(r))
        if(is_p_regular(lambda, p))
          {
            EXPECT_EQ(dim_simple_D_upper(lambda, p),
                      dim_simple_D_upper(mullineux(lambda, p), p))
              << lambda.to_string() << " p=" << p;
          }
}

TEST(HookSpechtSplitting, DimensionPatterns)
{
  auto pattern = [](Int p) {
    std::vector<std::array<Int, 3>> out;
    for(const PeelRow &row : peel_rows(p))
      {
        EXPECT_TRUE(row.passed) << "p=" << p << " i=" << row.i;
        out.push_back({row.specht_dim, row.first, row.second});
      }
    return out;
  };
  using Rows = std::vector<std::array<Int, 3>>;
  EXPECT_EQ(pattern(5), (Rows{{1, 0, 1}, {4, 1, 3}, {6, 3, 3}, {4, 3, 1}, {1, 1, 0}}));
  EXPECT_EQ(pattern(3), (Rows{{1, 0, 1}, {2, 1, 1}, {1, 1, 0}}));
  EXPECT_EQ(pattern(2), (Rows{{1, 0, 1}, {1, 1, 0}}));
  EXPECT_TRUE(peel_check(7).passed());
  EXPECT_THROW(peel_rows(11), std::length_error);
}

TEST(SchurBridge, PassesForSmallPrimes)
{
  for(Int p : kPrimes)
    for(std::size_t n : {static_cast<std::size_t>(p), static_cast<std::size_t>(p) + 2})
      {
        const Report report = schur_bridge_check(p, n);
        EXPECT_FALSE(report.skipped);
        EXPECT_EQ(report.checks.size(), 2 * static_cast<std::size_t>(p));
        EXPECT_TRUE(report.passed()) << "p=" << p << " n=" << n;
      }
  EXPECT_TRUE(schur_bridge_check(5, 3).skipped);
}

} // namespace
} // namespace hookblock
