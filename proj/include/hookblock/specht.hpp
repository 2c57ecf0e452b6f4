#pragma once

#include "hookblock/characters.hpp"
#include "hookblock/checked.hpp"
#include "hookblock/matrix.hpp"
#include "hookblock/partition.hpp"
#include "hookblock/report.hpp"
#include "hookblock/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookblock {

/// Largest r for which permutation modules are built explicitly.
inline constexpr Int kOracleMaxSize = 8;

inline void require_oracle_size(const Partition &lambda)
{
  if(lambda.size() > kOracleMaxSize)
    throw std::length_error("partition " + lambda.to_string() + " of size "
                            + std::to_string(lambda.size())
                            + " exceeds the oracle limit r <= "
                            + std::to_string(kOracleMaxSize));
}

/// A row-equivalence class of tableaux of shape lambda. Stored canonically as
/// row_of[k] = 0-based row holding the entry k + 1.
class Tabloid
{
public:
  explicit Tabloid(std::vector<std::uint8_t> row_of) : row_of_(std::move(row_of))
  {}

  const std::vector<std::uint8_t> &row_of() const { return row_of_; }

  /// The row sets, each sorted.
  std::vector<std::vector<Int>> rows() const
  {
    std::vector<std::vector<Int>> out;
    for(std::size_t k = 0; k < row_of_.size(); ++k)
      {
        if(row_of_[k] >= out.size())
          out.resize(row_of_[k] + 1u);
        out[row_of_[k]].push_back(static_cast<Int>(k + 1));
      }
    return out;
  }

  friend bool operator==(const Tabloid &, const Tabloid &) = default;
  friend auto operator<=>(const Tabloid &a, const Tabloid &b)
  {
    return a.row_of_ <=> b.row_of_;
  }

private:
  std::vector<std::uint8_t> row_of_;
};

/// A vector of M^lambda in the tabloid basis.
using TabloidVector = std::map<Tabloid, Int>;

namespace detail {

inline int permutation_sign(const std::vector<std::size_t> &perm)
{
  int inversions = 0;
  for(std::size_t a = 0; a < perm.size(); ++a)
    for(std::size_t b = a + 1; b < perm.size(); ++b)
      if(perm[a] > perm[b])
        ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

} // namespace detail

/// e_t = sum over the column stabilizer of t of sgn(sigma) {sigma t}.
inline TabloidVector polytabloid(const Tableau &t)
{
  require_oracle_size(t.shape);
  if(!t.is_standard())
    throw std::invalid_argument("polytabloid needs a standard tableau");

  const Partition dual = conjugate(t.shape);
  const std::size_t r = static_cast<std::size_t>(t.shape.size());
  std::vector<std::vector<Int>> columns(dual.length());
  for(std::size_t c = 0; c < dual.length(); ++c)
    for(Int row = 0; row < dual[c]; ++row)
      columns[c].push_back(t.rows[static_cast<std::size_t>(row)][c]);

  TabloidVector out;
  std::vector<std::uint8_t> row_of(r, 0);

  // Walk the product of column symmetric groups one column at a time.
  auto walk = [&](auto &&self, std::size_t column, int sign) -> void {
    if(column == columns.size())
      {
        Int &slot = out[Tabloid(row_of)];
        slot += sign;
        if(slot == 0)
          out.erase(Tabloid(row_of));
        return;
      }
    const auto &entries = columns[column];
    std::vector<std::size_t> perm(entries.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do
      {
        // Entry entries[k] moves to row perm[k].
        for(std::size_t k = 0; k < entries.size(); ++k)
          row_of[static_cast<std::size_t>(entries[k] - 1)]
            = static_cast<std::uint8_t>(perm[k]);
        self(self, column + 1, sign * detail::permutation_sign(perm));
      }
    while(std::next_permutation(perm.begin(), perm.end()));
  };
  walk(walk, 0, 1);
  return out;
}

/// Tabloids are orthonormal.
inline Int inner_product(const TabloidVector &a, const TabloidVector &b)
{
  Int total = 0;
  for(const auto &[tabloid, x] : a)
    if(auto it = b.find(tabloid); it != b.end())
      total = checked::add(total, checked::mul(x, it->second));
  return total;
}

/// Gram matrix of the standard polytabloid basis of S^lambda, tableaux in
/// the order of enumerate_standard_tableaux.
inline IntMatrix gram_matrix(const Partition &lambda)
{
  require_oracle_size(lambda);
  const std::vector<Tableau> basis = enumerate_standard_tableaux(lambda);
  std::vector<TabloidVector> vectors;
  vectors.reserve(basis.size());
  for(const Tableau &t : basis)
    vectors.push_back(polytabloid(t));
  IntMatrix gram(basis.size(), basis.size());
  for(std::size_t a = 0; a < basis.size(); ++a)
    for(std::size_t b = a; b < basis.size(); ++b)
      gram(a, b) = gram(b, a) = inner_product(vectors[a], vectors[b]);
  return gram;
}

/// dim D^lambda = rank over F_p of the Gram matrix, lambda p-regular.
inline Int dim_simple_D_upper(const Partition &lambda, Int p)
{
  require_prime(p);
  if(!is_p_regular(lambda, p))
    throw std::invalid_argument("partition " + lambda.to_string() + " is not "
                                + std::to_string(p) + "-regular");
  return static_cast<Int>(rank_mod_p(gram_matrix(lambda), p));
}

/// dim D_lambda for column p-regular lambda. D_lambda (x) sgn = D^(lambda'),
/// and tensoring with sgn preserves dimension.
inline Int dim_simple_D_lower(const Partition &lambda, Int p)
{
  if(!is_column_p_regular(lambda, p))
    throw std::invalid_argument("partition " + lambda.to_string()
                                + " is not column " + std::to_string(p)
                                + "-regular");
  return dim_simple_D_upper(conjugate(lambda), p);
}

struct PeelRow
{
  Int i = 0;
  Int specht_dim = 0; // f^(lambda^i)
  Int first = 0;      // dim D_(lambda^i), 0 when i = 0
  Int second = 0;     // dim D_(lambda^(i+1)), 0 when i = p - 1
  int factors = 0;    // nonzero terms among first, second
  bool passed = false;
};

/// Dimension bookkeeping for the dual Specht modules of the p-hooks:
/// f^(lambda^i) = dim D_(lambda^i) + dim D_(lambda^(i+1)), with two
/// composition factors for 0 < i < p - 1 and one at either end.
inline std::vector<PeelRow> peel_rows(Int p)
{
  require_prime(p);
  if(p > kOracleMaxSize)
    throw std::length_error("peel check needs p <= "
                            + std::to_string(kOracleMaxSize));
  // lower[i] = dim D_(lambda^i); lambda^0 = (p) is not column p-regular.
  std::vector<Int> lower(static_cast<std::size_t>(p) + 1, 0);
  for(Int i = 1; i <= p - 1; ++i)
    lower[static_cast<std::size_t>(i)]
      = dim_simple_D_lower(hook_partition(p, i), p);

  std::vector<PeelRow> rows;
  for(Int i = 0; i <= p - 1; ++i)
    {
      PeelRow row;
      row.i = i;
      row.specht_dim = standard_tableaux_count(hook_partition(p, i));
      row.first = lower[static_cast<std::size_t>(i)];
      row.second = lower[static_cast<std::size_t>(i + 1)];
      row.factors = (row.first > 0 ? 1 : 0) + (row.second > 0 ? 1 : 0);
      const int expected_factors = (i == 0 || i == p - 1) ? 1 : 2;
      row.passed = row.specht_dim == row.first + row.second
                   && row.factors == expected_factors;
      rows.push_back(row);
    }
  return rows;
}

inline Report peel_check(Int p)
{
  Report report{"peel", {}, false, {}};
  for(const PeelRow &row : peel_rows(p))
    report.add("f^lambda^" + std::to_string(row.i),
               row.passed,
               std::to_string(row.specht_dim) + " = " + std::to_string(row.first)
                 + " + " + std::to_string(row.second) + " ("
                 + std::to_string(row.factors) + " factor"
                 + (row.factors == 1 ? "" : "s") + ")");
  return report;
}

/// Dimension-level Schur functor checks at the (1^p) weight space:
/// the weight multiplicity of ch Delta(lambda^i) is f^(lambda^i), and that of
/// ch L(lambda^i) is dim D_(lambda^i) (zero for i = 0).
inline Report schur_bridge_check(Int p, std::size_t n)
{
  require_prime(p);
  Report report{"bridge", {}, false, {}};
  if(static_cast<Int>(n) < p)
    {
      report.skipped = true;
      report.skip_reason = "the (1^p) weight needs n >= p";
      return report;
    }
  if(p > kOracleMaxSize)
    throw std::length_error("bridge check needs p <= "
                            + std::to_string(kOracleMaxSize));
  const Partition ones = conjugate(Partition{p});
  for(Int i = 0; i <= p - 1; ++i)
    {
      const Partition hook = hook_partition(p, i);
      const Int weyl_mult = weyl_character(hook, n).mult(ones);
      const Int f = standard_tableaux_count(hook);
      report.add("Delta(" + hook.to_string() + ") at (1^p)", weyl_mult == f,
                 std::to_string(weyl_mult) + " vs f = " + std::to_string(f));

      const Int simple_mult = hook_simple_character(p, n, i).mult(ones);
      const Int oracle = i == 0 ? 0 : dim_simple_D_lower(hook, p);
      report.add("L(" + hook.to_string() + ") at (1^p)", simple_mult == oracle,
                 std::to_string(simple_mult) + " vs dim D = "
                   + std::to_string(oracle));
    }
  return report;
}

} // namespace hookblock
