#pragma once

#include "hookblock/checked.hpp"
#include "hookblock/partition.hpp"
#include "hookblock/weight.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hookblock {

/// d(lambda): the largest d >= 0 with lambda_i - lambda_{i+1} = -1 mod p^d
/// for all 1 <= i < n.
///
/// For n = 1 the condition is vacuous; S(1, r) has a single simple module,
/// and 0 is reported.
inline int d_value(const Partition &lambda, Int p, std::size_t n)
{
  require_prime(p);
  const std::vector<Int> parts = lambda.padded(n);
  if(n == 1)
    return 0;
  int d = 0;
  Int modulus = 1;
  for(;;)
    {
      const Int next = checked::mul(modulus, p);
      for(std::size_t k = 0; k + 1 < n; ++k)
        if(mod(parts[k] - parts[k + 1] + 1, next) != 0)
          return d;
      modulus = next;
      ++d;
    }
}

namespace detail {

inline void check_block_args(const Partition &lambda, const Partition &mu,
                             std::size_t n)
{
  if(lambda.size() != mu.size())
    throw std::invalid_argument("block comparison needs partitions of the same "
                                "size");
  if(lambda.length() > n || mu.length() > n)
    throw std::invalid_argument("block comparison needs partitions with at "
                                "most n parts");
}

inline std::vector<Int> sorted_residues(std::vector<Int> values, Int modulus)
{
  for(Int &v : values)
    v = mod(v, modulus);
  std::sort(values.begin(), values.end());
  return values;
}

} // namespace detail

/// Residues mod p^(d+1) of lambda + rho, sorted: the (B2') invariant.
inline std::vector<Int> block_residues(const Partition &lambda, Int p,
                                       std::size_t n, int d)
{
  Int modulus = 1;
  for(int k = 0; k <= d; ++k)
    modulus = checked::mul(modulus, p);
  const Weight shifted = Weight::from_partition(lambda, n) + rho(n);
  return detail::sorted_residues(shifted.coords(), modulus);
}

/// Donkin's criterion: equal d-values, and lambda + rho is a permutation of
/// mu + rho modulo p^(d+1).
inline bool same_block(const Partition &lambda, const Partition &mu,
                       std::size_t n, Int p)
{
  detail::check_block_args(lambda, mu, n);
  const int d = d_value(lambda, p, n);
  if(d != d_value(mu, p, n))
    return false;
  return block_residues(lambda, p, n, d) == block_residues(mu, p, n, d);
}

/// Same test through lambda_i - i instead of the rho shift.
inline bool same_block_unshifted(const Partition &lambda, const Partition &mu,
                                 std::size_t n, Int p)
{
  detail::check_block_args(lambda, mu, n);
  const int d = d_value(lambda, p, n);
  if(d != d_value(mu, p, n))
    return false;
  Int modulus = 1;
  for(int k = 0; k <= d; ++k)
    modulus = checked::mul(modulus, p);
  auto shifted = [n](const Partition &nu) {
    std::vector<Int> out = nu.padded(n);
    for(std::size_t k = 0; k < n; ++k)
      out[k] -= static_cast<Int>(k + 1);
    return out;
  };
  return detail::sorted_residues(shifted(lambda), modulus)
         == detail::sorted_residues(shifted(mu), modulus);
}

struct BlockDescriptor
{
  // Sorted in decreasing lexicographic order; members.front() is the
  // representative.
  std::vector<Partition> members;
  int d = 0;

  const Partition &representative() const { return members.front(); }
  bool contains(const Partition &lambda) const
  {
    return std::find(members.begin(), members.end(), lambda) != members.end();
  }
};

/// The blocks of S(n, r) in characteristic p, ordered by representative
/// (largest first).
inline std::vector<BlockDescriptor> block_partition(std::size_t n, Int r, Int p)
{
  require_prime(p);
  if(n < 1 || r < 1)
    throw std::invalid_argument("block_partition needs n, r >= 1");
  std::vector<BlockDescriptor> blocks;
  // partitions_of yields decreasing lexicographic order, so the first member
  // of each class is its representative and classes come out sorted.
  for(const Partition &lambda : partitions_of(r, n))
    {
      auto home = std::find_if(blocks.begin(), blocks.end(),
                               [&](const BlockDescriptor &block) {
                                 return same_block(block.representative(),
                                                   lambda, n, p);
                               });
      if(home == blocks.end())
        blocks.push_back({{lambda}, d_value(lambda, p, n)});
      else
        home->members.push_back(lambda);
    }
  return blocks;
}

} // namespace hookblock
