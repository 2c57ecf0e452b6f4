#pragma once

#include "hookblock/checked.hpp"
#include "hookblock/partition.hpp"
#include "hookblock/weight.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookblock {

namespace detail {

// Number of distinct permutations of a vector.
inline Int orbit_size(std::vector<Int> coords)
{
  std::sort(coords.begin(), coords.end());
  Int out = checked::factorial(static_cast<Int>(coords.size()));
  std::size_t k = 0;
  while(k < coords.size())
    {
      std::size_t run = k;
      while(run < coords.size() && coords[run] == coords[k])
        ++run;
      out /= checked::factorial(static_cast<Int>(run - k));
      k = run;
    }
  return out;
}

} // namespace detail

/// A W-invariant element of Z[X] for GL_n, stored by its dominant support:
/// mults[lambda] is the coefficient of e(w lambda) for every w in W.
/// Zero coefficients are never stored.
class CharacterElement
{
public:
  using Map = std::map<Partition, Int, std::greater<>>;

  explicit CharacterElement(std::size_t n) : n_(n)
  {
    if(n == 0)
      throw std::invalid_argument("characters need n >= 1");
  }

  std::size_t n() const { return n_; }
  const Map &mults() const { return mults_; }
  bool is_zero() const { return mults_.empty(); }

  Int mult(const Partition &lambda) const
  {
    auto it = mults_.find(lambda);
    return it == mults_.end() ? 0 : it->second;
  }

  void add_term(const Partition &lambda, Int coefficient)
  {
    if(lambda.length() > n_)
      throw std::invalid_argument("weight " + lambda.to_string()
                                  + " does not fit in dimension "
                                  + std::to_string(n_));
    if(coefficient == 0)
      return;
    Int &slot = mults_[lambda];
    slot = checked::add(slot, coefficient);
    if(slot == 0)
      mults_.erase(lambda);
  }

  bool is_nonnegative() const
  {
    return std::all_of(mults_.begin(), mults_.end(),
                       [](const auto &entry) { return entry.second > 0; });
  }

  /// Total dimension: each dominant coefficient times its W-orbit size.
  Int dim() const
  {
    Int total = 0;
    for(const auto &[lambda, m] : mults_)
      total = checked::add(total,
                           checked::mul(m, detail::orbit_size(lambda.padded(n_))));
    return total;
  }

  /// Every weight with its multiplicity.
  std::map<Weight, Int> expand() const
  {
    std::map<Weight, Int> out;
    for(const auto &[lambda, m] : mults_)
      {
        std::vector<Int> coords = lambda.padded(n_);
        std::sort(coords.begin(), coords.end());
        do
          out.emplace(Weight(coords), m);
        while(std::next_permutation(coords.begin(), coords.end()));
      }
    return out;
  }

  CharacterElement &operator+=(const CharacterElement &other)
  {
    same_n(other);
    for(const auto &[lambda, m] : other.mults_)
      add_term(lambda, m);
    return *this;
  }
  CharacterElement &operator-=(const CharacterElement &other)
  {
    same_n(other);
    for(const auto &[lambda, m] : other.mults_)
      add_term(lambda, checked::sub(0, m));
    return *this;
  }
  CharacterElement &operator*=(Int scale)
  {
    if(scale == 0)
      {
        mults_.clear();
        return *this;
      }
    for(auto &entry : mults_)
      entry.second = checked::mul(entry.second, scale);
    return *this;
  }
  friend CharacterElement operator+(CharacterElement a, const CharacterElement &b)
  {
    return a += b;
  }
  friend CharacterElement operator-(CharacterElement a, const CharacterElement &b)
  {
    return a -= b;
  }
  friend CharacterElement operator*(Int scale, CharacterElement a)
  {
    return a *= scale;
  }

  friend bool operator==(const CharacterElement &, const CharacterElement &)
    = default;

private:
  void same_n(const CharacterElement &other) const
  {
    if(other.n_ != n_)
      throw std::invalid_argument("character dimension mismatch: "
                                  + std::to_string(n_) + " vs "
                                  + std::to_string(other.n_));
  }

  std::size_t n_;
  Map mults_;
};

/// A virtual combination sum_lambda c_lambda chi(lambda) of Weyl characters.
class WeylCharacterCombination
{
public:
  using Map = std::map<Partition, Int, std::greater<>>;

  explicit WeylCharacterCombination(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  const Map &terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Int coefficient(const Partition &lambda) const
  {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Partition &lambda, Int coefficient)
  {
    if(lambda.length() > n_)
      throw std::invalid_argument("Weyl character label " + lambda.to_string()
                                  + " does not fit in dimension "
                                  + std::to_string(n_));
    if(coefficient == 0)
      return;
    Int &slot = terms_[lambda];
    slot = checked::add(slot, coefficient);
    if(slot == 0)
      terms_.erase(lambda);
  }

  friend bool operator==(const WeylCharacterCombination &,
                         const WeylCharacterCombination &)
    = default;

private:
  std::size_t n_;
  Map terms_;
};

/// Number of semistandard tableaux of shape lambda and content mu
/// (mu an arbitrary composition); equals dim Delta(lambda)_mu.
inline Int kostka(const Partition &lambda, const std::vector<Int> &mu)
{
  Int total = 0;
  for(Int m : mu)
    {
      if(m < 0)
        throw std::invalid_argument("content entries must be nonnegative");
      total = checked::add(total, m);
    }
  if(total != lambda.size())
    throw std::invalid_argument("kostka: |lambda| = "
                                + std::to_string(lambda.size())
                                + " but |mu| = " + std::to_string(total));

  // Memo is local to the call. Key: (shape, number of content entries left).
  std::map<std::pair<Partition, std::size_t>, Int> memo;

  std::function<Int(const Partition &, std::size_t)> count
    = [&](const Partition &shape, std::size_t entries) -> Int {
    if(entries == 0)
      return shape.empty() ? 1 : 0;
    if(static_cast<Int>(shape.length()) > static_cast<Int>(entries))
      return 0;
    auto key = std::make_pair(shape, entries);
    if(auto it = memo.find(key); it != memo.end())
      return it->second;

    // Remove a horizontal strip of size mu[entries-1] holding the largest
    // value: row r shrinks to something in [shape[r+1], shape[r]].
    const Int strip = mu[entries - 1];
    Int result = 0;
    std::vector<Int> inner(shape.parts());
    std::function<void(std::size_t, Int)> choose = [&](std::size_t row,
                                                       Int left) {
      if(row == inner.size())
        {
          if(left == 0)
            result = checked::add(result, count(Partition(inner), entries - 1));
          return;
        }
      const Int top = shape[row];
      const Int floor = shape[row + 1];
      for(Int keep = top; keep >= floor; --keep)
        {
          const Int cut = top - keep;
          if(cut > left)
            break;
          inner[row] = keep;
          choose(row + 1, left - cut);
        }
      inner[row] = top;
    };
    choose(0, strip);
    memo.emplace(key, result);
    return result;
  };
  return count(lambda, mu.size());
}

/// ch Delta(lambda) for GL_n.
inline CharacterElement weyl_character(const Partition &lambda, std::size_t n)
{
  if(lambda.length() > n)
    throw std::invalid_argument("partition " + lambda.to_string()
                                + " has more than n = " + std::to_string(n)
                                + " parts");
  CharacterElement out(n);
  for(const Partition &mu : partitions_of(lambda.size(), n))
    out.add_term(mu, kostka(lambda, mu.parts()));
  return out;
}

/// chi(mu) = sign * chi(dominant), from the dot-action antisymmetry.
struct StraightenedTerm
{
  int sign = 0;
  std::optional<Weight> dominant;
  // False when the dominant weight has a negative coordinate.
  bool polynomial = true;
};

inline StraightenedTerm chi_straighten(const Weight &mu)
{
  const std::size_t n = mu.dim();
  const Weight shifted = mu + rho(n);
  std::vector<Int> v = shifted.coords();

  int inversions = 0;
  for(std::size_t a = 0; a < n; ++a)
    for(std::size_t b = a + 1; b < n; ++b)
      {
        if(v[a] == v[b])
          return StraightenedTerm{0, std::nullopt, true};
        if(v[a] < v[b])
          ++inversions;
      }
  std::sort(v.begin(), v.end(), std::greater<>());
  Weight dominant = Weight(std::move(v)) - rho(n);
  StraightenedTerm out;
  out.sign = inversions % 2 == 0 ? 1 : -1;
  out.polynomial = dominant.is_polynomial();
  out.dominant = std::move(dominant);
  return out;
}

enum class Virtual
{
  forbidden,
  allowed
};

/// Expand a Weyl-character combination into weight multiplicities.
inline CharacterElement to_character(const WeylCharacterCombination &combo,
                                     Virtual mode = Virtual::forbidden)
{
  CharacterElement out(combo.n());
  for(const auto &[lambda, c] : combo.terms())
    out += c * weyl_character(lambda, combo.n());
  if(mode == Virtual::forbidden && !out.is_nonnegative())
    throw std::domain_error("combination expands to a virtual character");
  return out;
}

inline Int hook_range_top(Int p, std::size_t n)
{
  return std::min<Int>(static_cast<Int>(n) - 1, p - 1);
}

/// ch L(lambda^i) = sum_{j >= i} (-1)^(j-i) ch Delta(lambda^j), j up to
/// min(n-1, p-1).
inline CharacterElement hook_simple_character(Int p, std::size_t n, Int i)
{
  require_prime(p);
  const Int top = hook_range_top(p, n);
  if(i < 0 || i > top)
    throw std::out_of_range("simple hook characters need 0 <= i <= "
                            "min(n-1, p-1) = "
                            + std::to_string(top) + ", got i = "
                            + std::to_string(i));
  WeylCharacterCombination combo(n);
  for(Int j = i; j <= top; ++j)
    combo.add_term(hook_partition(p, j), (j - i) % 2 == 0 ? 1 : -1);
  return to_character(combo, Virtual::forbidden);
}

} // namespace hookblock
