#pragma once

#include "hookblock/checked.hpp"
#include "hookblock/partition.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookblock {

/// An element of the weight lattice Z^n, in epsilon coordinates.
class Weight
{
public:
  explicit Weight(std::vector<Int> coords) : coords_(std::move(coords))
  {
    if(coords_.empty())
      throw std::invalid_argument("weights need dimension n >= 1");
  }

  static Weight from_partition(const Partition &lambda, std::size_t n)
  {
    return Weight(lambda.padded(n));
  }

  std::size_t dim() const { return coords_.size(); }
  const std::vector<Int> &coords() const { return coords_; }
  // 1-based, matching the epsilon_i indexing.
  Int at(std::size_t i) const { return coords_.at(i - 1); }

  Weight &operator+=(const Weight &other)
  {
    same_dim(other);
    for(std::size_t k = 0; k < coords_.size(); ++k)
      coords_[k] = checked::add(coords_[k], other.coords_[k]);
    return *this;
  }
  Weight &operator-=(const Weight &other)
  {
    same_dim(other);
    for(std::size_t k = 0; k < coords_.size(); ++k)
      coords_[k] = checked::sub(coords_[k], other.coords_[k]);
    return *this;
  }
  friend Weight operator+(Weight a, const Weight &b) { return a += b; }
  friend Weight operator-(Weight a, const Weight &b) { return a -= b; }

  bool is_dominant() const
  {
    for(std::size_t k = 1; k < coords_.size(); ++k)
      if(coords_[k] > coords_[k - 1])
        return false;
    return true;
  }

  bool is_polynomial() const
  {
    for(Int c : coords_)
      if(c < 0)
        return false;
    return true;
  }

  /// The partition of a dominant polynomial weight.
  Partition to_partition() const
  {
    if(!is_dominant() || !is_polynomial())
      throw std::domain_error("weight " + to_string()
                              + " is not a dominant polynomial weight");
    return Partition(coords_);
  }

  std::string to_string() const
  {
    std::string out = "(";
    for(std::size_t k = 0; k < coords_.size(); ++k)
      {
        if(k > 0)
          out += ',';
        out += std::to_string(coords_[k]);
      }
    return out + ")";
  }

  friend bool operator==(const Weight &, const Weight &) = default;
  friend auto operator<=>(const Weight &a, const Weight &b)
  {
    return a.coords_ <=> b.coords_;
  }

private:
  void same_dim(const Weight &other) const
  {
    if(other.dim() != dim())
      throw std::invalid_argument("weight dimension mismatch: "
                                  + std::to_string(dim()) + " vs "
                                  + std::to_string(other.dim()));
  }

  std::vector<Int> coords_;
};

/// rho = (n-1, n-2, ..., 1, 0).
inline Weight rho(std::size_t n)
{
  std::vector<Int> coords(n);
  for(std::size_t k = 0; k < n; ++k)
    coords[k] = static_cast<Int>(n - 1 - k);
  return Weight(std::move(coords));
}

/// The affine reflection s_{alpha, level} for alpha = eps_i - eps_j,
/// acting by v -> s_alpha(v) + level * alpha. The level is a multiple of p.
struct AffineReflection
{
  std::size_t i = 1;
  std::size_t j = 2;
  Int level = 0;

  AffineReflection(std::size_t i_, std::size_t j_, Int level_, Int p)
      : i(i_), j(j_), level(level_)
  {
    if(i_ < 1 || i_ >= j_)
      throw std::invalid_argument("affine reflection needs 1 <= i < j");
    if(p <= 0 || level_ % p != 0)
      throw std::invalid_argument("reflection level must be a multiple of p");
  }

  Weight apply(Weight v) const
  {
    if(j > v.dim())
      throw std::invalid_argument("reflection root index exceeds dimension "
                                  + std::to_string(v.dim()));
    std::vector<Int> c = v.coords();
    std::swap(c[i - 1], c[j - 1]);
    c[i - 1] = checked::add(c[i - 1], level);
    c[j - 1] = checked::sub(c[j - 1], level);
    return Weight(std::move(c));
  }
};

/// Dot action s . lambda = s(lambda + rho) - rho.
inline Weight dot_reflect(const AffineReflection &s, const Weight &lambda)
{
  const Weight shift = rho(lambda.dim());
  return s.apply(lambda + shift) - shift;
}

} // namespace hookblock
