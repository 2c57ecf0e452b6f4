#pragma once

#include "hookblock/checked.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hookblock {

/// A partition stored without trailing zeros. Parts are weakly decreasing
/// and positive; the empty partition is the partition of 0.
class Partition
{
public:
  Partition() = default;

  explicit Partition(std::vector<Int> parts) : parts_(std::move(parts))
  {
    while(!parts_.empty() && parts_.back() == 0)
      parts_.pop_back();
    for(std::size_t k = 0; k < parts_.size(); ++k)
      {
        if(parts_[k] <= 0)
          throw std::invalid_argument("partition parts must be positive");
        if(k > 0 && parts_[k] > parts_[k - 1])
          throw std::invalid_argument("partition parts must be weakly decreasing");
      }
  }

  Partition(std::initializer_list<Int> parts)
      : Partition(std::vector<Int>(parts))
  {}

  const std::vector<Int> &parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  Int size() const
  {
    Int total = 0;
    for(Int part : parts_)
      total = checked::add(total, part);
    return total;
  }

  // Part at 0-based row `row`; zero past the end.
  Int operator[](std::size_t row) const
  {
    return row < parts_.size() ? parts_[row] : 0;
  }

  /// Pad to a length-n vector. Throws if the partition is longer than n.
  std::vector<Int> padded(std::size_t n) const
  {
    if(parts_.size() > n)
      throw std::invalid_argument("partition " + to_string()
                                  + " has more than " + std::to_string(n)
                                  + " parts");
    std::vector<Int> out(parts_);
    out.resize(n, 0);
    return out;
  }

  std::string to_string() const
  {
    std::string out;
    for(std::size_t k = 0; k < parts_.size(); ++k)
      {
        if(k > 0)
          out += ',';
        out += std::to_string(parts_[k]);
      }
    return out;
  }

  /// Parse "4,1". Whitespace around entries is tolerated.
  static Partition parse(std::string_view text)
  {
    std::vector<Int> parts;
    std::size_t start = 0;
    while(start <= text.size())
      {
        std::size_t stop = text.find(',', start);
        if(stop == std::string_view::npos)
          stop = text.size();
        std::string_view field = text.substr(start, stop - start);
        while(!field.empty() && field.front() == ' ')
          field.remove_prefix(1);
        while(!field.empty() && field.back() == ' ')
          field.remove_suffix(1);
        Int value = 0;
        auto [ptr, ec]
          = std::from_chars(field.data(), field.data() + field.size(), value);
        if(field.empty() || ec != std::errc()
           || ptr != field.data() + field.size() || value <= 0)
          throw std::invalid_argument("malformed partition '"
                                      + std::string(text) + "'");
        parts.push_back(value);
        start = stop + 1;
      }
    for(std::size_t k = 1; k < parts.size(); ++k)
      if(parts[k] > parts[k - 1])
        throw std::invalid_argument("malformed partition '" + std::string(text)
                                    + "': parts must be weakly decreasing");
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition &, const Partition &) = default;
  // Lexicographic on parts; (3) > (2,1) > (1,1,1).
  friend auto operator<=>(const Partition &a, const Partition &b)
  {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<Int> parts_;
};

inline Partition conjugate(const Partition &lambda)
{
  std::vector<Int> out;
  Int columns = lambda[0];
  for(Int j = 1; j <= columns; ++j)
    {
      Int count = 0;
      for(Int part : lambda.parts())
        if(part >= j)
          ++count;
      out.push_back(count);
    }
  return Partition(std::move(out));
}

/// The p-hook (p - i, 1^i) for 0 <= i <= p - 1.
inline Partition hook_partition(Int p, Int i)
{
  if(i < 0 || i > p - 1)
    throw std::out_of_range("hook index " + std::to_string(i)
                            + " outside [0, " + std::to_string(p - 1) + "]");
  std::vector<Int> parts{p - i};
  parts.insert(parts.end(), static_cast<std::size_t>(i), 1);
  return Partition(std::move(parts));
}

/// If lambda is a p-hook, its index i; otherwise -1.
inline Int hook_index(const Partition &lambda, Int p)
{
  if(lambda.size() != p)
    return -1;
  for(std::size_t k = 1; k < lambda.length(); ++k)
    if(lambda[k] != 1)
      return -1;
  return static_cast<Int>(lambda.length()) - 1;
}

// No p equal positive parts in a row.
inline bool is_p_regular(const Partition &lambda, Int p)
{
  const auto &parts = lambda.parts();
  Int run = 0;
  for(std::size_t k = 0; k < parts.size(); ++k)
    {
      run = (k > 0 && parts[k] == parts[k - 1]) ? run + 1 : 1;
      if(run >= p)
        return false;
    }
  return true;
}

// Successive differences, including the last part against 0, are below p.
inline bool is_column_p_regular(const Partition &lambda, Int p)
{
  for(std::size_t k = 0; k < lambda.length(); ++k)
    if(lambda[k] - lambda[k + 1] >= p)
      return false;
  return true;
}

/// Dominance order on partitions of the same size.
inline bool dominates(const Partition &lambda, const Partition &mu)
{
  Int a = 0, b = 0;
  std::size_t rows = std::max(lambda.length(), mu.length());
  for(std::size_t k = 0; k < rows; ++k)
    {
      a += lambda[k];
      b += mu[k];
      if(a < b)
        return false;
    }
  return a == b;
}

/// Every partition of r with at most max_length parts, in decreasing
/// lexicographic order.
inline std::vector<Partition> partitions_of(Int r, std::size_t max_length)
{
  std::vector<Partition> out;
  std::vector<Int> current;
  std::function<void(Int, Int)> extend = [&](Int remaining, Int cap) {
    if(remaining == 0)
      {
        out.emplace_back(current);
        return;
      }
    if(current.size() == max_length)
      return;
    for(Int part = std::min(remaining, cap); part >= 1; --part)
      {
        current.push_back(part);
        extend(remaining - part, part);
        current.pop_back();
      }
  };
  if(r < 0)
    return out;
  extend(r, r);
  return out;
}

inline std::vector<Partition> partitions_of(Int r)
{
  return partitions_of(r, static_cast<std::size_t>(std::max<Int>(r, 0)));
}

} // namespace hookblock
