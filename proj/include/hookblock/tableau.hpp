#pragma once

#include "hookblock/checked.hpp"
#include "hookblock/partition.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hookblock {

/// A filling of a Young diagram, stored row by row.
struct Tableau
{
  Partition shape;
  std::vector<std::vector<Int>> rows;

  Tableau(Partition shape_, std::vector<std::vector<Int>> rows_)
      : shape(std::move(shape_)), rows(std::move(rows_))
  {
    if(rows.size() != shape.length())
      throw std::invalid_argument("tableau row count does not match shape");
    for(std::size_t k = 0; k < rows.size(); ++k)
      if(static_cast<Int>(rows[k].size()) != shape[k])
        throw std::invalid_argument("tableau row length does not match shape");
  }

  std::vector<Int> reading_word() const
  {
    std::vector<Int> word;
    for(const auto &row : rows)
      word.insert(word.end(), row.begin(), row.end());
    return word;
  }

  bool is_semistandard() const
  {
    for(std::size_t r = 0; r < rows.size(); ++r)
      for(std::size_t c = 0; c < rows[r].size(); ++c)
        {
          if(rows[r][c] < 1)
            return false;
          if(c > 0 && rows[r][c] < rows[r][c - 1])
            return false;
          if(r > 0 && rows[r][c] <= rows[r - 1][c])
            return false;
        }
    return true;
  }

  bool is_standard() const
  {
    std::vector<Int> word = reading_word();
    std::sort(word.begin(), word.end());
    for(std::size_t k = 0; k < word.size(); ++k)
      if(word[k] != static_cast<Int>(k + 1))
        return false;
    if(!is_semistandard())
      return false;
    for(const auto &row : rows)
      for(std::size_t c = 1; c < row.size(); ++c)
        if(row[c] == row[c - 1])
          return false;
    return true;
  }

  friend bool operator==(const Tableau &, const Tableau &) = default;
};

/// f^lambda by the hook-length formula.
inline Int standard_tableaux_count(const Partition &lambda)
{
  const Partition dual = conjugate(lambda);
  // Cancel hook lengths against 1..n one factor at a time to keep the
  // intermediate values small.
  std::vector<Int> hooks;
  for(std::size_t r = 0; r < lambda.length(); ++r)
    for(Int c = 0; c < lambda[r]; ++c)
      hooks.push_back((lambda[r] - c - 1)
                      + (dual[static_cast<std::size_t>(c)]
                         - static_cast<Int>(r) - 1)
                      + 1);
  Int numerator = checked::factorial(lambda.size());
  Int denominator = 1;
  for(Int h : hooks)
    denominator = checked::mul(denominator, h);
  return numerator / denominator;
}

namespace detail {

// Calls visit(rows) for every semistandard filling of `shape` with content
// `content` (value k+1 used content[k] times). Each value is placed as a
// horizontal strip on top of the shape filled so far.
class SemistandardWalker
{
public:
  using Visitor = std::function<void(const std::vector<std::vector<Int>> &)>;

  SemistandardWalker(const Partition &shape, const std::vector<Int> &content,
                     Visitor visit)
      : shape_(shape), content_(content), visit_(std::move(visit)),
        filling_(shape.length()), current_(shape.length(), 0)
  {}

  void run() { place_value(0); }

private:
  void place_value(std::size_t value_index)
  {
    if(value_index == content_.size())
      {
        for(std::size_t r = 0; r < current_.size(); ++r)
          if(current_[r] != shape_[r])
            return;
        visit_(filling_);
        return;
      }
    const std::vector<Int> before = current_;
    place_strip(value_index, 0, content_[value_index], before);
  }

  void place_strip(std::size_t value_index, std::size_t row, Int left,
                   const std::vector<Int> &before)
  {
    if(left == 0)
      {
        place_value(value_index + 1);
        return;
      }
    if(row == current_.size())
      return;
    Int cap = shape_[row];
    if(row > 0)
      cap = std::min(cap, before[row - 1]);
    const Int room = cap - current_[row];
    for(Int add = std::min(room, left); add >= 0; --add)
      {
        filling_[row].insert(filling_[row].end(), static_cast<std::size_t>(add),
                             static_cast<Int>(value_index + 1));
        current_[row] += add;
        place_strip(value_index, row + 1, left - add, before);
        current_[row] -= add;
        filling_[row].resize(filling_[row].size()
                             - static_cast<std::size_t>(add));
      }
  }

  const Partition &shape_;
  const std::vector<Int> &content_;
  Visitor visit_;
  std::vector<std::vector<Int>> filling_;
  std::vector<Int> current_;
};

} // namespace detail

/// Standard tableaux of shape lambda, or, given a content mu, semistandard
/// tableaux of shape lambda and content mu. Sorted lexicographically by
/// row-reading word.
inline std::vector<Tableau>
enumerate_standard_tableaux(const Partition &lambda,
                            std::optional<std::vector<Int>> content
                            = std::nullopt)
{
  std::vector<Int> mu;
  if(content)
    {
      mu = *content;
      Int total = 0;
      for(Int m : mu)
        {
          if(m < 0)
            throw std::invalid_argument("content entries must be nonnegative");
          total = checked::add(total, m);
        }
      if(total != lambda.size())
        throw std::invalid_argument("content size does not match shape size");
    }
  else
    mu.assign(static_cast<std::size_t>(lambda.size()), 1);

  std::vector<Tableau> out;
  detail::SemistandardWalker(
    lambda, mu,
    [&](const std::vector<std::vector<Int>> &rows) {
      out.emplace_back(lambda, rows);
    })
    .run();
  std::sort(out.begin(), out.end(), [](const Tableau &a, const Tableau &b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

} // namespace hookblock
