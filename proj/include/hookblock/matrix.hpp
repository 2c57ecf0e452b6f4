#pragma once

#include "hookblock/checked.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace hookblock {

/// Dense exact integer matrix, row-major.
class IntMatrix
{
public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0)
  {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const
  {
    return data_[r * cols_ + c];
  }

  bool is_symmetric() const
  {
    if(rows_ != cols_)
      return false;
    for(std::size_t r = 0; r < rows_; ++r)
      for(std::size_t c = 0; c < r; ++c)
        if((*this)(r, c) != (*this)(c, r))
          return false;
    return true;
  }

  IntMatrix transposed() const
  {
    IntMatrix out(cols_, rows_);
    for(std::size_t r = 0; r < rows_; ++r)
      for(std::size_t c = 0; c < cols_; ++c)
        out(c, r) = (*this)(r, c);
    return out;
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
  {
    if(a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for(std::size_t r = 0; r < a.rows_; ++r)
      for(std::size_t c = 0; c < b.cols_; ++c)
        {
          Int acc = 0;
          for(std::size_t k = 0; k < a.cols_; ++k)
            acc = checked::add(acc, checked::mul(a(r, k), b(k, c)));
          out(r, c) = acc;
        }
    return out;
  }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
};

/// Rank over F_p by Gaussian elimination on reduced entries.
inline std::size_t rank_mod_p(const IntMatrix &matrix, Int p)
{
  require_prime(p);
  const std::size_t rows = matrix.rows(), cols = matrix.cols();
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for(std::size_t r = 0; r < rows; ++r)
    for(std::size_t c = 0; c < cols; ++c)
      a[r][c] = mod(matrix(r, c), p);

  auto inverse = [p](Int x) {
    // Fermat; p is small.
    Int result = 1, base = x, e = p - 2;
    while(e > 0)
      {
        if(e & 1)
          result = result * base % p;
        base = base * base % p;
        e >>= 1;
      }
    return result;
  };

  std::size_t rank = 0;
  for(std::size_t c = 0; c < cols && rank < rows; ++c)
    {
      std::size_t pivot = rank;
      while(pivot < rows && a[pivot][c] == 0)
        ++pivot;
      if(pivot == rows)
        continue;
      std::swap(a[pivot], a[rank]);
      const Int inv = inverse(a[rank][c]);
      for(Int &x : a[rank])
        x = x * inv % p;
      for(std::size_t r = 0; r < rows; ++r)
        {
          if(r == rank || a[r][c] == 0)
            continue;
          const Int factor = a[r][c];
          for(std::size_t k = c; k < cols; ++k)
            a[r][k] = mod(a[r][k] - factor * a[rank][k], p);
        }
      ++rank;
    }
  return rank;
}

/// Rank over Q by fraction-free (Bareiss) elimination in arbitrary precision.
inline std::size_t rank_rational(const IntMatrix &matrix)
{
  using Big = boost::multiprecision::cpp_int;
  const std::size_t rows = matrix.rows(), cols = matrix.cols();
  std::vector<std::vector<Big>> a(rows, std::vector<Big>(cols));
  for(std::size_t r = 0; r < rows; ++r)
    for(std::size_t c = 0; c < cols; ++c)
      a[r][c] = matrix(r, c);

  Big previous = 1;
  std::size_t rank = 0;
  for(std::size_t c = 0; c < cols && rank < rows; ++c)
    {
      std::size_t pivot = rank;
      while(pivot < rows && a[pivot][c] == 0)
        ++pivot;
      if(pivot == rows)
        continue;
      std::swap(a[pivot], a[rank]);
      for(std::size_t r = rank + 1; r < rows; ++r)
        {
          for(std::size_t k = c + 1; k < cols; ++k)
            a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / previous;
          a[r][c] = 0;
        }
      previous = a[rank][c];
      ++rank;
    }
  return rank;
}

} // namespace hookblock
