#pragma once

#include <cstdint>
#include <stdexcept>

namespace hookblock {

using Int = std::int64_t;

// 64-bit arithmetic that refuses to wrap.
namespace checked {

inline Int add(Int a, Int b)
{
  Int out;
  if(__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in addition");
  return out;
}

inline Int sub(Int a, Int b)
{
  Int out;
  if(__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in subtraction");
  return out;
}

inline Int mul(Int a, Int b)
{
  Int out;
  if(__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplication");
  return out;
}

inline Int factorial(Int n)
{
  if(n < 0)
    throw std::domain_error("factorial of a negative number");
  Int out = 1;
  for(Int k = 2; k <= n; ++k)
    out = mul(out, k);
  return out;
}

inline Int binomial(Int n, Int k)
{
  if(k < 0 || n < 0 || k > n)
    return 0;
  if(k > n - k)
    k = n - k;
  Int out = 1;
  for(Int j = 1; j <= k; ++j)
    out = mul(out, n - k + j) / j;
  return out;
}

} // namespace checked

inline bool is_prime(Int p)
{
  if(p < 2)
    return false;
  for(Int d = 2; d * d <= p; ++d)
    if(p % d == 0)
      return false;
  return true;
}

inline void require_prime(Int p)
{
  if(!is_prime(p))
    throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

// Floor-mod into [0, m).
inline Int mod(Int a, Int m)
{
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// p-adic valuation of a nonzero integer.
inline int valuation(Int value, Int p)
{
  if(value == 0)
    throw std::domain_error("valuation of zero");
  int v = 0;
  while(value % p == 0)
    {
      value /= p;
      ++v;
    }
  return v;
}

} // namespace hookblock
