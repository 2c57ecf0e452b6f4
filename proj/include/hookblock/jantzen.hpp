#pragma once

#include "hookblock/characters.hpp"
#include "hookblock/checked.hpp"
#include "hookblock/partition.hpp"
#include "hookblock/report.hpp"
#include "hookblock/weight.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hookblock {

/// One (root, m) term of the Jantzen sum before aggregation.
struct JantzenTerm
{
  std::size_t i = 0; // root eps_i - eps_j, 1-based
  std::size_t j = 0;
  Int m = 0;
  int valuation = 0; // nu_p(m p)
  int sign = 0;      // from straightening; 0 if the reflected weight is singular
  std::optional<Partition> straightened;
};

struct JantzenSum
{
  Partition lambda;
  std::size_t n = 0;
  Int p = 0;
  std::vector<JantzenTerm> ledger;
  WeylCharacterCombination terms{1};
};

/// sum_{j > 0} ch Delta(lambda)^j as a combination of Weyl characters:
///
///   sum over roots eps_i - eps_j (i < j) and m >= 1 with
///   0 < m p < (lambda + rho)_i - (lambda + rho)_j of
///   nu_p(m p) * chi(s_{alpha, m p} . lambda).
///
/// Every straightened term must be strictly dominated by lambda; anything
/// else throws CrossCheckFailure.
inline JantzenSum jantzen_sum(const Partition &lambda, std::size_t n, Int p)
{
  require_prime(p);
  if(lambda.length() > n)
    throw std::invalid_argument("partition " + lambda.to_string()
                                + " has more than n = " + std::to_string(n)
                                + " parts");
  JantzenSum out{lambda, n, p, {}, WeylCharacterCombination(n)};
  const Weight weight = Weight::from_partition(lambda, n);
  const Weight shifted = weight + rho(n);

  for(std::size_t i = 1; i <= n; ++i)
    for(std::size_t j = i + 1; j <= n; ++j)
      {
        const Int pairing = shifted.at(i) - shifted.at(j);
        for(Int m = 1; checked::mul(m, p) < pairing; ++m)
          {
            const Int level = m * p;
            const AffineReflection s(i, j, level, p);
            const StraightenedTerm term = chi_straighten(dot_reflect(s, weight));
            JantzenTerm entry{i, j, m, valuation(level, p), term.sign,
                              std::nullopt};
            if(term.sign != 0)
              {
                if(!term.polynomial)
                  throw CrossCheckFailure("Jantzen term "
                                         + term.dominant->to_string()
                                         + " is not polynomial");
                Partition nu = term.dominant->to_partition();
                if(nu == lambda || !dominates(lambda, nu))
                  throw CrossCheckFailure("Jantzen term " + nu.to_string()
                                         + " is not strictly below "
                                         + lambda.to_string());
                out.terms.add_term(nu, term.sign * entry.valuation);
                entry.straightened = std::move(nu);
              }
            out.ledger.push_back(std::move(entry));
          }
      }
  return out;
}

/// L(lambda^(i+1)) is a composition factor of Delta(lambda^i): the
/// aggregated sum carries chi(lambda^(i+1)) with coefficient >= 1.
inline bool verify_lemma_A(Int p, std::size_t n, Int i)
{
  require_prime(p);
  const Int top = hook_range_top(p, n);
  if(i < 0 || i >= top)
    throw std::out_of_range("need 0 <= i < min(n-1, p-1) = "
                            + std::to_string(top));
  const JantzenSum sum = jantzen_sum(hook_partition(p, i), n, p);
  return sum.terms.coefficient(hook_partition(p, i + 1)) >= 1;
}

} // namespace hookblock
