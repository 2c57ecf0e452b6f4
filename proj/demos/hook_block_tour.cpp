// Walks through the p-hook block for one prime: blocks, characters,
// decomposition numbers, projective diagrams and the symmetric-group side.
//
//   hook_block_tour [p]

#include "hookblock/hookblock.hpp"

#include <cstdlib>
#include <iostream>

using namespace hookblock;

int main(int argc, char **argv)
{
  const Int p = argc > 1 ? std::atoll(argv[1]) : 5;
  const auto n = static_cast<std::size_t>(p);
  require_prime(p);

  std::cout << "Blocks of S(" << n << "," << p << ") in characteristic " << p
            << ":\n";
  for(const BlockDescriptor &block : block_partition(n, p, p))
    {
      std::cout << "  d=" << block.d << " {";
      for(std::size_t k = 0; k < block.members.size(); ++k)
        std::cout << (k ? " | " : "") << block.members[k].to_string();
      std::cout << "}\n";
    }

  std::cout << "\nHook characters (dimension of Delta, dimension of L):\n";
  for(Int i = 0; i <= p - 1; ++i)
    {
      const Partition hook = hook_partition(p, i);
      std::cout << "  " << hook.to_string() << ": "
                << weyl_character(hook, n).dim() << ", "
                << hook_simple_character(p, n, i).dim() << '\n';
    }

  const DecompositionMatrix d = hook_decomposition_matrix(n, p);
  std::cout << "\nDecomposition matrix:\n";
  for(std::size_t r = 0; r < d.entries.rows(); ++r)
    {
      std::cout << "  ";
      for(std::size_t c = 0; c < d.entries.cols(); ++c)
        std::cout << d.entries(r, c) << ' ';
      std::cout << '\n';
    }

  std::cout << "\nProjective indecomposables P(lambda^i) = T(lambda^(i-1)):\n";
  for(Int i = 1; i <= p - 1; ++i)
    {
      const ProjectiveModule module = projective_diagram(i, n, p);
      std::cout << "  P(" << hook_partition(p, i).to_string() << "):";
      for(const auto &layer : module.diagram.layers)
        {
          std::cout << " [";
          for(std::size_t k = 0; k < layer.size(); ++k)
            std::cout << (k ? " " : "") << layer[k].to_string();
          std::cout << "]";
        }
      std::cout << '\n';
    }

  if(p <= kOracleMaxSize)
    {
      std::cout << "\nSpecht side (f = dim D_i + dim D_(i+1)):\n";
      for(const PeelRow &row : peel_rows(p))
        std::cout << "  i=" << row.i << ": " << row.specht_dim << " = "
                  << row.first << " + " << row.second << '\n';
    }
  return 0;
}
