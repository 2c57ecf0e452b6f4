#pragma once

#include "hookblock/checked.hpp"
#include "hookblock/partition.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hookblock {

/// One column of a Mullineux symbol: the size of a stripped p-rim and the
/// number of rows of the partition it was stripped from.
struct SymbolColumn
{
  Int rim_size = 0;
  Int rows = 0;
  friend bool operator==(const SymbolColumn &, const SymbolColumn &) = default;
};

using MullineuxSymbol = std::vector<SymbolColumn>;

/// Cells of the p-rim of lambda, counted per row (0-based rows).
///
/// The rim is walked from the last cell of the first row down and to the
/// left. It is cut into runs of p cells; when a run ends in row r, the next
/// run starts at the last cell of row r + 1. The final run may be short.
inline std::vector<Int> p_rim_row_counts(const Partition &lambda, Int p)
{
  const std::size_t rows = lambda.length();
  std::vector<Int> removed(rows, 0);
  std::size_t row = 0;
  while(row < rows)
    {
      Int taken = 0;
      std::size_t last_row = row;
      for(std::size_t r = row; r < rows && taken < p; ++r)
        {
          // Rim cells of row r occupy columns max(lambda[r+1], 1)..lambda[r].
          const Int rim_cells = lambda[r] - std::max<Int>(lambda[r + 1], 1) + 1;
          const Int take = std::min(rim_cells, p - taken);
          removed[r] += take;
          taken += take;
          last_row = r;
        }
      row = last_row + 1;
    }
  return removed;
}

inline Partition strip_p_rim(const Partition &lambda, Int p)
{
  const std::vector<Int> removed = p_rim_row_counts(lambda, p);
  std::vector<Int> parts(lambda.parts());
  for(std::size_t r = 0; r < parts.size(); ++r)
    parts[r] -= removed[r];
  std::vector<Int> kept;
  for(Int part : parts)
    if(part > 0)
      kept.push_back(part);
  return Partition(std::move(kept));
}

inline MullineuxSymbol mullineux_symbol(const Partition &lambda, Int p)
{
  if(!is_p_regular(lambda, p))
    throw std::invalid_argument("partition " + lambda.to_string()
                                + " is not " + std::to_string(p) + "-regular");
  MullineuxSymbol symbol;
  Partition current = lambda;
  while(!current.empty())
    {
      Int rim = 0;
      for(Int c : p_rim_row_counts(current, p))
        rim += c;
      symbol.push_back({rim, static_cast<Int>(current.length())});
      current = strip_p_rim(current, p);
    }
  return symbol;
}

/// Rebuild a p-regular partition from its Mullineux symbol.
///
/// Columns are consumed from the last one: at each step the unique p-regular
/// partition with the prescribed row count whose p-rim has the prescribed size
/// and strips to the partition built so far is found by search.
inline Partition partition_from_symbol(const MullineuxSymbol &symbol, Int p)
{
  Partition built;
  for(auto column = symbol.rbegin(); column != symbol.rend(); ++column)
    {
      const Int target = built.size() + column->rim_size;
      std::vector<Partition> found;
      for(const Partition &candidate :
          partitions_of(target, static_cast<std::size_t>(column->rows)))
        {
          if(static_cast<Int>(candidate.length()) != column->rows
             || !is_p_regular(candidate, p))
            continue;
          if(strip_p_rim(candidate, p) == built)
            found.push_back(candidate);
        }
      if(found.size() != 1)
        throw std::domain_error("not a valid Mullineux symbol ("
                                + std::to_string(found.size())
                                + " candidate partitions)");
      built = found.front();
    }
  return built;
}

/// The Mullineux map on p-regular partitions: D^lambda (x) sgn = D^Mull(lambda).
inline Partition mullineux(const Partition &lambda, Int p)
{
  MullineuxSymbol image = mullineux_symbol(lambda, p);
  for(SymbolColumn &column : image)
    {
      const Int divisible = column.rim_size % p == 0 ? 1 : 0;
      column.rows = column.rim_size - column.rows + (1 - divisible);
    }
  return partition_from_symbol(image, p);
}

} // namespace hookblock
