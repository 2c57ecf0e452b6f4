#pragma once

#include "hookblock/blocks.hpp"
#include "hookblock/characters.hpp"
#include "hookblock/jantzen.hpp"
#include "hookblock/partition.hpp"
#include "hookblock/report.hpp"
#include "hookblock/specht.hpp"
#include "hookblock/structure.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookblock {

/// Weyl modules of hooks have composition factors L(lambda^i), L(lambda^(i+1))
/// for i < m and Delta(lambda^m) is simple, at the level of characters.
inline Report verify_theorem(Int p, std::size_t n)
{
  Report report{"theorem", {}, false, {}};
  const Int top = hook_range_top(p, n);
  for(Int i = 0; i <= top; ++i)
    {
      const Partition hook = hook_partition(p, i);
      CharacterElement rest = weyl_character(hook, n) - hook_simple_character(p, n, i);
      if(i < top)
        rest -= hook_simple_character(p, n, i + 1);
      report.add("Delta(" + hook.to_string() + ")", rest.is_zero(),
                 i < top ? "= L(" + hook.to_string() + ") + L("
                             + hook_partition(p, i + 1).to_string() + ")"
                         : "simple");
    }
  // Assembly runs every structural cross-check.
  bool assembled = true;
  std::string detail = "decomposition matrix, Ext quiver, diagrams";
  try
    {
      (void)ext_quiver(n, p);
      for(Int i = 1; i <= top; ++i)
        (void)projective_diagram(i, n, p);
      for(const TiltingRecord &record : tilting_injective_labels(n, p))
        if(!record.passed)
          {
            assembled = false;
            detail = "I(" + record.hook.to_string() + ") != T("
                     + record.expected.to_string() + ")";
          }
    }
  catch(const CrossCheckFailure &error)
    {
      assembled = false;
      detail = error.what();
    }
  report.add("structure assembly", assembled, detail);
  return report;
}

inline Report verify_lemma_A_suite(Int p, std::size_t n)
{
  Report report{"lemmaA", {}, false, {}};
  const Int top = hook_range_top(p, n);
  for(Int i = 0; i < top; ++i)
    report.add("L(" + hook_partition(p, i + 1).to_string() + ") in Delta("
                 + hook_partition(p, i).to_string() + ")",
               verify_lemma_A(p, n, i));
  return report;
}

/// The block of (p) in S(n, p) is exactly the set of p-hooks.
inline Report verify_lemma_B(Int p, std::size_t n)
{
  Report report{"lemmaB", {}, false, {}};
  if(static_cast<Int>(n) < p)
    {
      report.skipped = true;
      report.skip_reason = "needs n >= p";
      return report;
    }
  const auto blocks = block_partition(n, p, p);
  const Partition row{p};
  const BlockDescriptor *home = nullptr;
  for(const BlockDescriptor &block : blocks)
    if(block.contains(row))
      home = &block;
  std::vector<Partition> hooks;
  for(Int i = 0; i <= p - 1; ++i)
    hooks.push_back(hook_partition(p, i));
  report.add("block of (" + row.to_string() + ") is the hook set",
             home != nullptr && home->members == hooks,
             std::to_string(home ? home->members.size() : 0) + " members");
  int strays = 0;
  for(const Partition &mu : partitions_of(p, n))
    if(hook_index(mu, p) < 0 && same_block(row, mu, n, p))
      ++strays;
  report.add("no non-hook in the block", strays == 0,
             std::to_string(strays) + " non-hooks linked");
  return report;
}

inline const std::vector<std::string> &verify_suite_names()
{
  static const std::vector<std::string> names{"theorem", "lemmaA", "lemmaB",
                                              "peel",    "bridge", "deletion"};
  return names;
}

inline std::vector<Report> run_verify(Int p, std::size_t n,
                                      const std::string &suite)
{
  require_prime(p);
  if(n < 2)
    throw std::invalid_argument("verify needs n >= 2");
  const std::map<std::string, std::function<Report()>> suites{
    {"theorem", [&] { return verify_theorem(p, n); }},
    {"lemmaA", [&] { return verify_lemma_A_suite(p, n); }},
    {"lemmaB", [&] { return verify_lemma_B(p, n); }},
    {"peel", [&] { return peel_check(p); }},
    {"bridge", [&] { return schur_bridge_check(p, n); }},
    {"deletion", [&] { return deletion_comparison(n, p); }},
  };
  std::vector<Report> out;
  if(suite == "all")
    {
      for(const std::string &name : verify_suite_names())
        out.push_back(suites.at(name)());
      return out;
    }
  auto it = suites.find(suite);
  if(it == suites.end())
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  out.push_back(it->second());
  return out;
}

} // namespace hookblock
