#pragma once

#include "hookblock/blocks.hpp"
#include "hookblock/characters.hpp"
#include "hookblock/diagram.hpp"
#include "hookblock/jantzen.hpp"
#include "hookblock/matrix.hpp"
#include "hookblock/partition.hpp"
#include "hookblock/report.hpp"
#include "hookblock/structure.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

// JSON forms of the library's values. Partitions are written as their
// comma-separated text ("4,1"); all numbers are integers. nlohmann::json
// objects keep keys sorted, so dumps are canonical.

namespace hookblock {

using Json = nlohmann::json;

inline Json to_json(const Partition &lambda) { return lambda.to_string(); }

inline Json to_json(const CharacterElement &ch)
{
  Json out = Json::array();
  for(const auto &[lambda, m] : ch.mults())
    out.push_back(Json::array({lambda.to_string(), m}));
  return out;
}

inline Json to_json(const WeylCharacterCombination &combo)
{
  Json out = Json::array();
  for(const auto &[lambda, c] : combo.terms())
    out.push_back(Json::array({lambda.to_string(), c}));
  return out;
}

inline Json to_json(const IntMatrix &matrix)
{
  Json out = Json::array();
  for(std::size_t r = 0; r < matrix.rows(); ++r)
    {
      Json row = Json::array();
      for(std::size_t c = 0; c < matrix.cols(); ++c)
        row.push_back(matrix(r, c));
      out.push_back(std::move(row));
    }
  return out;
}

inline Json to_json(const std::vector<BlockDescriptor> &blocks)
{
  Json out = Json::array();
  for(const BlockDescriptor &block : blocks)
    {
      Json members = Json::array();
      for(const Partition &lambda : block.members)
        members.push_back(lambda.to_string());
      out.push_back(std::move(members));
    }
  return out;
}

inline Json jantzen_ledger_json(const JantzenSum &sum)
{
  Json out = Json::array();
  for(const JantzenTerm &term : sum.ledger)
    out.push_back({{"root", {term.i, term.j}},
                   {"m", term.m},
                   {"valuation", term.valuation},
                   {"straightened", term.straightened
                                      ? Json(term.straightened->to_string())
                                      : Json(nullptr)},
                   {"sign", term.sign}});
  return out;
}

inline Json to_json(const DecompositionMatrix &d)
{
  Json rows = Json::array(), cols = Json::array();
  for(const Partition &lambda : d.rows)
    rows.push_back(lambda.to_string());
  for(const Partition &lambda : d.cols)
    cols.push_back(lambda.to_string());
  return {{"rows", rows}, {"cols", cols}, {"entries", to_json(d.entries)}};
}

template <class Label>
Json to_json(const ModuleDiagram<Label> &diagram)
{
  Json layers = Json::array(), edges = Json::array();
  for(const auto &layer : diagram.layers)
    {
      Json row = Json::array();
      for(const Label &label : layer)
        {
          if constexpr(std::is_same_v<Label, Partition>)
            row.push_back(label.to_string());
          else
            row.push_back(label);
        }
      layers.push_back(std::move(row));
    }
  for(const auto &edge : diagram.edges)
    edges.push_back({edge[0], edge[1], edge[2]});
  return {{"layers", layers}, {"edges", edges}};
}

inline Json to_json(const BrauerTree &tree)
{
  Json edges = Json::array();
  for(const auto &edge : tree.edges)
    edges.push_back({{"label", edge.label}, {"ends", {edge.ends[0], edge.ends[1]}}});
  return {{"vertices", tree.vertices},
          {"edges", edges},
          {"exceptional_vertex", nullptr}};
}

inline Json to_json(const Report &report)
{
  Json checks = Json::array();
  for(const Check &check : report.checks)
    checks.push_back({{"name", check.name},
                      {"status", check.passed ? "PASS" : "FAIL"},
                      {"detail", check.detail}});
  Json out = {{"suite", report.suite}, {"checks", checks}};
  if(report.skipped)
    {
      out["status"] = "SKIP";
      out["reason"] = report.skip_reason;
    }
  else
    out["status"] = report.passed() ? "PASS" : "FAIL";
  return out;
}

/// TSV rendering of a labeled matrix.
inline std::string to_tsv(const std::vector<Partition> &rows,
                          const std::vector<Partition> &cols,
                          const IntMatrix &matrix)
{
  std::ostringstream out;
  for(const Partition &c : cols)
    out << '\t' << c.to_string();
  out << '\n';
  for(std::size_t r = 0; r < matrix.rows(); ++r)
    {
      out << rows[r].to_string();
      for(std::size_t c = 0; c < matrix.cols(); ++c)
        out << '\t' << matrix(r, c);
      out << '\n';
    }
  return out.str();
}

} // namespace hookblock
