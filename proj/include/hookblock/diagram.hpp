#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace hookblock {

/// A layered module diagram. Layer 0 is the top. An edge {l, a, b} joins
/// position a of layer l to position b of layer l + 1.
template <class Label>
struct ModuleDiagram
{
  using Edge = std::array<std::size_t, 3>;

  std::vector<std::vector<Label>> layers;
  std::vector<Edge> edges;

  std::map<Label, int> composition_factors() const
  {
    std::map<Label, int> out;
    for(const auto &layer : layers)
      for(const Label &label : layer)
        ++out[label];
    return out;
  }

  std::size_t length() const
  {
    std::size_t total = 0;
    for(const auto &layer : layers)
      total += layer.size();
    return total;
  }

  template <class F>
  auto relabel(F &&f) const -> ModuleDiagram<std::invoke_result_t<F, const Label &>>
  {
    ModuleDiagram<std::invoke_result_t<F, const Label &>> out;
    for(const auto &layer : layers)
      {
        out.layers.emplace_back();
        for(const Label &label : layer)
          out.layers.back().push_back(f(label));
      }
    out.edges = edges;
    return out;
  }

  /// Drop every node whose label satisfies `doomed`, with its edges. A layer
  /// left empty disappears, and the layers on either side of it are joined
  /// wherever a path ran through the removed layer.
  template <class Pred>
  ModuleDiagram erase_if(Pred &&doomed) const
  {
    // Node ids (layer, position) -> new position, or npos.
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> position(layers.size());
    std::vector<std::vector<Label>> kept(layers.size());
    for(std::size_t l = 0; l < layers.size(); ++l)
      for(const Label &label : layers[l])
        {
          if(doomed(label))
            position[l].push_back(npos);
          else
            {
              position[l].push_back(kept[l].size());
              kept[l].push_back(label);
            }
        }

    // Adjacency between surviving nodes, collapsing emptied layers.
    std::set<std::array<std::size_t, 4>> links; // (l, a, l', b)
    for(const Edge &e : edges)
      {
        const std::size_t l = e[0];
        if(position[l][e[1]] == npos || position[l + 1][e[2]] == npos)
          continue;
        links.insert({l, position[l][e[1]], l + 1, position[l + 1][e[2]]});
      }
    for(std::size_t l = 1; l + 1 < layers.size(); ++l)
      {
        if(!kept[l].empty())
          continue;
        for(const Edge &up : edges)
          {
            if(up[0] != l - 1 || position[l - 1][up[1]] == npos)
              continue;
            for(const Edge &down : edges)
              if(down[0] == l && down[1] == up[2]
                 && position[l + 1][down[2]] != npos)
                links.insert({l - 1, position[l - 1][up[1]], l + 1,
                              position[l + 1][down[2]]});
          }
      }

    std::vector<std::size_t> new_index(layers.size(), npos);
    ModuleDiagram out;
    for(std::size_t l = 0; l < layers.size(); ++l)
      if(!kept[l].empty())
        {
          new_index[l] = out.layers.size();
          out.layers.push_back(kept[l]);
        }
    for(const auto &link : links)
      {
        const std::size_t from = new_index[link[0]], to = new_index[link[2]];
        if(from == npos || to == npos || to != from + 1)
          continue;
        out.edges.push_back({from, link[1], link[3]});
      }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
  }

  friend bool operator==(const ModuleDiagram &, const ModuleDiagram &) = default;
};

} // namespace hookblock
