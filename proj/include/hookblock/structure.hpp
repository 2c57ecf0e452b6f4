#pragma once

#include "hookblock/blocks.hpp"
#include "hookblock/characters.hpp"
#include "hookblock/diagram.hpp"
#include "hookblock/jantzen.hpp"
#include "hookblock/matrix.hpp"
#include "hookblock/mullineux.hpp"
#include "hookblock/partition.hpp"
#include "hookblock/report.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Structure of the p-hook block. Everything here is transcribed from the
// known answer and then checked against the characters, blocks, Jantzen and
// Mullineux computations; a failed check throws CrossCheckFailure.

namespace hookblock {

namespace detail {

inline void require_structure_args(std::size_t n, Int p)
{
  require_prime(p);
  if(n < 2)
    throw std::invalid_argument("the hook block needs n >= 2");
}

inline void ensure(bool ok, const std::string &what)
{
  if(!ok)
    throw CrossCheckFailure("hook block cross-check failed: " + what);
}

inline std::vector<Partition> hook_labels(Int p, Int top)
{
  std::vector<Partition> out;
  for(Int i = 0; i <= top; ++i)
    out.push_back(hook_partition(p, i));
  return out;
}

} // namespace detail

/// [Delta(lambda^i) : L(lambda^j)] for the hooks lambda^0 .. lambda^m,
/// m = min(n-1, p-1).
struct DecompositionMatrix
{
  std::vector<Partition> rows; // Weyl module labels
  std::vector<Partition> cols; // simple module labels
  IntMatrix entries{0, 0};
};

inline DecompositionMatrix hook_decomposition_matrix(std::size_t n, Int p)
{
  detail::require_structure_args(n, p);
  const Int top = hook_range_top(p, n);
  const auto size = static_cast<std::size_t>(top + 1);
  DecompositionMatrix out{detail::hook_labels(p, top),
                          detail::hook_labels(p, top), IntMatrix(size, size)};
  for(std::size_t i = 0; i < size; ++i)
    {
      out.entries(i, i) = 1;
      if(i + 1 < size)
        out.entries(i, i + 1) = 1;
    }

  std::vector<CharacterElement> simples;
  for(Int j = 0; j <= top; ++j)
    simples.push_back(hook_simple_character(p, n, j));
  for(std::size_t i = 0; i < size; ++i)
    {
      CharacterElement sum(n);
      for(std::size_t j = 0; j < size; ++j)
        sum += out.entries(i, j) * simples[j];
      detail::ensure(sum == weyl_character(out.rows[i], n),
                     "ch Delta(" + out.rows[i].to_string()
                       + ") differs from the sum of its composition factors");
      if(i + 1 < size)
        detail::ensure(verify_lemma_A(p, n, static_cast<Int>(i)),
                       "Jantzen sum of " + out.rows[i].to_string()
                         + " misses the next hook");
      else
        detail::ensure(to_character(jantzen_sum(out.rows[i], n, p).terms,
                                    Virtual::allowed)
                         .is_zero(),
                       "Jantzen sum of the last hook is nonzero");
    }
  if(static_cast<Int>(n) >= p)
    {
      const Partition row{p};
      for(const Partition &hook : out.rows)
        detail::ensure(same_block(row, hook, n, p),
                       hook.to_string() + " outside the block of (p)");
    }
  return out;
}

/// (I(lambda^i) : nabla(lambda^j)) = [nabla(lambda^j) : L(lambda^i)], the
/// transpose of the decomposition matrix.
inline IntMatrix reciprocity_table(std::size_t n, Int p)
{
  return hook_decomposition_matrix(n, p).entries.transposed();
}

/// C = D^T D: C(i, j) = [P(lambda^i) : L(lambda^j)].
inline IntMatrix cartan_matrix(std::size_t n, Int p)
{
  const IntMatrix d = hook_decomposition_matrix(n, p).entries;
  const IntMatrix c = d.transposed() * d;
  detail::ensure(c.is_symmetric(), "Cartan matrix is not symmetric");
  return c;
}

/// Ext^1 between hook simples: a path lambda^0 - lambda^1 - ... - lambda^m.
struct ExtQuiver
{
  std::vector<Partition> vertices;
  IntMatrix adjacency{0, 0};

  std::vector<std::pair<std::size_t, std::size_t>> edges() const
  {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for(std::size_t a = 0; a < adjacency.rows(); ++a)
      for(std::size_t b = a + 1; b < adjacency.cols(); ++b)
        for(Int k = 0; k < adjacency(a, b); ++k)
          out.emplace_back(a, b);
    return out;
  }
};

inline ExtQuiver ext_quiver(std::size_t n, Int p)
{
  const DecompositionMatrix d = hook_decomposition_matrix(n, p);
  const std::size_t size = d.rows.size();
  ExtQuiver out{d.rows, IntMatrix(size, size)};
  for(std::size_t i = 0; i + 1 < size; ++i)
    out.adjacency(i, i + 1) = out.adjacency(i + 1, i) = 1;
  // Ext^1(L(lambda), L(mu)) for mu < lambda is Hom(rad Delta(lambda), L(mu));
  // each Delta here has radical L(next hook) or zero.
  for(std::size_t i = 0; i < size; ++i)
    for(std::size_t j = i + 1; j < size; ++j)
      detail::ensure(out.adjacency(i, j) == d.entries(i, j),
                     "Ext quiver disagrees with the Weyl module radicals");
  return out;
}

struct ProjectiveModule
{
  Int i = 0;
  ModuleDiagram<Partition> diagram;
  Partition tilting_label;             // P = I = T(tilting_label)
  std::vector<Partition> nabla_factors; // nabla-filtration subquotients
};

/// P(lambda^i) = I(lambda^i) = T(lambda^(i-1)) for 1 <= i <= m: a diamond
/// with middle layer [lambda^(i+1), lambda^(i-1)] for i < m, uniserial
/// lambda^m / lambda^(m-1) / lambda^m at i = m.
inline ProjectiveModule projective_diagram(Int i, std::size_t n, Int p)
{
  detail::require_structure_args(n, p);
  const Int top = hook_range_top(p, n);
  if(i == 0)
    throw std::invalid_argument(
      "P(lambda^0) is the Weyl module Delta(lambda^0) (and I(lambda^0) is "
      "nabla(lambda^0)); it is not tilting and has no diagram of this shape");
  if(i < 1 || i > top)
    throw std::out_of_range("projective diagrams need 1 <= i <= min(n-1, "
                            "p-1) = "
                            + std::to_string(top));

  ProjectiveModule out;
  out.i = i;
  const Partition self = hook_partition(p, i);
  const Partition below = hook_partition(p, i - 1);
  if(i < top)
    {
      out.diagram.layers = {{self}, {hook_partition(p, i + 1), below}, {self}};
      out.diagram.edges = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 0}};
    }
  else
    {
      out.diagram.layers = {{self}, {below}, {self}};
      out.diagram.edges = {{0, 0, 0}, {1, 0, 0}};
    }
  out.tilting_label = below;

  // Read the nabla content off the reciprocity table and check it against
  // the diagram and the Cartan matrix.
  const IntMatrix recip = reciprocity_table(n, p);
  const IntMatrix cartan = cartan_matrix(n, p);
  const auto row = static_cast<std::size_t>(i);
  std::map<Partition, int> from_nablas;
  for(std::size_t j = 0; j < recip.cols(); ++j)
    for(Int k = 0; k < recip(row, j); ++k)
      {
        const Partition label = hook_partition(p, static_cast<Int>(j));
        out.nabla_factors.push_back(label);
        ++from_nablas[label];
        if(static_cast<Int>(j) < top)
          ++from_nablas[hook_partition(p, static_cast<Int>(j) + 1)];
      }
  const auto factors = out.diagram.composition_factors();
  detail::ensure(factors == from_nablas,
                 "diagram of P(" + self.to_string()
                   + ") disagrees with its nabla filtration");
  for(std::size_t j = 0; j < cartan.cols(); ++j)
    {
      auto it = factors.find(hook_partition(p, static_cast<Int>(j)));
      const Int count = it == factors.end() ? 0 : it->second;
      detail::ensure(count == cartan(row, j),
                     "diagram of P(" + self.to_string()
                       + ") disagrees with the Cartan matrix");
    }
  detail::ensure(out.diagram.layers.front() == std::vector<Partition>{self}
                   && out.diagram.layers.back() == std::vector<Partition>{self},
                 "top and socle of P(" + self.to_string() + ")");
  return out;
}

/// I(lambda) = T(Mull(lambda')) for a column p-regular hook lambda^i.
struct TiltingRecord
{
  Int i = 0;
  Partition hook;
  Partition conjugate_hook;
  Partition mullineux_image;
  Partition expected; // lambda^(i-1)
  bool passed = false;
};

inline std::vector<TiltingRecord> tilting_injective_labels(std::size_t n, Int p)
{
  detail::require_structure_args(n, p);
  std::vector<TiltingRecord> out;
  for(Int i = 1; i <= hook_range_top(p, n); ++i)
    {
      TiltingRecord record;
      record.i = i;
      record.hook = hook_partition(p, i);
      record.conjugate_hook = conjugate(record.hook);
      record.mullineux_image = mullineux(record.conjugate_hook, p);
      record.expected = hook_partition(p, i - 1);
      record.passed = record.mullineux_image == record.expected
                      && projective_diagram(i, n, p).tilting_label
                           == record.mullineux_image;
      out.push_back(std::move(record));
    }
  return out;
}

/// Brauer tree of the principal block of k Sigma_p: vertices 0..p-1 in a
/// line, edge j - 1 -- j carrying D_j, no exceptional vertex.
struct BrauerTree
{
  struct Edge
  {
    std::string label;
    std::array<Int, 2> ends;
  };
  Int vertices = 0;
  std::vector<Edge> edges;
  bool has_exceptional_vertex = false;
};

inline std::string simple_symmetric_label(Int j)
{
  return "D_" + std::to_string(j);
}

inline BrauerTree brauer_tree(Int p)
{
  require_prime(p);
  BrauerTree tree;
  tree.vertices = p;
  for(Int j = 1; j <= p - 1; ++j)
    tree.edges.push_back({simple_symmetric_label(j), {j - 1, j}});
  return tree;
}

/// Projective indecomposables P_1 .. P_(p-1) of the principal block of
/// k Sigma_p. For p = 2 the single one is uniserial of length 2.
inline std::vector<ModuleDiagram<std::string>> principal_block_diagrams(Int p)
{
  require_prime(p);
  std::vector<ModuleDiagram<std::string>> out;
  if(p == 2)
    {
      const std::string d1 = simple_symmetric_label(1);
      out.push_back({{{d1}, {d1}}, {{0, 0, 0}}});
      return out;
    }
  for(Int j = 1; j <= p - 1; ++j)
    {
      const std::string self = simple_symmetric_label(j);
      ModuleDiagram<std::string> diagram;
      if(j == 1)
        diagram = {{{self}, {simple_symmetric_label(2)}, {self}},
                   {{0, 0, 0}, {1, 0, 0}}};
      else if(j == p - 1)
        diagram = {{{self}, {simple_symmetric_label(p - 2)}, {self}},
                   {{0, 0, 0}, {1, 0, 0}}};
      else
        diagram = {{{self},
                    {simple_symmetric_label(j + 1),
                     simple_symmetric_label(j - 1)},
                    {self}},
                   {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 0}}};
      out.push_back(std::move(diagram));
    }
  return out;
}

/// Deleting lambda^0 and its projective from the hook block, and relabeling
/// lambda^i as D_i, recovers the principal block of k Sigma_p.
inline Report deletion_comparison(std::size_t n, Int p)
{
  require_prime(p);
  Report report{"deletion", {}, false, {}};
  if(static_cast<Int>(n) < p)
    {
      report.skipped = true;
      report.skip_reason = "needs n >= p";
      return report;
    }
  auto relabel = [p](const Partition &label) {
    return simple_symmetric_label(hook_index(label, p));
  };
  const Partition row{p};
  auto is_row = [&row](const auto &label) { return label == row; };

  // Ext quiver minus lambda^0 against the line graph of the Brauer tree.
  const ExtQuiver quiver = ext_quiver(n, p);
  const BrauerTree tree = brauer_tree(p);
  std::set<std::pair<std::string, std::string>> quiver_edges, tree_edges;
  for(auto [a, b] : quiver.edges())
    if(a != 0 && b != 0)
      quiver_edges.emplace(relabel(quiver.vertices[a]),
                           relabel(quiver.vertices[b]));
  for(std::size_t a = 0; a < tree.edges.size(); ++a)
    for(std::size_t b = a + 1; b < tree.edges.size(); ++b)
      {
        const auto &x = tree.edges[a].ends, &y = tree.edges[b].ends;
        if(x[0] == y[0] || x[0] == y[1] || x[1] == y[0] || x[1] == y[1])
          tree_edges.emplace(tree.edges[a].label, tree.edges[b].label);
      }
  std::set<std::string> quiver_vertices, tree_labels;
  for(std::size_t v = 1; v < quiver.vertices.size(); ++v)
    quiver_vertices.insert(relabel(quiver.vertices[v]));
  for(const auto &edge : tree.edges)
    tree_labels.insert(edge.label);
  report.add("simples", quiver_vertices == tree_labels,
             std::to_string(quiver_vertices.size()) + " vs "
               + std::to_string(tree_labels.size()));
  report.add("ext quiver", quiver_edges == tree_edges,
             std::to_string(quiver_edges.size()) + " vs "
               + std::to_string(tree_edges.size()) + " edges");
  report.add("no exceptional vertex", !tree.has_exceptional_vertex);

  const auto targets = principal_block_diagrams(p);
  for(Int i = 1; i <= p - 1; ++i)
    {
      const ModuleDiagram<std::string> reduced
        = projective_diagram(i, n, p).diagram.erase_if(is_row).relabel(relabel);
      const auto &target = targets[static_cast<std::size_t>(i - 1)];
      report.add("P(" + hook_partition(p, i).to_string() + ") -> P_"
                   + std::to_string(i),
                 reduced == target);
    }
  return report;
}

} // namespace hookblock
