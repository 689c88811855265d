#pragma once

#include "pmc/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace pmc {

enum class GraphFormat { EdgeList, Dimacs };

struct GraphInput {
  Graph graph;
  // Side-1 vertices from a `bip` line, if the file carried one.
  std::optional<VertexSet> side1;
};

// Edge-list text:
//   n m [weighted]
//   u v            (m lines, 0-based)
//   w v num/den    (optional weight lines)
//   bip v1 v2 ...  (optional side-1 vertex list)
// DIMACS: `c` comments, `p edge n m`, `e u v` (1-based), optional `bip` with
// 1-based vertices.
GraphInput parse_graph(std::string_view text, GraphFormat format = GraphFormat::EdgeList);
GraphInput read_graph_file(const std::string& path, GraphFormat format = GraphFormat::EdgeList);

std::string write_edgelist(const Graph& g, const std::optional<VertexSet>& side1 = std::nullopt);

Weight parse_weight(std::string_view token);

} // namespace pmc
