#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ctwin/graphs.hpp"

namespace ctwin {

enum class GraphFormat { Graph6, JsonEdges };

/// Accepts "graph6" and "json-edges".
GraphFormat parse_graph_format(std::string_view text);

/// Largest vertex count accepted by the exporters.
inline constexpr std::uint32_t kMaxExportVertices = 1u << 16;

/// Streams one colour class of g without materializing its adjacency.
/// graph6 output carries no ">>graph6<<" header and no trailing newline.
/// JSON output is {"v":..,"colour":..,"edges":[[a,b],..]} with a < b, sorted.
void write_graph(std::ostream& os, const EdgeColouredGraph& g, Colour colour, GraphFormat format);
std::string export_graph(const EdgeColouredGraph& g, Colour colour, GraphFormat format);

std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(std::string_view text);

std::string to_json_edges(const SimpleGraph& g, Colour colour);

struct ColouredEdgeList {
  SimpleGraph graph;
  Colour colour;
};

ColouredEdgeList from_json_edges(std::string_view text);

}  // namespace ctwin
