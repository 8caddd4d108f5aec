#include "ctwin/graph_io.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ctwin {

namespace {

void require_exportable(std::uint64_t v) {
  if (v > kMaxExportVertices)
    throw RangeError("export: " + std::to_string(v) + " vertices exceeds the supported " +
                     std::to_string(kMaxExportVertices));
}

void write_graph6_size(std::ostream& os, std::uint32_t n) {
  if (n <= 62) {
    os.put(static_cast<char>(n + 63));
    return;
  }
  os.put(126);
  for (int shift = 12; shift >= 0; shift -= 6)
    os.put(static_cast<char>(((n >> shift) & 63u) + 63));
}

// Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ... packed six
// bits per byte, most significant first, zero-padded.
template <class Adjacent>
void write_graph6(std::ostream& os, std::uint32_t n, Adjacent adjacent) {
  write_graph6_size(os, n);
  unsigned acc = 0;
  unsigned filled = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        os.put(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled)
    os.put(static_cast<char>((acc << (6 - filled)) + 63));
}

template <class Adjacent>
void write_json_edges(std::ostream& os, std::uint32_t n, Colour colour, Adjacent adjacent) {
  os << "{\"v\":" << n << ",\"colour\":\"" << to_string(colour) << "\",\"edges\":[";
  bool first = true;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (!adjacent(a, b))
        continue;
      if (!first)
        os << ',';
      first = false;
      os << '[' << a << ',' << b << ']';
    }
  }
  os << "]}";
}

}  // namespace

GraphFormat parse_graph_format(std::string_view text) {
  if (text == "graph6")
    return GraphFormat::Graph6;
  if (text == "json-edges")
    return GraphFormat::JsonEdges;
  throw Error("unknown graph format '" + std::string(text) + "' (expected graph6 or json-edges)");
}

void write_graph(std::ostream& os, const EdgeColouredGraph& g, Colour colour, GraphFormat format) {
  if (colour == Colour::None)
    throw Error("export: colour must be red or blue");
  require_exportable(g.vertex_count());
  auto adjacent = [&](std::uint32_t a, std::uint32_t b) { return g.colour(a, b) == colour; };
  if (format == GraphFormat::Graph6)
    write_graph6(os, g.vertex_count(), adjacent);
  else
    write_json_edges(os, g.vertex_count(), colour, adjacent);
}

std::string export_graph(const EdgeColouredGraph& g, Colour colour, GraphFormat format) {
  std::ostringstream os;
  write_graph(os, g, colour, format);
  return os.str();
}

std::string to_graph6(const SimpleGraph& g) {
  require_exportable(g.vertex_count());
  std::ostringstream os;
  write_graph6(os, g.vertex_count(), [&](std::uint32_t a, std::uint32_t b) { return g.adjacent(a, b); });
  return os.str();
}

SimpleGraph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<"))
    text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  auto byte = [&](std::size_t pos) -> unsigned {
    if (pos >= text.size())
      throw Error("graph6: truncated input");
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw Error("graph6: byte outside the printable range 63..126");
    return c - 63u;
  };
  std::size_t pos = 0;
  std::uint32_t n = byte(pos++);
  if (n == 63) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126)
      throw Error("graph6: graphs above 258047 vertices are not supported");
    n = 0;
    for (int i = 0; i < 3; ++i)
      n = (n << 6) | byte(pos++);
  }
  require_exportable(n);
  const std::uint64_t bits = std::uint64_t{n} * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() != pos + bytes)
    throw Error("graph6: expected " + std::to_string(pos + bytes) + " bytes, got " +
                std::to_string(text.size()));
  SimpleGraph g(n);
  std::uint64_t k = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i, ++k) {
      const unsigned chunk = byte(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1u)
        g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_json_edges(const SimpleGraph& g, Colour colour) {
  require_exportable(g.vertex_count());
  std::ostringstream os;
  write_json_edges(os, g.vertex_count(), colour,
                   [&](std::uint32_t a, std::uint32_t b) { return g.adjacent(a, b); });
  return os.str();
}

ColouredEdgeList from_json_edges(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto v = doc.at("v").get<std::uint64_t>();
    require_exportable(v);
    ColouredEdgeList out{SimpleGraph(static_cast<std::uint32_t>(v)),
                         parse_colour(doc.at("colour").get<std::string>())};
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw Error("json-edges: each edge must be a pair");
      out.graph.add_edge(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("json-edges: ") + e.what());
  }
}

}  // namespace ctwin
