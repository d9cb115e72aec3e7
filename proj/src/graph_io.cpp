#include "dcay/graph_io.hpp"

#include <algorithm>
#include <sstream>

#include "dcay/dihedral.hpp"
#include "dcay/error.hpp"

namespace dcay {

namespace {

constexpr int kBias = 63;

std::string vertex_label(const Graph& g, int v) {
  if (!g.is_layered()) return std::to_string(v);
  const int n = g.layer_modulus();
  return v < n ? "r^" + std::to_string(v) : "s*r^" + std::to_string(v - n);
}

}  // namespace

std::string export_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << vertex_label(g, v) << "\"";
    if (g.is_layered()) out << ", layer=\"" << (v < g.layer_modulus() ? "R" : "F") << "\"";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift : {30, 24, 18, 12, 6, 0}) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  auto byte = [&](std::size_t pos) {
    if (pos >= text.size()) throw Error(ErrorCode::ParseError, "graph6 string truncated");
    const int c = static_cast<unsigned char>(text[pos]) - kBias;
    if (c < 0 || c > 63) throw Error(ErrorCode::ParseError, "graph6 byte out of range");
    return c;
  };
  std::size_t pos = 0;
  std::int64_t n = 0;
  if (!text.empty() && text[0] == 126) {
    const int width = text.size() > 1 && text[1] == 126 ? 6 : 3;
    pos = width == 6 ? 2 : 1;
    for (int k = 0; k < width; ++k) n = (n << 6) | byte(pos++);
  } else {
    n = byte(pos++);
  }
  Graph g(static_cast<int>(n));
  int bit = 6;
  int chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit == 6) {
        chunk = byte(pos++);
        bit = 0;
      }
      if ((chunk >> (5 - bit)) & 1) g.add_edge(i, j);
      ++bit;
    }
  }
  if (pos != text.size()) throw Error(ErrorCode::ParseError, "trailing bytes in graph6 string");
  return g;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json adj = nlohmann::json::array();
  for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
  nlohmann::json j{{"order", g.order()}, {"adj", adj}};
  if (g.is_layered()) j["layer_modulus"] = g.layer_modulus();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  Graph g = j.contains("layer_modulus") ? Graph::layered(j["layer_modulus"].get<int>()) : Graph(order);
  if (g.order() != order) throw Error(ErrorCode::ParseError, "order and layer_modulus disagree");
  const auto& adj = j.at("adj");
  if (static_cast<int>(adj.size()) != order) throw Error(ErrorCode::ParseError, "adj length");
  for (int u = 0; u < order; ++u) {
    for (int v : adj[u].get<std::vector<int>>()) {
      if (v < 0 || v >= order) throw Error(ErrorCode::ParseError, "neighbour out of range");
      g.add_edge(u, v);
    }
  }
  for (int u = 0; u < order; ++u) {
    for (int v : g.neighbors(u)) {
      const auto row = adj[v].get<std::vector<int>>();
      if (std::find(row.begin(), row.end(), u) == row.end()) {
        throw Error(ErrorCode::ParseError, "adjacency is not symmetric");
      }
    }
  }
  return g;
}

}  // namespace dcay
