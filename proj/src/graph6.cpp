#include "isat/graph_io.hpp"

#include <cctype>

namespace isat {
namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  if (text.front() == ':' || text.front() == ';' || text.front() == '&') {
    throw Graph6Error("graph6: sparse6/digraph6 input is not supported");
  }
  for (char c : text) {
    if (c < kOffset || c > 126) throw Graph6Error("graph6: byte outside printable range 63..126");
  }

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - kOffset;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw Graph6Error("graph6: unsupported size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (text[i] - kOffset);
    pos = 4;
  }
  if (n > kMaxVertices) throw Graph6Error("graph6: more than 64 vertices");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw Graph6Error("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                      std::to_string(text.size() - pos));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kOffset;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kOffset;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

nlohmann::json adjacency_json(const Graph& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) rows.push_back(to_vector(g.neighbors(v)));
  return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"adjacency", std::move(rows)}};
}

}  // namespace isat
