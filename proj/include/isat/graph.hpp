#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "isat/gf2k.hpp"

namespace isat {

inline constexpr int kMaxVertices = 64;

/// Set of vertex indices as a 64-bit mask.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_vertices(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::vector<int> to_vector(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

/// Unordered pair {u, v}, stored with u < v.
struct VertexPair {
  int u = 0;
  int v = 1;

  /// Normalizes the order; throws std::invalid_argument when a == b.
  static VertexPair of(int a, int b);

  bool contains(int x) const { return x == u || x == v; }

  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Ordered sequence of distinct vertices forming an induced path.
struct PathWitness {
  std::vector<int> vertices;

  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Loop-free undirected graph on at most 64 vertices with one bitset row
/// per vertex. Adjacency is kept symmetric by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return first_vertices(n_); }

  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return (neighbors(u) & vertex_bit(v)) != 0; }
  bool has_edge(VertexPair e) const { return has_edge(e.u, e.v); }
  int degree(int v) const { return std::popcount(neighbors(v)); }
  std::size_t edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Flips the adjacency of e.
  void toggle(VertexPair e);

  std::vector<VertexPair> edges() const;
  std::vector<VertexPair> non_edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

/// All pairs {u, v} with u < v < n in lexicographic order.
std::vector<VertexPair> all_pairs(int n);

/// Graph on 2^k vertices (index = element mask) with u ~ v iff u + v is in
/// the connection set.
Graph cayley_graph(const BinaryField& field, std::span<const FieldElement> connection);

/// Graph on 0..m-1 with u ~ v iff (u - v) mod m is in the connection set,
/// which must be closed under negation and exclude 0.
Graph circulant_graph(int m, std::span<const int> connection);

/// The graph with the adjacency of e flipped.
Graph toggle_edge(Graph g, VertexPair e);

/// Vertices other than u, v adjacent to neither.
VertexSet common_nonneighbors(const Graph& g, int u, int v);

struct InducedSubgraph {
  Graph graph;
  /// vertex_map[i] is the host vertex behind subgraph vertex i.
  std::vector<int> vertex_map;
};

/// Subgraph induced by `w`, vertices relabelled 0.. in increasing host order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);

/// Some induced path on n vertices, or nullopt if none exists. Exhaustive.
std::optional<PathWitness> find_induced_path(const Graph& g, int n);

/// Some induced n-vertex path using the edge e as a path edge.
std::optional<PathWitness> find_induced_path_through(const Graph& g, VertexPair e, int n);

/// Some induced n-vertex path containing both endpoints of e, which may or
/// may not be adjacent in g.
std::optional<PathWitness> find_induced_path_covering(const Graph& g, VertexPair e, int n);

/// Distinct in-range vertices, consecutive pairs adjacent, all other pairs
/// non-adjacent. Malformed sequences yield false.
bool is_induced_path(const Graph& g, std::span<const int> seq);

}  // namespace isat
