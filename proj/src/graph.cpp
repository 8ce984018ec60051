#include "isat/graph.hpp"

#include <stdexcept>
#include <string>

namespace isat {

std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

VertexSet to_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex " + std::to_string(v));
    s |= vertex_bit(v);
  }
  return s;
}

VertexPair VertexPair::of(int a, int b) {
  if (a == b) throw std::invalid_argument("vertex pair needs two distinct vertices");
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph size must be in [0, 64], got " + std::to_string(n));
  }
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.rows_[static_cast<std::size_t>(v)] = g.vertices() & ~vertex_bit(v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
  return twice / 2;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("vertex out of range in pair (" + std::to_string(u) + ", " +
                            std::to_string(v) + ")");
  }
  if (u == v) throw std::invalid_argument("loops are not allowed");
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[static_cast<std::size_t>(u)] |= vertex_bit(v);
  rows_[static_cast<std::size_t>(v)] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
  rows_[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
}

void Graph::toggle(VertexPair e) {
  check_pair(e.u, e.v);
  rows_[static_cast<std::size_t>(e.u)] ^= vertex_bit(e.v);
  rows_[static_cast<std::size_t>(e.v)] ^= vertex_bit(e.u);
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : to_vector(neighbors(u) & ~first_vertices(u + 1))) out.push_back({u, v});
  }
  return out;
}

std::vector<VertexPair> Graph::non_edges() const {
  std::vector<VertexPair> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : to_vector(vertices() & ~neighbors(u) & ~first_vertices(u + 1))) out.push_back({u, v});
  }
  return out;
}

std::vector<VertexPair> all_pairs(int n) {
  std::vector<VertexPair> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.push_back({u, v});
  }
  return out;
}

Graph cayley_graph(const BinaryField& field, std::span<const FieldElement> connection) {
  if (field.bits() > 6) throw std::invalid_argument("Cayley graph would exceed 64 vertices");
  VertexSet connection_mask = 0;
  for (FieldElement s : connection) {
    if (!field.contains(s)) throw std::out_of_range("connection element out of range");
    if (s.bits == 0) throw std::invalid_argument("connection set must not contain 0");
    connection_mask |= vertex_bit(static_cast<int>(s.bits));
  }
  const int n = static_cast<int>(field.order());
  Graph g(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (connection_mask & vertex_bit(x ^ y)) g.add_edge(x, y);
    }
  }
  return g;
}

Graph circulant_graph(int m, std::span<const int> connection) {
  Graph g(m);
  VertexSet residues = 0;
  for (int s : connection) {
    if (s <= 0 || s >= m) throw std::invalid_argument("connection residue must be in [1, m-1]");
    residues |= vertex_bit(s);
  }
  for (int s : to_vector(residues)) {
    if (!(residues & vertex_bit(m - s))) {
      throw std::invalid_argument("connection set is not closed under negation mod m");
    }
  }
  for (int s : to_vector(residues)) {
    for (int u = 0; u < m; ++u) {
      const int v = (u + s) % m;
      if (u != v) g.add_edge(u, v);
    }
  }
  return g;
}

Graph toggle_edge(Graph g, VertexPair e) {
  g.toggle(e);
  return g;
}

VertexSet common_nonneighbors(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("common_nonneighbors needs distinct vertices");
  return g.vertices() & ~(g.neighbors(u) | g.neighbors(v) | vertex_bit(u) | vertex_bit(v));
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
  if (w & ~g.vertices()) throw std::out_of_range("induced_subgraph: vertex out of range");
  InducedSubgraph out{Graph(std::popcount(w)), to_vector(w)};
  const auto& map = out.vertex_map;
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = i + 1; j < map.size(); ++j) {
      if (g.has_edge(map[i], map[j])) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

namespace {

void check_length(int n) {
  if (n < 2) throw std::invalid_argument("path length must be at least 2, got " + std::to_string(n));
}

// Depth-first extension from the tip. `blocked` is the union of closed
// neighbourhoods of every path vertex except the tip.
bool extend_tip(const Graph& g, std::vector<int>& path, VertexSet blocked, int n) {
  if (static_cast<int>(path.size()) == n) return true;
  const int tip = path.back();
  const VertexSet next_blocked = blocked | g.neighbors(tip) | vertex_bit(tip);
  for (VertexSet c = g.neighbors(tip) & ~blocked; c != 0; c &= c - 1) {
    path.push_back(std::countr_zero(c));
    if (extend_tip(g, path, next_blocked, n)) return true;
    path.pop_back();
  }
  return false;
}

// Path held in the middle of a fixed buffer so both ends can grow.
class TwoEndedPath {
 public:
  explicit TwoEndedPath(std::span<const int> seed) : head_(kMaxVertices), tail_(kMaxVertices) {
    for (int v : seed) push_back(v);
  }

  int size() const { return tail_ - head_; }
  int front() const { return buf_[static_cast<std::size_t>(head_)]; }
  int back() const { return buf_[static_cast<std::size_t>(tail_ - 1)]; }
  VertexSet members() const { return members_; }

  void push_back(int v) {
    buf_[static_cast<std::size_t>(tail_++)] = v;
    members_ |= vertex_bit(v);
  }
  void pop_back() { members_ &= ~vertex_bit(buf_[static_cast<std::size_t>(--tail_)]); }
  void push_front(int v) {
    buf_[static_cast<std::size_t>(--head_)] = v;
    members_ |= vertex_bit(v);
  }
  void pop_front() { members_ &= ~vertex_bit(buf_[static_cast<std::size_t>(head_++)]); }

  PathWitness witness() const {
    return {std::vector<int>(buf_.begin() + head_, buf_.begin() + tail_)};
  }

 private:
  std::array<int, 2 * kMaxVertices + 1> buf_{};
  int head_;
  int tail_;
  VertexSet members_ = 0;
};

// Vertices that may be attached next to `end` keeping the path induced.
template <typename Fn>
bool for_each_attachable(const Graph& g, const TwoEndedPath& p, int end, Fn&& fn) {
  const VertexSet inside = p.members();
  for (VertexSet c = g.neighbors(end) & ~inside; c != 0; c &= c - 1) {
    const int w = std::countr_zero(c);
    if ((g.neighbors(w) & inside) == vertex_bit(end) && fn(w)) return true;
  }
  return false;
}

bool grow_ends(const Graph& g, TwoEndedPath& p, int add_back, int add_front) {
  if (add_back > 0) {
    return for_each_attachable(g, p, p.back(), [&](int w) {
      p.push_back(w);
      if (grow_ends(g, p, add_back - 1, add_front)) return true;
      p.pop_back();
      return false;
    });
  }
  if (add_front > 0) {
    return for_each_attachable(g, p, p.front(), [&](int w) {
      p.push_front(w);
      if (grow_ends(g, p, 0, add_front - 1)) return true;
      p.pop_front();
      return false;
    });
  }
  return true;
}

// Grows an induced seed path to exactly n vertices by attaching vertices at
// both ends, trying every split of the missing count.
bool complete_seed(const Graph& g, TwoEndedPath& p, int n) {
  const int missing = n - p.size();
  if (missing < 0) return false;
  for (int back = missing; back >= 0; --back) {
    if (grow_ends(g, p, back, missing - back)) return true;
  }
  return false;
}

// Induced segments from e.u ending at e.v, each completed to n vertices.
bool segment_to_target(const Graph& g, TwoEndedPath& p, int target, int n) {
  const int tip = p.back();
  if (tip == target) return complete_seed(g, p, n);
  // A tip adjacent to the target must be followed by it.
  if (g.has_edge(tip, target)) {
    if (p.size() + 1 > n || (g.neighbors(target) & p.members()) != vertex_bit(tip)) return false;
    p.push_back(target);
    if (complete_seed(g, p, n)) return true;
    p.pop_back();
    return false;
  }
  if (p.size() + 2 > n) return false;
  return for_each_attachable(g, p, tip, [&](int w) {
    p.push_back(w);
    if (segment_to_target(g, p, target, n)) return true;
    p.pop_back();
    return false;
  });
}

}  // namespace

std::optional<PathWitness> find_induced_path(const Graph& g, int n) {
  check_length(n);
  if (n > g.vertex_count()) return std::nullopt;
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(n));
  for (int start = 0; start < g.vertex_count(); ++start) {
    path.assign(1, start);
    if (extend_tip(g, path, 0, n)) return PathWitness{path};
  }
  return std::nullopt;
}

std::optional<PathWitness> find_induced_path_through(const Graph& g, VertexPair e, int n) {
  check_length(n);
  if (!g.has_edge(e)) throw std::invalid_argument("find_induced_path_through: pair is not an edge");
  const int seed[] = {e.u, e.v};
  TwoEndedPath p(seed);
  if (complete_seed(g, p, n)) return p.witness();
  return std::nullopt;
}

std::optional<PathWitness> find_induced_path_covering(const Graph& g, VertexPair e, int n) {
  check_length(n);
  if (e.v >= g.vertex_count()) throw std::out_of_range("find_induced_path_covering: vertex out of range");
  const int seed[] = {e.u};
  TwoEndedPath p(seed);
  if (segment_to_target(g, p, e.v, n)) return p.witness();
  return std::nullopt;
}

bool is_induced_path(const Graph& g, std::span<const int> seq) {
  if (seq.empty()) return false;
  VertexSet seen = 0;
  for (int v : seq) {
    if (v < 0 || v >= g.vertex_count() || (seen & vertex_bit(v))) return false;
    seen |= vertex_bit(v);
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (g.has_edge(seq[i], seq[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

}  // namespace isat
