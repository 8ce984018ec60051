#pragma once

// Test-only reference computations. Nothing here calls into the library's
// search or arithmetic code; only the Graph container is shared.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "isat/graph.hpp"

namespace oracle {

inline std::uint64_t test_seed() {
  if (const char* env = std::getenv("ISAT_TEST_SEED")) return std::strtoull(env, nullptr, 10);
  return 0x5eed2026ULL;
}

// Multiply by alpha one step at a time, reducing whenever bit k appears.
inline std::uint32_t field_mul(std::uint32_t a, std::uint32_t b, int k, std::uint32_t modulus) {
  std::uint32_t result = 0;
  std::uint32_t shifted = a;
  for (int i = 0; i < k; ++i) {
    if ((b >> i) & 1u) result ^= shifted;
    shifted <<= 1;
    if (shifted & (1u << k)) shifted ^= modulus;
  }
  return result;
}

inline std::uint32_t field_pow(std::uint32_t a, unsigned e, int k, std::uint32_t modulus) {
  std::uint32_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = field_mul(r, a, k, modulus);
  return r;
}

inline unsigned multiplicative_order(std::uint32_t a, int k, std::uint32_t modulus) {
  std::uint32_t x = a;
  unsigned order = 1;
  while (x != 1) {
    x = field_mul(x, a, k, modulus);
    ++order;
  }
  return order;
}

// Carry-less product of two GF(2)[x] polynomials, no reduction.
inline std::uint32_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = 0;
  for (int i = 0; i < 16; ++i) {
    if ((b >> i) & 1u) r ^= a << i;
  }
  return r;
}

// Every polynomial of degree <= max_degree that is a product of two
// polynomials of degree >= 1.
inline std::vector<bool> reducible_table(int max_degree) {
  std::vector<bool> reducible(std::size_t{1} << (max_degree + 1), false);
  for (std::uint32_t a = 2; a < (1u << max_degree); ++a) {
    for (std::uint32_t b = 2; b < (1u << max_degree); ++b) {
      const std::uint32_t p = clmul(a, b);
      if (p < reducible.size()) reducible[p] = true;
    }
  }
  return reducible;
}

inline bool tuple_is_induced_path(const isat::Graph& g, const std::vector<int>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return false;
      if (g.has_edge(t[i], t[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

// Visits every ordered n-tuple of distinct vertices that forms an induced
// path. The visitor returns true to stop.
inline bool for_each_induced_path(const isat::Graph& g, int n,
                                  const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> rec = [&](int depth) {
    if (depth == n) return tuple_is_induced_path(g, t) && visit(t);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (std::find(t.begin(), t.begin() + depth, v) != t.begin() + depth) continue;
      t[static_cast<std::size_t>(depth)] = v;
      if (rec(depth + 1)) return true;
    }
    return false;
  };
  return n <= g.vertex_count() && rec(0);
}

// Same set of tuples as for_each_induced_path, but each new vertex is
// checked against the prefix so 16-vertex graphs stay cheap.
inline bool for_each_induced_path_pruned(const isat::Graph& g, int n,
                                         const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> t;
  std::function<bool()> rec = [&]() {
    if (static_cast<int>(t.size()) == n) return visit(t);
    for (int v = 0; v < g.vertex_count(); ++v) {
      bool ok = std::find(t.begin(), t.end(), v) == t.end();
      for (std::size_t i = 0; ok && i < t.size(); ++i) ok = g.has_edge(t[i], v) == (i + 1 == t.size());
      if (!ok) continue;
      t.push_back(v);
      if (rec()) return true;
      t.pop_back();
    }
    return false;
  };
  return rec();
}

inline bool has_induced_path(const isat::Graph& g, int n) {
  return for_each_induced_path(g, n, [](const std::vector<int>&) { return true; });
}

inline isat::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  isat::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

struct SrgParameters {
  bool regular = false;
  int degree = -1;
  int lambda = -1;  // common neighbours of adjacent pairs, -1 if not constant
  int mu = -1;      // common neighbours of non-adjacent pairs, -1 if not constant
};

// Pair-by-pair neighbour counting through has_edge only.
inline SrgParameters srg_parameters(const isat::Graph& g) {
  const int n = g.vertex_count();
  SrgParameters p;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.has_edge(u, v)) ++degree[static_cast<std::size_t>(u)];
    }
  }
  p.regular = std::all_of(degree.begin(), degree.end(), [&](int d) { return d == degree[0]; });
  p.degree = p.regular ? degree[0] : -1;
  bool lambda_const = true;
  bool mu_const = true;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int common = 0;
      for (int w = 0; w < n; ++w) {
        if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) ++common;
      }
      int& slot = g.has_edge(u, v) ? p.lambda : p.mu;
      bool& constant = g.has_edge(u, v) ? lambda_const : mu_const;
      if (slot == -1) slot = common;
      else if (slot != common) constant = false;
    }
  }
  if (!lambda_const) p.lambda = -1;
  if (!mu_const) p.mu = -1;
  return p;
}

}  // namespace oracle
