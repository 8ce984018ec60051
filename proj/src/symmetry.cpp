#include "isat/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace isat {
namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

constexpr std::size_t pair_key(VertexPair e) {
  return static_cast<std::size_t>(e.u) * kMaxVertices + static_cast<std::size_t>(e.v);
}

}  // namespace

AffineMap AffineMap::make(const BinaryField& field, FieldElement multiplier, FieldElement shift) {
  if (!field.contains(multiplier) || !field.contains(shift)) {
    throw std::out_of_range("affine map coefficient out of range");
  }
  const auto cubes = field.nonzero_cubes();
  if (!std::ranges::binary_search(cubes, multiplier)) {
    throw std::invalid_argument("affine multiplier must be a nonzero cube");
  }
  return {multiplier, shift};
}

FieldElement apply(const BinaryField& field, const AffineMap& map, FieldElement x) {
  return field.add(field.mul(map.multiplier, x), map.shift);
}

Permutation as_permutation(const BinaryField& field, const AffineMap& map) {
  Permutation perm(field.order());
  for (std::uint32_t x = 0; x < field.order(); ++x) {
    perm[x] = static_cast<int>(apply(field, map, {x}).bits);
  }
  return perm;
}

Permutation identity_permutation(int n) {
  Permutation perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return perm;
}

VertexPair image(std::span<const int> perm, VertexPair e) {
  return VertexPair::of(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
}

bool is_automorphism(const Graph& g, std::span<const int> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  VertexSet hit = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (hit & vertex_bit(p))) {
      throw std::invalid_argument("map is not a bijection on the vertex set");
    }
    hit |= vertex_bit(p);
  }
  for (int u = 0; u < n; ++u) {
    VertexSet mapped = 0;
    for (int v : to_vector(g.neighbors(u))) mapped |= vertex_bit(perm[static_cast<std::size_t>(v)]);
    if (mapped != g.neighbors(perm[static_cast<std::size_t>(u)])) return false;
  }
  return true;
}

std::vector<Permutation> affine_group(const BinaryField& field, std::span<const FieldElement> multipliers) {
  std::vector<Permutation> group;
  group.reserve(multipliers.size() * field.order());
  for (FieldElement a : multipliers) {
    if (!field.contains(a)) throw std::out_of_range("affine multiplier out of range");
    if (a.bits == 0) throw std::invalid_argument("affine multiplier must be nonzero");
    for (std::uint32_t b = 0; b < field.order(); ++b) {
      group.push_back(as_permutation(field, AffineMap{a, {b}}));
    }
  }
  return group;
}

std::vector<Permutation> translation_generators(int k) {
  if (k < 0 || k > 6) throw std::invalid_argument("translations of Z_2^k need k in [0, 6]");
  std::vector<Permutation> gens;
  const int n = 1 << k;
  for (int i = 0; i < k; ++i) {
    Permutation perm(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) perm[static_cast<std::size_t>(x)] = x ^ (1 << i);
    gens.push_back(std::move(perm));
  }
  return gens;
}

std::vector<Permutation> rotation_generators(int m) {
  if (m < 1 || m > kMaxVertices) throw std::invalid_argument("rotations need m in [1, 64]");
  Permutation perm(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) perm[static_cast<std::size_t>(x)] = (x + 1) % m;
  return {perm};
}

std::vector<PairOrbit> pair_orbits(const Graph& g, std::span<const Permutation> generators,
                                   std::span<const VertexPair> pairs) {
  for (const auto& gen : generators) {
    if (!is_automorphism(g, gen)) throw std::invalid_argument("generator is not an automorphism of the graph");
  }
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(kMaxVertices * kMaxVertices, kAbsent);
  for (std::size_t i = 0; i < pairs.size(); ++i) index[pair_key(pairs[i])] = i;

  DisjointSet sets(pairs.size());
  for (const auto& gen : generators) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::size_t j = index[pair_key(image(gen, pairs[i]))];
      if (j == kAbsent) throw std::invalid_argument("pair set is not closed under the generators");
      sets.unite(i, j);
    }
  }

  std::vector<std::size_t> orbit_of_root(pairs.size(), kAbsent);
  std::vector<PairOrbit> orbits;
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::sort(order, [&](std::size_t a, std::size_t b) { return pairs[a] < pairs[b]; });
  for (std::size_t i : order) {
    const std::size_t root = sets.find(i);
    if (orbit_of_root[root] == kAbsent) {
      orbit_of_root[root] = orbits.size();
      orbits.push_back({pairs[i], {}});
    }
    orbits[orbit_of_root[root]].members.push_back(pairs[i]);
  }
  return orbits;
}

nlohmann::json orbit_json(const PairOrbit& orbit) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& e : orbit.members) members.push_back({e.u, e.v});
  return {{"representative", {orbit.representative.u, orbit.representative.v}},
          {"size", orbit.members.size()},
          {"members", std::move(members)}};
}

}  // namespace isat
