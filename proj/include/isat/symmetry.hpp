#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "isat/gf2k.hpp"
#include "isat/graph.hpp"

namespace isat {

/// perm[v] is the image of vertex v.
using Permutation = std::vector<int>;

/// x -> multiplier * x + shift, with the multiplier drawn from the nonzero
/// cubes of the field.
struct AffineMap {
  FieldElement multiplier{1};
  FieldElement shift{0};

  /// Throws std::invalid_argument unless `multiplier` is a nonzero cube.
  static AffineMap make(const BinaryField& field, FieldElement multiplier, FieldElement shift);
};

FieldElement apply(const BinaryField& field, const AffineMap& map, FieldElement x);

Permutation as_permutation(const BinaryField& field, const AffineMap& map);
Permutation identity_permutation(int n);

/// The image of a pair, normalized.
VertexPair image(std::span<const int> perm, VertexPair e);

/// True iff u ~ v exactly when perm(u) ~ perm(v). Throws
/// std::invalid_argument if perm is not a bijection on the vertices of g.
bool is_automorphism(const Graph& g, std::span<const int> perm);

/// Every map x -> a*x + b for a in `multipliers` and b in the field, in
/// (multiplier, shift) order. Multipliers must be nonzero.
std::vector<Permutation> affine_group(const BinaryField& field, std::span<const FieldElement> multipliers);

/// x -> x xor 2^i for i < k; generates all translations of Z_2^k.
std::vector<Permutation> translation_generators(int k);

/// x -> x + 1 mod m; generates the rotations of Z_m.
std::vector<Permutation> rotation_generators(int m);

struct PairOrbit {
  /// Least member.
  VertexPair representative;
  /// Sorted.
  std::vector<VertexPair> members;
};

/// Partition of `pairs` into orbits of the group generated by `generators`,
/// sorted by representative. `pairs` must be closed under the generators and
/// every generator must be an automorphism of g.
std::vector<PairOrbit> pair_orbits(const Graph& g, std::span<const Permutation> generators,
                                   std::span<const VertexPair> pairs);

nlohmann::json orbit_json(const PairOrbit& orbit);

}  // namespace isat
