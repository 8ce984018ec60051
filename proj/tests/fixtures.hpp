#pragma once

#include "isat/gf2k.hpp"
#include "isat/graph.hpp"

namespace fixtures {

inline constexpr std::uint32_t kModulus = 0x13;  // x^4 + x + 1

inline const isat::BinaryField& gf16() {
  static const isat::BinaryField field(4, kModulus);
  return field;
}

/// The 16-vertex Cayley graph over GF(16) with the nonzero cubes as
/// connection set.
inline isat::Graph clebsch() {
  const auto cubes = gf16().nonzero_cubes();
  return isat::cayley_graph(gf16(), cubes);
}

inline constexpr const char* kClebschGraph6 = "O`?G?EhTlKJHe_XOlOCi@";

}  // namespace fixtures
