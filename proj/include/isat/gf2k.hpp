#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace isat {

/// Element of GF(2^k). Bit i of `bits` is the coefficient of alpha^i.
struct FieldElement {
  std::uint32_t bits = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// True iff the polynomial encoded by `poly` (bit i = coefficient of x^i)
/// has degree >= 1 and no factor of degree between 1 and deg/2.
bool is_irreducible(std::uint32_t poly);

/// Binary extension field GF(2^k) for 1 <= k <= 16, defined by an
/// irreducible modulus of degree exactly k (e.g. 0x13 for x^4 + x + 1).
///
/// All members are const and pure; a field may be shared freely between
/// threads.
class BinaryField {
 public:
  static constexpr int kMaxBits = 16;

  /// Throws std::invalid_argument if k is out of range, the modulus does
  /// not have degree k, or the modulus is reducible.
  BinaryField(int k, std::uint32_t modulus);

  int bits() const { return k_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return std::uint32_t{1} << k_; }

  bool contains(FieldElement a) const { return a.bits < order(); }

  /// The class of x modulo the field polynomial.
  FieldElement alpha() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// pow(0, 0) is rejected rather than defined as 1.
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement inverse(FieldElement a) const;

  /// Multiplicative order of a equals 2^k - 1. Rejects a = 0.
  bool is_generator(FieldElement a) const;

  /// { x^3 : x != 0 }, sorted by mask.
  std::vector<FieldElement> nonzero_cubes() const;

  /// Every element 0 .. 2^k - 1 in mask order.
  std::vector<FieldElement> elements() const;

 private:
  void check(FieldElement a) const;

  int k_;
  std::uint32_t modulus_;
};

}  // namespace isat
