#include "isat/gf2k.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace isat {
namespace {

int degree(std::uint32_t poly) { return std::bit_width(poly) - 1; }

// Remainder of a divided by b in GF(2)[x]; b != 0.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = degree(b);
  for (int d = degree(a); d >= db; d = degree(a)) {
    a ^= b << (d - db);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      out.push_back(p);
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int deg = degree(poly);
  if (deg < 1) return false;
  // Every polynomial of degree 1..deg/2 is a candidate divisor.
  for (std::uint32_t d = 2; degree(d) <= deg / 2; ++d) {
    if (poly_mod(poly, d) == 0) return false;
  }
  return true;
}

BinaryField::BinaryField(int k, std::uint32_t modulus) : k_(k), modulus_(modulus) {
  if (k < 1 || k > kMaxBits) {
    throw std::invalid_argument("field bit-width must be in [1, 16], got " + std::to_string(k));
  }
  if (degree(modulus) != k) {
    throw std::invalid_argument("modulus must have degree exactly " + std::to_string(k));
  }
  if (!is_irreducible(modulus)) {
    throw std::invalid_argument("modulus is reducible over GF(2)");
  }
}

void BinaryField::check(FieldElement a) const {
  if (!contains(a)) {
    throw std::out_of_range("element mask " + std::to_string(a.bits) + " out of range for GF(2^" +
                            std::to_string(k_) + ")");
  }
}

FieldElement BinaryField::alpha() const { return {poly_mod(0b10, modulus_)}; }

FieldElement BinaryField::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {a.bits ^ b.bits};
}

FieldElement BinaryField::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  std::uint32_t product = 0;
  for (std::uint32_t bb = b.bits, shifted = a.bits; bb != 0; bb >>= 1, shifted <<= 1) {
    if (bb & 1u) product ^= shifted;
  }
  return {poly_mod(product, modulus_)};
}

FieldElement BinaryField::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  if (a.bits == 0 && e == 0) throw std::domain_error("pow(0, 0) is undefined");
  FieldElement result{1};
  FieldElement base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement BinaryField::inverse(FieldElement a) const {
  check(a);
  if (a.bits == 0) throw std::domain_error("zero has no multiplicative inverse");
  return pow(a, order() - 2);
}

bool BinaryField::is_generator(FieldElement a) const {
  check(a);
  if (a.bits == 0) throw std::domain_error("zero is not in the multiplicative group");
  const std::uint64_t group_order = order() - 1;
  return std::ranges::none_of(prime_factors(group_order), [&](std::uint64_t p) {
    return pow(a, group_order / p).bits == 1;
  });
}

std::vector<FieldElement> BinaryField::nonzero_cubes() const {
  std::vector<FieldElement> cubes;
  for (std::uint32_t x = 1; x < order(); ++x) cubes.push_back(pow({x}, 3));
  std::ranges::sort(cubes);
  const auto dup = std::ranges::unique(cubes);
  cubes.erase(dup.begin(), dup.end());
  return cubes;
}

std::vector<FieldElement> BinaryField::elements() const {
  std::vector<FieldElement> out(order());
  for (std::uint32_t x = 0; x < order(); ++x) out[x] = {x};
  return out;
}

}  // namespace isat
