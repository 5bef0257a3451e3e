#pragma once

#include <cstdint>
#include <random>

#include "irlab/field.hpp"

namespace irlab {

/// splitmix64 finalizer; used to derive independent per-task seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed for sub-task `index` of a run with master seed `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix_seed(mix_seed(master) ^ (index + 1) * 0xD1B54A32D192ED03ull);
}

/// Deterministic generator of field elements. Only raw engine output is used
/// so sequences agree across standard library implementations.
class FieldRng {
 public:
  explicit FieldRng(std::uint64_t seed) : eng_(seed) {}
  Coeff nonzero(const PrimeField& F) { return static_cast<Coeff>(eng_() % (F.characteristic() - 1)) + 1; }
  std::uint64_t next() { return eng_(); }
  /// Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace irlab
