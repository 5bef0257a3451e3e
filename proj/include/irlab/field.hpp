#pragma once

#include <cstdint>

namespace irlab {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  static constexpr Coeff kDefaultCharacteristic = 32003;

  explicit PrimeField(Coeff p = kDefaultCharacteristic);

  Coeff characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error on zero.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff from_int(long long v) const noexcept;
  /// Symmetric representative in (-p/2, p/2].
  long long to_signed(Coeff a) const noexcept { return a > p_ / 2 ? static_cast<long long>(a) - p_ : a; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  Coeff p_;
};

}  // namespace irlab
