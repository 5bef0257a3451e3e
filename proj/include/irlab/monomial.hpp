#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace irlab {

inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector. Slots past the ring's variable count stay zero,
/// so two monomials of one ring compare and hash on the full array.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, int power = 1);

  Exponent operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, int e);
  int degree() const noexcept { return static_cast<int>(degree_); }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Highest index with a nonzero exponent, plus one.
  std::size_t support_end() const noexcept;
  /// Bitmask of variables with nonzero exponent.
  std::uint32_t support_mask() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Monomial order on a ring with `nvars` variables.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  /// Block order eliminating the first `block` variables: grevlex on the
  /// first block, ties broken by grevlex on the rest.
  static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::elimination, block); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  bool is_degree_compatible() const noexcept { return kind_ == Kind::grevlex; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

/// All monomials of total degree exactly `degree` in `nvars` variables, in
/// descending lex order (x0^d first).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace irlab
