#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "irlab/ring.hpp"

namespace irlab {

struct Term {
  Monomial mon;
  Coeff coeff;
};

/// Multivariate polynomial over a prime field. Terms are kept sorted in
/// descending order for the ring's monomial order with no zero coefficients,
/// so equal polynomials have identical term vectors.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_homogeneous() const noexcept;

  /// Requires a nonzero polynomial.
  const Term& lead() const { return terms_.front(); }
  /// Maximal total degree of a term; -1 for zero.
  int degree() const noexcept;
  /// Minimal total degree of a term; -1 for zero.
  int low_degree() const noexcept;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(Coeff c) const;
  Polynomial times_monomial(const Monomial& m, Coeff c = 1) const;
  Polynomial pow(unsigned e) const;
  /// Lead coefficient 1; zero stays zero.
  Polynomial monic() const;
  /// Same terms, re-sorted for another ring with identical variables and field.
  Polynomial in_ring(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_ring(const Polynomial& b) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Parses the text grammar: signed integer coefficients, `*`, `^` with a
/// non-negative integer exponent, `+`, `-`, parentheses and variable names of
/// the ring. Integer coefficients are reduced mod p. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace irlab
