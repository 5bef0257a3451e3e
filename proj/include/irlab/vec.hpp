#pragma once

#include <cstdint>
#include <vector>

#include "irlab/polynomial.hpp"

namespace irlab {

/// A term of a free-module element: coefficient * monomial * e_comp.
struct VTerm {
  Monomial mon;
  std::uint32_t comp;
  Coeff coeff;
};

/// Graded free module S^r = (+)_i S(-shift_i) with a position-over-term
/// order: e_0 > e_1 > ... and, within one component, the ring order.
class FreeModule {
 public:
  FreeModule(RingPtr ring, std::vector<int> shifts) : ring_(std::move(ring)), shifts_(std::move(shifts)) {}
  static FreeModule rank(RingPtr ring, std::size_t r) { return FreeModule(std::move(ring), std::vector<int>(r, 0)); }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return shifts_.size(); }
  const std::vector<int>& shifts() const noexcept { return shifts_; }
  int shift(std::size_t i) const { return shifts_[i]; }
  int degree(const Monomial& m, std::uint32_t comp) const { return m.degree() + shifts_[comp]; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const noexcept {
    if (ca != cb) return ca < cb ? 1 : -1;
    return ring_->compare(a, b);
  }

  /// Direct sum with `other` appended after this module's components.
  FreeModule direct_sum(const FreeModule& other) const;

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return same_ring(a.ring_, b.ring_) && a.shifts_ == b.shifts_;
  }

 private:
  RingPtr ring_;
  std::vector<int> shifts_;
};

/// Element of a FreeModule. Terms sorted descending, no zero coefficients.
/// The owning module is carried by the caller.
struct Vec {
  std::vector<VTerm> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  const VTerm& lead() const { return terms.front(); }
};

namespace vec {

Vec from_terms(const FreeModule& F, std::vector<VTerm> terms);
Vec unit(std::uint32_t comp);
/// Places `f` into component `comp`.
Vec embed(const Polynomial& f, std::uint32_t comp);
/// Builds sum_i polys[i] e_i.
Vec from_polys(const std::vector<Polynomial>& polys);
/// Component polynomials, length F.rank().
std::vector<Polynomial> to_polys(const FreeModule& F, const Vec& v);
Polynomial component(const FreeModule& F, const Vec& v, std::uint32_t comp);

Vec add(const FreeModule& F, const Vec& a, const Vec& b);
Vec sub(const FreeModule& F, const Vec& a, const Vec& b);
Vec scale(const FreeModule& F, const Vec& a, Coeff c);
Vec times_monomial(const FreeModule& F, const Vec& a, const Monomial& m, Coeff c);
Vec times(const FreeModule& F, const Vec& a, const Polynomial& f);
/// a - c*m*b, the basic reduction step.
Vec sub_multiple(const FreeModule& F, const Vec& a, const Vec& b, const Monomial& m, Coeff c);
Vec monic(const FreeModule& F, const Vec& a);

/// Max over terms of monomial degree + shift (the "sugar" of a).
int degree(const FreeModule& F, const Vec& a);
bool is_homogeneous(const FreeModule& F, const Vec& a);
/// Shifts component indices by `offset` (result lives in a larger module).
Vec shift_components(const Vec& a, std::int64_t offset);
/// Keeps only components in [lo, hi), reindexed from zero.
Vec restrict_components(const Vec& a, std::uint32_t lo, std::uint32_t hi);

std::string to_string(const FreeModule& F, const Vec& v);

}  // namespace vec
}  // namespace irlab
