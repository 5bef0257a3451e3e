#pragma once

#include <map>
#include <string>
#include <vector>

#include "irlab/groebner.hpp"
#include "irlab/monomial.hpp"

namespace irlab {

/// Hilbert series N(t) / (1-t)^n of a graded module over k[x_1..x_n], with
/// a Laurent polynomial numerator.
class HilbertSeries {
 public:
  explicit HilbertSeries(std::size_t nvars) : nvars_(nvars) {}
  HilbertSeries(std::size_t nvars, std::map<int, long long> numerator);

  /// Series of S/J for a monomial ideal J, shifted by `shift`.
  static HilbertSeries of_monomial_quotient(const std::vector<Monomial>& gens, std::size_t nvars, int shift = 0);
  /// Series of F/N where `gb` is a Groebner basis of N ⊆ F.
  static HilbertSeries of_quotient(const ModuleGB& gb);
  /// Series of a free module with generators in the given degrees.
  static HilbertSeries of_free(std::size_t nvars, const std::vector<int>& degrees);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<int, long long>& numerator() const noexcept { return num_; }
  bool is_zero() const noexcept { return num_.empty(); }

  /// Hilbert function value dim_k M_degree.
  long long value(int degree) const;
  /// Order of the pole at t = 1, i.e. the Krull dimension; -1 for zero.
  int dimension() const;
  /// Value of the reduced numerator at 1 (multiplicity); 0 for zero.
  long long multiplicity() const;

  HilbertSeries& operator+=(const HilbertSeries& o);
  HilbertSeries& operator-=(const HilbertSeries& o);
  HilbertSeries shifted(int by) const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.nvars_ == b.nvars_ && a.num_ == b.num_;
  }

  std::string to_string() const;

 private:
  void normalize();
  /// Numerator coefficients after dividing out every factor (1-t).
  std::vector<long long> reduced(int& low, int& cancelled) const;

  std::size_t nvars_;
  std::map<int, long long> num_;
};

}  // namespace irlab
