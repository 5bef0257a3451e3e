#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "irlab/vec.hpp"

namespace irlab {

/// S-pair budget shared by every Groebner run in the process. A single run
/// processing more pairs than this throws ResourceError.
std::uint64_t spair_budget();
void set_spair_budget(std::uint64_t budget);
inline constexpr std::uint64_t kDefaultSpairBudget = 200000;

struct GbOptions {
  /// Stop considering pairs and generators above this degree. Only meaningful
  /// for homogeneous input; the result then answers membership questions for
  /// elements of degree <= the bound and is flagged as truncated.
  std::optional<int> degree_bound;
};

struct GbStats {
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t zero_reductions = 0;
};

/// Reduced Groebner basis of a submodule of a graded free module, for the
/// position-over-term extension of the ring order. Rank-one modules are ideals.
class ModuleGB {
 public:
  ModuleGB(FreeModule module, std::vector<Vec> elements, std::optional<int> truncated_at, GbStats stats);

  const FreeModule& module() const noexcept { return module_; }
  const std::vector<Vec>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_zero() const noexcept { return elements_.empty(); }
  std::optional<int> truncated_at() const noexcept { return truncated_at_; }
  const GbStats& stats() const noexcept { return stats_; }

  /// Remainder of full reduction; no term is divisible by a leading term.
  Vec normal_form(const Vec& v) const;
  bool contains(const Vec& v) const { return normal_form(v).is_zero(); }
  /// True when every unit vector lies in the submodule.
  bool is_whole_module() const;

  /// Leading monomials of elements whose lead sits in component `comp`.
  std::vector<Monomial> leading_monomials(std::uint32_t comp) const;
  /// Index of an element whose lead divides (mon, comp), if any.
  std::optional<std::size_t> find_divisor(const Monomial& mon, std::uint32_t comp) const;

 private:
  struct Lead {
    Monomial mon;
    std::uint32_t mask;
  };

  FreeModule module_;
  std::vector<Vec> elements_;
  std::vector<std::vector<std::pair<Lead, std::size_t>>> by_comp_;
  std::optional<int> truncated_at_;
  GbStats stats_;
};

/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// coprime and chain criteria and sugar-degree normal selection.
ModuleGB groebner_basis(const FreeModule& F, const std::vector<Vec>& gens, const GbOptions& options = {});

/// Every S-pair of basis elements and every given generator reduce to zero.
bool verify_groebner(const ModuleGB& gb, const std::vector<Vec>& gens);

}  // namespace irlab
