#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "irlab/cohomology.hpp"
#include "irlab/ideal.hpp"

namespace irlab {

struct UnmixedComponent {
  /// K with U_M(0) = K/I.
  IdealPresentation ideal;
  /// The parameter element x ∈ a(M) used; absent when dim M = 0.
  std::optional<Polynomial> element;
  /// Whether the single colon (I : x) already equals K.
  bool single_colon_agrees = true;
};

/// Unmixed component of S/I as (I : x^infinity) for a parameter element x of
/// the annihilator product a(M).
UnmixedComponent unmixed_component(const IdealPresentation& I, std::uint64_t seed = 0);
bool is_unmixed(const IdealPresentation& I);

/// D_0 ⊆ D_1 ⊆ ... ⊆ D_t = S/I with D_i = K_i/I. K_t = S is not stored.
struct DimensionFiltration {
  IdealPresentation base;
  std::vector<IdealPresentation> ideals;  // K_0..K_{t-1}
  std::vector<int> dims;                  // d_0..d_t; d_0 = 0 even when D_0 = 0
  std::size_t length() const noexcept { return ideals.size(); }
};

/// D_j collects the elements of dimension <= d_j:
/// K_j = I : (a_0 a_1 ... a_j)^infinity with a_i = Ann H^i_m(S/I).
DimensionFiltration dimension_filtration(const IdealPresentation& I);
DimensionFiltration dimension_filtration(const IdealPresentation& I, const LocalCohomology& H);

/// Irredundant decomposition into ideals generated by pure powers.
std::vector<IdealPresentation> monomial_primary_decomposition(const IdealPresentation& I);

struct FiltrationStep {
  int index = 0;  // i for D_i / D_{i-1}; 0 for D_0
  int dim = -1;
  std::optional<int> depth;
  bool cm = false;
  bool generalized_cm = false;
  bool zero = false;
};

struct SequentialClass {
  bool seq_cm = false;
  bool seq_gcm = false;
  DimensionFiltration filtration;
  std::vector<FiltrationStep> steps;
};

SequentialClass classify_sequential(const IdealPresentation& I);

struct GoodSopCheck {
  bool good = true;
  /// First filtration index i and an element of K_i ∩ ((x_{d_i+1..d}) + I) outside I.
  std::optional<std::pair<int, Polynomial>> witness;
};

GoodSopCheck is_good_sop(const std::vector<Polynomial>& x, const DimensionFiltration& F);

}  // namespace irlab
