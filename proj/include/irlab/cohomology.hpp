#pragma once

#include <map>
#include <optional>
#include <vector>

#include "irlab/resolution.hpp"

namespace irlab {

/// Data of H^i_m(M), 0 <= i <= dim M, read off the duals Ext^{n-i}(M, S).
/// Local cohomology itself is never built: its graded pieces, socle and
/// annihilator are those of the finitely generated dual.
struct LocalCohomology {
  std::size_t nvars = 0;
  int dim = -1;
  std::optional<int> depth;
  FreeResolution resolution;
  /// duals[i] = Ext^{n-i}(M, S), minimized.
  std::vector<ModulePresentation> duals;
  /// Krull dimension of duals[i]; -1 when it vanishes.
  std::vector<int> dual_dims;
  /// s_i = dim_k Soc H^i_m(M) = number of generators of duals[i].
  std::vector<int> socle;

  /// dim_k H^i_m(M)_degree.
  long long hilbert(int i, int degree) const;
};

LocalCohomology local_cohomology(const ModulePresentation& M);

/// s_0..s_d. Throws PreconditionError for the zero module.
std::vector<int> socle_dimensions(const ModulePresentation& M);

struct AnnihilatorData {
  /// a_i = Ann H^i_m(M) for i < d.
  std::vector<IdealPresentation> a;
  /// a(M) = a_0 a_1 ... a_{d-1}.
  IdealPresentation product;
  /// Least n >= 1 with m^n inside every a_i; only when each a_i is
  /// m-primary or the unit ideal.
  std::optional<int> n0;
};

AnnihilatorData annihilator_data(const LocalCohomology& H);
AnnihilatorData annihilator_data(const ModulePresentation& M);

/// Least n >= 1 with m^n ⊆ J for an m-primary or unit homogeneous J.
std::optional<int> power_of_maximal_inside(const IdealPresentation& J);

struct CmFlags {
  bool cm = false;
  bool generalized_cm = false;
  bool unmixed = false;
};

CmFlags cm_flags(const LocalCohomology& H, const ModulePresentation& M);
CmFlags cm_flags(const ModulePresentation& M);

/// Graded pieces dim H^i_m(S/I)_nu for lo <= nu <= hi, by Hochster's formula
/// over the Stanley-Reisner complex of a square-free monomial ideal I.
std::map<int, long long> hochster_hilbert(const IdealPresentation& I, int i, int lo, int hi);

/// Reduced simplicial cohomology dimensions over F_p of the complex whose
/// faces are given as bitmasks (closed under subsets, containing the empty
/// face). Index j + 1 holds dim H~^j for j >= -1.
std::vector<long long> reduced_cohomology(const std::vector<std::uint32_t>& faces, const PrimeField& F);

}  // namespace irlab
