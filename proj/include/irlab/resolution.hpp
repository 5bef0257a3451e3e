#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irlab/hilbert.hpp"
#include "irlab/module.hpp"

namespace irlab {

/// Graded free resolution 0 <- F_0 <- F_1 <- ... <- F_L <- 0 of a module.
/// maps[k] is the differential F_{k+1} -> F_k.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::vector<int>> degrees;
  std::vector<PolyMatrix> maps;
  bool minimal = false;

  /// Index of the last nonzero free module; -1 for the zero module.
  int length() const;
  std::size_t rank(std::size_t k) const { return k < degrees.size() ? degrees[k].size() : 0; }
  /// Total Betti numbers (ranks of F_0..F_L).
  std::vector<std::size_t> betti() const;
  /// Graded Betti numbers: (homological degree, internal degree) -> count.
  std::map<std::pair<int, int>, int> graded_betti() const;
  /// Rows are homological degrees, columns internal degrees.
  std::string betti_table() const;

  /// Every composition maps[k] * maps[k+1] vanishes.
  bool is_complex() const;
  bool has_unit_entries() const;
  /// Alternating sum of the Hilbert series of the free modules.
  HilbertSeries euler_characteristic() const;
};

/// Resolution by iterated syzygies. With `minimal`, unit entries are removed
/// by pivoting after every step, giving the minimal resolution.
FreeResolution free_resolution(const ModulePresentation& M, bool minimal = true);

/// Removes unit entries by exact pivoting until none remain.
FreeResolution minimalize(FreeResolution R);

/// Taylor complex on the given monomial generators. At most 20 generators.
FreeResolution taylor_resolution(const IdealPresentation& I);

/// Ext^j(M, S) as kernel modulo image in the dual of a minimal resolution,
/// with a minimized presentation. Graded so that Hom(S(-a), S) = S(a).
ModulePresentation ext_module(const FreeResolution& minimal_resolution, int j);
ModulePresentation ext_module(const ModulePresentation& M, int j);

HilbertSeries hilbert_series(const ModulePresentation& M);

struct ModuleInvariants {
  bool zero = false;
  int dim = -1;
  /// Absent for the zero module.
  std::optional<int> depth;
  std::optional<int> projective_dimension;
  IdealPresentation annihilator;
  HilbertSeries hilbert;
};

ModuleInvariants module_invariants(const ModulePresentation& M);

/// depth = n - pd for a nonzero module; absent for the zero module.
std::optional<int> depth(const ModulePresentation& M);
/// Krull dimension via the annihilator; -1 for the zero module.
int module_dimension(const ModulePresentation& M);

}  // namespace irlab
