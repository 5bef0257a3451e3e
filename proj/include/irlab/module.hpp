#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irlab/ideal.hpp"
#include "irlab/vec.hpp"

namespace irlab {

/// Sparse polynomial matrix stored by columns. Column j is the image of the
/// j-th basis element of the source.
class PolyMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, Polynomial>>;  // sorted by row

  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols) : ring_(std::move(ring)), rows_(rows), cols_(cols) {}

  /// Columns given as elements of a free module of rank `rows`.
  static PolyMatrix from_columns(const FreeModule& target, const std::vector<Vec>& columns);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_.size(); }

  Polynomial entry(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Polynomial value);
  const Column& column(std::size_t j) const { return cols_[j]; }

  Vec column_vec(std::size_t j) const;
  /// Rows as vectors whose components are the columns.
  std::vector<Vec> row_vecs() const;

  PolyMatrix transpose() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

  bool is_zero() const;
  /// Position of a nonzero constant entry, if any.
  std::optional<std::pair<std::size_t, std::size_t>> find_unit() const;

  void erase_row(std::size_t i);
  void erase_column(std::size_t j);
  /// col_c += f * col_b.
  void add_column_multiple(std::size_t c, std::size_t b, const Polynomial& f);

  std::string to_string() const;

 private:
  PolyMatrix(RingPtr ring, std::size_t rows, std::vector<Column> cols)
      : ring_(std::move(ring)), rows_(rows), cols_(std::move(cols)) {}

  RingPtr ring_;
  std::size_t rows_;
  std::vector<Column> cols_;
};

/// A graded module given as coker(relations) over S^m with generators in the
/// stated degrees. Relations must be homogeneous.
class ModulePresentation {
 public:
  ModulePresentation(RingPtr ring, std::vector<int> gen_degrees, std::vector<Vec> relations);

  /// S/I with one generator in degree 0; requires homogeneous I.
  static ModulePresentation cyclic(const IdealPresentation& I);
  static ModulePresentation free(const RingPtr& ring, std::vector<int> gen_degrees);
  static ModulePresentation zero(const RingPtr& ring) { return ModulePresentation(ring, {}, {}); }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<int>& gen_degrees() const noexcept { return gen_degrees_; }
  const std::vector<Vec>& relations() const noexcept { return relations_; }
  std::size_t num_generators() const noexcept { return gen_degrees_.size(); }
  FreeModule free_module() const { return FreeModule(ring_, gen_degrees_); }
  PolyMatrix relation_matrix() const;

  /// The ideal I when this is S/I.
  const std::optional<IdealPresentation>& cyclic_ideal() const noexcept { return cyclic_; }

  /// Same module with every generator that a unit-entry relation expresses
  /// through the others eliminated. The result has the minimal number of
  /// generators.
  ModulePresentation minimized() const;

  /// True when the module is zero (decided by a Groebner basis).
  bool is_zero() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<int> gen_degrees_;
  std::vector<Vec> relations_;
  std::optional<IdealPresentation> cyclic_;
};

/// A/B for homogeneous ideals B ⊆ A, generated by the generators of A.
/// Throws PreconditionError when B is not contained in A.
ModulePresentation subquotient_presentation(const IdealPresentation& A, const IdealPresentation& B);

/// (Rel : e_i) = {f : f e_i ∈ Rel}.
IdealPresentation generator_annihilator(const ModulePresentation& M, std::size_t i);

/// Ann M as the intersection of the generator annihilators.
IdealPresentation annihilator(const ModulePresentation& M);

}  // namespace irlab
