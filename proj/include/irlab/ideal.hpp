#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irlab/groebner.hpp"
#include "irlab/polynomial.hpp"

namespace irlab {

/// Finitely many generators of an ideal of the ambient ring. Zero generators
/// are dropped; the zero ideal has no generators.
class IdealPresentation {
 public:
  explicit IdealPresentation(RingPtr ring) : ring_(std::move(ring)) {}
  IdealPresentation(RingPtr ring, std::vector<Polynomial> gens);

  static IdealPresentation parse(const RingPtr& ring, const std::vector<std::string>& gens);
  static IdealPresentation unit(const RingPtr& ring);
  /// The homogeneous maximal ideal (x_0, ..., x_{n-1}).
  static IdealPresentation maximal(const RingPtr& ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_homogeneous() const;
  bool is_monomial() const;

  std::vector<std::string> to_strings() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis of an ideal for the ring's monomial order.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(ModuleGB gb);

  const RingPtr& ring() const noexcept { return gb_.module().ring(); }
  const MonomialOrder& order() const noexcept { return ring()->order(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& initial_ideal() const noexcept { return initial_; }
  const ModuleGB& module_gb() const noexcept { return gb_; }
  bool is_unit() const noexcept { return !initial_.empty() && initial_.front().is_one(); }
  bool is_zero() const noexcept { return elements_.empty(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const IdealPresentation& I) const;

  IdealPresentation presentation() const;

 private:
  ModuleGB gb_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> initial_;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring, const GbOptions& opt = {});
GroebnerBasis groebner(const IdealPresentation& I, const GbOptions& opt = {});
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

enum class IdealOp { sum, product, intersection, colon };
IdealPresentation ideal_ops(const IdealPresentation& A, const IdealPresentation& B, IdealOp op);

IdealPresentation ideal_sum(const IdealPresentation& A, const IdealPresentation& B);
IdealPresentation ideal_product(const IdealPresentation& A, const IdealPresentation& B);
/// A ∩ B by eliminating t from tA + (1-t)B.
IdealPresentation intersect(const IdealPresentation& A, const IdealPresentation& B);
/// A ∩ B as the image of the syzygies of (A | B); independent second route.
IdealPresentation intersect_by_syzygies(const IdealPresentation& A, const IdealPresentation& B);
/// (A : f) = (A ∩ (f)) / f.
IdealPresentation quotient(const IdealPresentation& A, const Polynomial& f);
/// (A : f) through the syzygies of (f, a_1, ..., a_k); independent second route.
IdealPresentation quotient_by_syzygies(const IdealPresentation& A, const Polynomial& f);
/// (A : B) as the intersection of (A : b) over generators b.
IdealPresentation quotient(const IdealPresentation& A, const IdealPresentation& B);
/// (A : f^infinity), iterating (. : f) to a fixpoint.
IdealPresentation saturate(const IdealPresentation& A, const Polynomial& f);
IdealPresentation saturate(const IdealPresentation& A, const IdealPresentation& B);
IdealPresentation ideal_power(const IdealPresentation& A, unsigned e);

bool ideal_equal(const IdealPresentation& A, const IdealPresentation& B);
bool ideal_contains(const IdealPresentation& big, const IdealPresentation& small);

/// dim S/I as the size of a largest set of variables independent modulo the
/// initial ideal. -1 for the unit ideal.
int krull_dimension(const IdealPresentation& I);
int krull_dimension(const GroebnerBasis& gb);
int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

/// Monomials outside the initial ideal, optionally up to a total degree.
/// Without a bound S/I must be Artinian (else NotArtinian).
std::vector<Monomial> standard_monomials(const IdealPresentation& I, std::optional<int> degree_bound = std::nullopt);
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::optional<int> degree_bound = std::nullopt);
bool is_artinian(const GroebnerBasis& gb);

/// Generators of the syzygy module of `gens` (elements of F), as a reduced
/// Groebner basis of a submodule of S^m with shifts deg(gens[i]). Computed by
/// reducing the S-pairs of (g_i | e_i) so that the lifts are tracked in the
/// appended components.
ModuleGB syzygies(const FreeModule& F, const std::vector<Vec>& gens);
ModuleGB syzygies(const FreeModule& F, const std::vector<Vec>& gens, const std::vector<int>& gen_degrees);
ModuleGB syzygies(const std::vector<Polynomial>& gens, const RingPtr& ring);

}  // namespace irlab
