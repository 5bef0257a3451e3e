#include <doctest.h>

#include "helpers.hpp"
#include "irlab/errors.hpp"
#include "irlab/groebner.hpp"
#include "irlab/hilbert.hpp"
#include "irlab/resolution.hpp"

using namespace irlab;
using testing::cyclic;
using testing::ideal;
using testing::poly;
using testing::ring;

namespace {

using Betti = std::vector<std::size_t>;

RingPtr five() { return ring({"a", "b", "c", "d", "e"}); }

// dim_k (S/I)_d by counting standard monomials of a degree-bounded basis.
long long hilbert_by_counting(const IdealPresentation& I, int d) {
  long long n = 0;
  for (const auto& m : standard_monomials(I, d))
    if (m.degree() == d) ++n;
  return n;
}

}  // namespace

TEST_SUITE("free resolutions") {
  TEST_CASE("koszul complex of the maximal ideal") {
    auto R = ring({"x", "y"});
    const auto F = free_resolution(cyclic(R, {"x", "y"}));
    CHECK(F.betti() == Betti{1, 2, 1});
    CHECK(F.is_complex());
    CHECK_FALSE(F.has_unit_entries());
  }

  TEST_CASE("two monomials sharing a variable") {
    auto R = ring({"x", "y", "z"});
    const auto F = free_resolution(cyclic(R, {"x*y", "x*z"}));
    CHECK(F.betti() == Betti{1, 2, 1});
    CHECK(F.degrees[1] == std::vector<int>{2, 2});
    CHECK(F.degrees[2] == std::vector<int>{3});
    CHECK(F.graded_betti() == minimalize(taylor_resolution(ideal(R, {"x*y", "x*z"}))).graded_betti());
  }

  TEST_CASE("free module") {
    auto R = ring({"x", "y"});
    const auto F = free_resolution(ModulePresentation::free(R, {0}));
    CHECK(F.betti() == Betti{1});
    CHECK(F.length() == 0);
  }

  TEST_CASE("zero module") {
    auto R = ring({"x", "y"});
    CHECK(free_resolution(ModulePresentation::zero(R)).length() == -1);
  }

  TEST_CASE("union of two planes in five variables") {
    auto R = five();
    const auto F = free_resolution(cyclic(R, {"a*c", "a*d", "b*c", "b*d"}));
    CHECK(F.betti() == Betti{1, 4, 4, 1});
    CHECK(F.is_complex());
  }

  TEST_CASE("non-minimal resolution minimalizes to the minimal one") {
    auto R = ring({"x", "y", "z"});
    const auto M = cyclic(R, {"x^2", "x*y", "y*z"});
    const auto raw = free_resolution(M, false);
    CHECK(raw.is_complex());
    CHECK(minimalize(raw).betti() == free_resolution(M).betti());
  }
}

TEST_SUITE("ext modules") {
  TEST_CASE("top ext vanishes for positive depth") {
    auto R = ring({"x", "y", "z"});
    const auto M = cyclic(R, {"x*y", "x*z"});
    CHECK(ext_module(M, 3).is_zero());
    CHECK(free_resolution(M).length() < 3);
    CHECK_FALSE(ext_module(M, 2).is_zero());
  }

  TEST_CASE("free modules are rigid") {
    auto R = ring({"x", "y", "z"});
    const auto S = ModulePresentation::free(R, {0});
    for (int j = 1; j <= 3; ++j) CHECK(ext_module(S, j).is_zero());
    CHECK(ext_module(S, 0).num_generators() == 1);
  }

  TEST_CASE("third ext of the two-plane union has dimension one") {
    auto R = five();
    const auto E = ext_module(cyclic(R, {"a*c", "a*d", "b*c", "b*d"}), 3);
    CHECK_FALSE(E.is_zero());
    CHECK(module_dimension(E) == 1);
  }

  TEST_CASE("ext of a complete intersection") {
    auto R = ring({"x", "y", "z"});
    const auto E = ext_module(cyclic(R, {"x^2", "y^3"}), 2);
    CHECK(E.num_generators() == 1);
    CHECK(E.gen_degrees() == std::vector<int>{-5});
  }
}

TEST_SUITE("module invariants") {
  TEST_CASE("two-plane union") {
    const auto inv = module_invariants(cyclic(five(), {"a*c", "a*d", "b*c", "b*d"}));
    CHECK(inv.dim == 3);
    CHECK(inv.depth == 2);
    CHECK(inv.projective_dimension == 3);
  }

  TEST_CASE("line and plane") {
    const auto inv = module_invariants(cyclic(ring({"x", "y", "z"}), {"x*y", "x*z"}));
    CHECK(inv.dim == 2);
    CHECK(inv.depth == 1);
  }

  TEST_CASE("polynomial ring") {
    auto R = ring({"x", "y", "z", "w"});
    const auto inv = module_invariants(ModulePresentation::free(R, {0}));
    CHECK(inv.dim == 4);
    CHECK(inv.depth == 4);
    CHECK(inv.annihilator.is_zero());
  }

  TEST_CASE("zero module is flagged") {
    auto R = ring({"x"});
    const auto inv = module_invariants(ModulePresentation::zero(R));
    CHECK(inv.zero);
    CHECK(inv.dim == -1);
    CHECK_FALSE(inv.depth.has_value());
  }
}

TEST_SUITE("taylor complex") {
  TEST_CASE("two generators") {
    auto R = ring({"x", "y", "z"});
    const auto T = taylor_resolution(ideal(R, {"x*y", "x*z"}));
    CHECK(T.betti() == Betti{1, 2, 1});
    CHECK(T.degrees[2] == std::vector<int>{3});
    CHECK(T.is_complex());
  }

  TEST_CASE("principal ideal") {
    auto R = ring({"x", "y"});
    const auto T = taylor_resolution(ideal(R, {"x^2"}));
    CHECK(T.betti() == Betti{1, 1});
    CHECK(T.degrees[1] == std::vector<int>{2});
  }

  TEST_CASE("variables give the koszul complex") {
    auto R = ring({"x", "y", "z"});
    CHECK(taylor_resolution(ideal(R, {"x", "y", "z"})).betti() == Betti{1, 3, 3, 1});
  }

  TEST_CASE("non-monomial input is rejected") {
    auto R = ring({"x", "y"});
    CHECK_THROWS_AS(taylor_resolution(ideal(R, {"x+y"})), PreconditionError);
  }
}

TEST_SUITE("subquotients and annihilators") {
  TEST_CASE("principal ideal over a larger ideal") {
    auto R = ring({"x", "y", "z"});
    const auto M = subquotient_presentation(ideal(R, {"x"}), ideal(R, {"x*y", "x*z"}));
    CHECK(M.minimized().num_generators() == 1);
    CHECK(M.gen_degrees() == std::vector<int>{1});
    CHECK(ideal_equal(annihilator(M), ideal(R, {"y", "z"})));
    CHECK(ideal_equal(generator_annihilator(M, 0), quotient(ideal(R, {"x*y", "x*z"}), poly(R, "x"))));
  }

  TEST_CASE("equal ideals give zero") {
    auto R = ring({"x", "y", "z"});
    CHECK(subquotient_presentation(ideal(R, {"x", "y*z"}), ideal(R, {"x", "y*z"})).is_zero());
  }

  TEST_CASE("maximal ideal as a module") {
    auto R = ring({"x", "y"});
    const auto M = subquotient_presentation(ideal(R, {"x", "y"}), IdealPresentation(R));
    CHECK(free_resolution(M).betti() == Betti{2, 1});
  }

  TEST_CASE("containment is required") {
    auto R = ring({"x", "y"});
    CHECK_THROWS_AS(subquotient_presentation(ideal(R, {"x"}), ideal(R, {"y"})), PreconditionError);
  }
}

TEST_SUITE("homological properties") {
  TEST_CASE("resolutions of random monomial ideals") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
      auto R = ring({"x1", "x2", "x3", "x4", "x5"});
      const auto I = testing::squarefree_monomial_ideal(R, rng, 2 + static_cast<int>(rng() % 4));
      const auto M = ModulePresentation::cyclic(I);
      const auto F = free_resolution(M);
      CHECK(F.is_complex());
      CHECK_FALSE(F.has_unit_entries());
      const auto T = taylor_resolution(I);
      CHECK(T.is_complex());
      CHECK(minimalize(T).graded_betti() == F.graded_betti());
      CHECK(F.euler_characteristic() == hilbert_series(M));
      CHECK(T.euler_characteristic() == hilbert_series(M));
      // Auslander-Buchsbaum: depth + pd = n.
      CHECK(*depth(M) + F.length() == 5);
    }
  }

  TEST_CASE("hilbert series against monomial counts") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
      auto R = ring({"x", "y", "z", "w"});
      std::vector<Polynomial> gens;
      for (int j = 0; j < 3; ++j) gens.push_back(testing::random_form(R, rng, 2, 4));
      const IdealPresentation I(R, gens);
      const auto H = hilbert_series(ModulePresentation::cyclic(I));
      for (int d = 0; d <= 5; ++d) CHECK(H.value(d) == hilbert_by_counting(I, d));
      CHECK(H.dimension() == krull_dimension(I));
    }
  }

  TEST_CASE("differentials compose to zero on random homogeneous ideals") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 8; ++trial) {
      auto R = ring({"x", "y", "z", "w"});
      std::vector<Polynomial> gens;
      for (int j = 0; j < 3; ++j) gens.push_back(testing::random_form(R, rng, 2, 3));
      const auto F = free_resolution(ModulePresentation::cyclic(IdealPresentation(R, gens)));
      for (std::size_t k = 0; k + 1 < F.maps.size(); ++k) CHECK((F.maps[k] * F.maps[k + 1]).is_zero());
    }
  }

  TEST_CASE("hilbert series arithmetic") {
    const auto H = HilbertSeries::of_monomial_quotient({Monomial::variable(0, 2)}, 2);
    CHECK(H.dimension() == 1);
    CHECK(H.multiplicity() == 2);
    CHECK(H.value(0) == 1);
    CHECK(H.value(5) == 2);
    CHECK(HilbertSeries::of_free(3, {0}).value(2) == 6);
  }
}
