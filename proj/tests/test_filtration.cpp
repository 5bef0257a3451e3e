#include <doctest.h>

#include "helpers.hpp"
#include "irlab/cohomology.hpp"
#include "irlab/filtration.hpp"
#include "irlab/groebner.hpp"
#include "irlab/resolution.hpp"

using namespace irlab;
using testing::ideal;
using testing::poly;
using testing::polys;
using testing::ring;

namespace {

RingPtr three() { return ring({"x", "y", "z"}); }
RingPtr five() { return ring({"a", "b", "c", "d", "e"}); }

const std::vector<std::string> kTwoPlanes = {"a*c", "a*d", "b*c", "b*d"};

IdealPresentation intersect_all(const std::vector<IdealPresentation>& parts, const RingPtr& R) {
  IdealPresentation out = IdealPresentation::unit(R);
  for (const auto& p : parts) out = intersect(out, p);
  return out;
}

bool contains_ideal_in(const std::vector<IdealPresentation>& list, const IdealPresentation& J) {
  for (const auto& p : list)
    if (ideal_equal(p, J)) return true;
  return false;
}

}  // namespace

TEST_SUITE("unmixed component") {
  TEST_CASE("line and plane") {
    auto R = three();
    const auto U = unmixed_component(ideal(R, {"x*y", "x*z"}), 3);
    CHECK(ideal_equal(U.ideal, ideal(R, {"x"})));
    REQUIRE(U.element.has_value());
    CHECK_FALSE(is_unmixed(ideal(R, {"x*y", "x*z"})));
  }

  TEST_CASE("two planes are unmixed") {
    auto R = five();
    const auto I = ideal(R, kTwoPlanes);
    CHECK(ideal_equal(unmixed_component(I, 1).ideal, I));
    CHECK(is_unmixed(I));
  }

  TEST_CASE("polynomial ring") {
    auto R = three();
    CHECK(unmixed_component(IdealPresentation(R)).ideal.is_zero());
  }

  TEST_CASE("embedded point is removed") {
    auto R = ring({"x", "y"});
    const auto U = unmixed_component(ideal(R, {"x^2", "x*y"}), 2);
    CHECK(ideal_equal(U.ideal, ideal(R, {"x"})));
  }
}

TEST_SUITE("dimension filtration") {
  TEST_CASE("line and plane") {
    auto R = three();
    const auto I = ideal(R, {"x*y", "x*z"});
    const auto F = dimension_filtration(I);
    REQUIRE(F.length() == 2);
    CHECK(ideal_equal(F.ideals[0], I));
    CHECK(ideal_equal(F.ideals[1], ideal(R, {"x"})));
    CHECK(F.dims == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("unmixed ring has the trivial filtration") {
    auto R = five();
    const auto I = ideal(R, kTwoPlanes);
    const auto F = dimension_filtration(I);
    REQUIRE(F.length() == 1);
    CHECK(ideal_equal(F.ideals[0], I));
    CHECK(F.dims == std::vector<int>{0, 3});
  }

  TEST_CASE("Artinian quotient is its own first step") {
    auto R = ring({"x", "y"});
    const auto F = dimension_filtration(ideal(R, {"x^2", "y^3"}));
    CHECK(F.length() == 0);
    CHECK(F.dims == std::vector<int>{0});
  }

  TEST_CASE("plane, line and embedded point") {
    auto R = three();
    // (x) ∩ (y, z) ∩ (x^2, y^2, z^2)-primary piece.
    const auto I = intersect(intersect(ideal(R, {"x"}), ideal(R, {"y", "z"})), ideal(R, {"x^2", "y^2", "z^2"}));
    const auto F = dimension_filtration(I);
    CHECK(F.dims == std::vector<int>{0, 1, 2});
    REQUIRE(F.length() == 2);
    CHECK_FALSE(ideal_equal(F.ideals[0], I));
    CHECK(ideal_equal(F.ideals[1], ideal(R, {"x"})));
  }
}

TEST_SUITE("monomial primary decomposition") {
  TEST_CASE("two planes") {
    auto R = five();
    const auto parts = monomial_primary_decomposition(ideal(R, kTwoPlanes));
    REQUIRE(parts.size() == 2);
    CHECK(contains_ideal_in(parts, ideal(R, {"a", "b"})));
    CHECK(contains_ideal_in(parts, ideal(R, {"c", "d"})));
  }

  TEST_CASE("line and plane") {
    auto R = three();
    const auto I = ideal(R, {"x*y", "x*z"});
    const auto parts = monomial_primary_decomposition(I);
    REQUIRE(parts.size() == 2);
    CHECK(contains_ideal_in(parts, ideal(R, {"x"})));
    CHECK(contains_ideal_in(parts, ideal(R, {"y", "z"})));
    CHECK(ideal_equal(intersect_all(parts, R), I));
  }

  TEST_CASE("irreducible input") {
    auto R = ring({"x", "y"});
    const auto parts = monomial_primary_decomposition(ideal(R, {"x^2", "y"}));
    REQUIRE(parts.size() == 1);
    CHECK(ideal_equal(parts[0], ideal(R, {"x^2", "y"})));
  }
}

TEST_SUITE("sequential classification") {
  TEST_CASE("line and plane is sequentially Cohen-Macaulay") {
    const auto c = classify_sequential(ideal(three(), {"x*y", "x*z"}));
    CHECK(c.seq_cm);
    CHECK(c.seq_gcm);
  }

  TEST_CASE("two planes are not") {
    const auto c = classify_sequential(ideal(five(), kTwoPlanes));
    CHECK_FALSE(c.seq_cm);
    CHECK_FALSE(c.seq_gcm);
  }

  TEST_CASE("Cohen-Macaulay rings") {
    auto R = ring({"a", "b", "c", "d"});
    const auto c = classify_sequential(ideal(R, {"a*c-b^2", "a*d-b*c", "b*d-c^2"}));
    CHECK(c.seq_cm);
    CHECK(c.filtration.length() == 1);
  }

  TEST_CASE("skew lines are sequentially generalized only") {
    const auto c = classify_sequential(ideal(ring({"x", "y", "u", "v"}), {"x*u", "x*v", "y*u", "y*v"}));
    CHECK_FALSE(c.seq_cm);
    CHECK(c.seq_gcm);
  }
}

TEST_SUITE("good systems of parameters") {
  TEST_CASE("line and plane with the tail z") {
    auto R = three();
    const auto F = dimension_filtration(ideal(R, {"x*y", "x*z"}));
    const auto g = is_good_sop(polys(R, {"y-x", "z"}), F);
    CHECK(g.good);
    CHECK_FALSE(g.witness.has_value());
  }

  TEST_CASE("swapped roles are decided with a witness") {
    auto R = three();
    const auto I = ideal(R, {"x*y", "x*z"});
    const auto F = dimension_filtration(I);
    const auto g = is_good_sop(polys(R, {"z", "y-x"}), F);
    // x(y - x) = -x^2 mod I lies in (x) ∩ (y - x, I) but not in I.
    CHECK_FALSE(g.good);
    REQUIRE(g.witness.has_value());
    const auto& [index, w] = *g.witness;
    CHECK(index == 1);
    CHECK_FALSE(groebner(I).contains(w));
    CHECK(groebner(F.ideals[1]).contains(w));
    CHECK(groebner(ideal_sum(I, ideal(R, {"y-x"}))).contains(w));
  }

  TEST_CASE("trivial filtration accepts everything") {
    auto R = five();
    const auto F = dimension_filtration(ideal(R, kTwoPlanes));
    CHECK(is_good_sop(polys(R, {"a+c", "b+d", "e"}), F).good);
  }
}

TEST_SUITE("filtration properties") {
  TEST_CASE("annihilator product lies in each annihilator of low dimension") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
      auto R = ring({"x1", "x2", "x3", "x4", "x5"});
      const auto I = testing::squarefree_monomial_ideal(R, rng, 2 + static_cast<int>(rng() % 4));
      const auto A = annihilator_data(ModulePresentation::cyclic(I));
      IdealPresentation meet = IdealPresentation::unit(R);
      for (std::size_t i = 0; i < A.a.size(); ++i) {
        meet = intersect(meet, A.a[i]);
        CHECK(krull_dimension(A.a[i]) <= static_cast<int>(i));
      }
      CHECK(ideal_contains(meet, A.product));
    }
  }

  TEST_CASE("unmixed component is the top-dimensional part of the decomposition") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 12; ++trial) {
      auto R = ring({"x1", "x2", "x3", "x4", "x5"});
      const auto I = testing::squarefree_monomial_ideal(R, rng, 2 + static_cast<int>(rng() % 4));
      const int d = krull_dimension(I);
      std::vector<IdealPresentation> top;
      for (const auto& p : monomial_primary_decomposition(I))
        if (krull_dimension(p) == d) top.push_back(p);
      CHECK(ideal_equal(unmixed_component(I, trial).ideal, intersect_all(top, R)));
      CHECK(ideal_equal(intersect_all(monomial_primary_decomposition(I), R), I));
    }
  }

  TEST_CASE("unmixed component does not depend on the seed") {
    auto R = ring({"x", "y", "z", "w"});
    const auto I = ideal(R, {"x*y", "x*z", "x*w^2"});
    const auto ref = unmixed_component(I, 0).ideal;
    for (std::uint64_t s = 1; s < 5; ++s) CHECK(ideal_equal(unmixed_component(I, s).ideal, ref));
  }

  TEST_CASE("filtration steps have the recorded dimensions") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 10; ++trial) {
      auto R = ring({"x1", "x2", "x3", "x4", "x5"});
      const auto I = testing::squarefree_monomial_ideal(R, rng, 2 + static_cast<int>(rng() % 4));
      const auto F = dimension_filtration(I);
      CHECK(F.dims.back() == krull_dimension(I));
      for (std::size_t j = 0; j + 1 < F.dims.size(); ++j) CHECK(F.dims[j] < F.dims[j + 1]);
      for (std::size_t j = 0; j < F.length(); ++j) {
        CHECK(ideal_contains(F.ideals[j], I));
        if (j > 0) {
          CHECK(ideal_contains(F.ideals[j], F.ideals[j - 1]));
          CHECK(module_dimension(subquotient_presentation(F.ideals[j], I)) == F.dims[j]);
        }
      }
    }
  }
}
