#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "irlab/errors.hpp"
#include "irlab/groebner.hpp"

using namespace irlab;
using testing::ideal;
using testing::poly;
using testing::polys;
using testing::ring;

namespace {

std::vector<Monomial> monomials_up_to(std::size_t n, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& m : monomials_of_degree(n, k)) out.push_back(m);
  return out;
}

// dim_k of S_{<=d} / span{u*g : deg(u*g) <= d}; a lower bound for the
// colength that is exact once d is large enough.
std::size_t truncated_colength(const IdealPresentation& I, int d) {
  const auto& R = I.ring();
  const auto basis = monomials_up_to(R->nvars(), d);
  std::vector<std::vector<Coeff>> rows;
  for (const auto& g : I.generators())
    for (const auto& u : monomials_up_to(R->nvars(), d - g.degree())) {
      std::vector<Coeff> row(basis.size(), 0);
      const Polynomial h = g.times_monomial(u);
      for (const auto& t : h.terms())
        row[std::find(basis.begin(), basis.end(), t.mon) - basis.begin()] = t.coeff;
      rows.push_back(std::move(row));
    }
  return basis.size() - testing::dense_rank(rows, R->field());
}

// Membership of a homogeneous f in a homogeneous ideal by linear algebra in
// the single degree deg f.
bool member_by_linear_algebra(const Polynomial& f, const IdealPresentation& I) {
  const auto& R = I.ring();
  const int d = f.degree();
  const auto basis = monomials_of_degree(R->nvars(), d);
  auto row_of = [&](const Polynomial& h) {
    std::vector<Coeff> row(basis.size(), 0);
    for (const auto& t : h.terms()) row[std::find(basis.begin(), basis.end(), t.mon) - basis.begin()] = t.coeff;
    return row;
  };
  std::vector<std::vector<Coeff>> rows;
  for (const auto& g : I.generators())
    if (g.degree() <= d)
      for (const auto& u : monomials_of_degree(R->nvars(), d - g.degree())) rows.push_back(row_of(g.times_monomial(u)));
  const std::size_t r = testing::dense_rank(rows, R->field());
  rows.push_back(row_of(f));
  return testing::dense_rank(rows, R->field()) == r;
}

std::vector<Polynomial> gb_elements(std::vector<Polynomial> gens, const RingPtr& R) {
  return buchberger(gens, R).elements();
}

}  // namespace

TEST_SUITE("groebner bases") {
  TEST_CASE("monomial ideal is its own reduced basis") {
    auto R = ring({"x", "y", "z"});
    const auto gb = buchberger(polys(R, {"x*y", "x*z"}), R);
    CHECK(gb.elements() == polys(R, {"x*y", "x*z"}));
  }

  TEST_CASE("linear elimination") {
    auto R = ring({"x", "y"});
    const auto gb = buchberger(polys(R, {"x+y", "x-y"}), R);
    CHECK(gb.elements() == polys(R, {"x", "y"}));
  }

  TEST_CASE("inhomogeneous system with two standard monomials") {
    auto R = ring({"x", "y", "z"});
    const auto I = ideal(R, {"x*y", "x*z", "y-x", "z"});
    const auto sm = standard_monomials(I);
    // y - x has lead x under grevlex, so y survives as the standard monomial.
    CHECK(sm == std::vector<Monomial>{Monomial(), Monomial::variable(1)});
    CHECK(truncated_colength(I, 3) == 2);
  }

  TEST_CASE("empty input gives the zero ideal") {
    auto R = ring({"x"});
    CHECK(buchberger({}, R).is_zero());
  }

  TEST_CASE("normal forms") {
    auto R = ring({"x", "y", "z"});
    const auto gb = groebner(ideal(R, {"x*y", "x*z"}));
    CHECK(normal_form(poly(R, "x*y*z"), gb).is_zero());
    CHECK(normal_form(poly(R, "x"), gb) == poly(R, "x"));
    CHECK(normal_form(poly(R, "y*x + z"), gb) == poly(R, "z"));
  }

  TEST_CASE("S-pair budget is enforced") {
    auto R = ring({"a", "b", "c", "d"});
    const auto I = ideal(R, {"a^2-b*c", "b^2-c*d", "c^2-a*d", "d^2-a*b"});
    const auto saved = spair_budget();
    set_spair_budget(2);
    CHECK_THROWS_AS(groebner(I), ResourceError);
    set_spair_budget(saved);
    CHECK_NOTHROW(groebner(I));
  }
}

TEST_SUITE("ideal operations") {
  TEST_CASE("intersection of two planes in five variables") {
    auto R = ring({"a", "b", "c", "d", "e"});
    const auto J = intersect(ideal(R, {"a", "b"}), ideal(R, {"c", "d"}));
    CHECK(ideal_equal(J, ideal(R, {"a*c", "a*d", "b*c", "b*d"})));
    CHECK(groebner(J).elements() == polys(R, {"a*c", "b*c", "a*d", "b*d"}));
    CHECK(ideal_equal(J, intersect_by_syzygies(ideal(R, {"a", "b"}), ideal(R, {"c", "d"}))));
    CHECK(ideal_equal(J, ideal_ops(ideal(R, {"a", "b"}), ideal(R, {"c", "d"}), IdealOp::intersection)));
  }

  TEST_CASE("colon by a variable") {
    auto R = ring({"x", "y", "z"});
    const auto I = ideal(R, {"x*y", "x*z"});
    const auto Q = quotient(I, poly(R, "x"));
    CHECK(ideal_equal(Q, ideal(R, {"y", "z"})));
    CHECK(ideal_equal(Q, quotient_by_syzygies(I, poly(R, "x"))));
    CHECK(ideal_equal(Q, ideal_ops(I, ideal(R, {"x"}), IdealOp::colon)));
    // Degree-bounded definition: u*x ∈ I exactly when u ∈ (y, z).
    const auto yz = ideal(R, {"y", "z"});
    for (int d = 1; d <= 3; ++d)
      for (const auto& m : monomials_of_degree(3, d)) {
        const Polynomial u = Polynomial::monomial(R, m);
        CHECK(member_by_linear_algebra(u * poly(R, "x"), I) == member_by_linear_algebra(u, yz));
      }
  }

  TEST_CASE("sum with zero and products") {
    auto R = ring({"x", "y", "z"});
    const auto A = ideal(R, {"x^2", "y*z"});
    CHECK(ideal_equal(ideal_sum(A, IdealPresentation(R)), A));
    CHECK(ideal_equal(ideal_ops(A, IdealPresentation(R), IdealOp::sum), A));
    CHECK(ideal_equal(ideal_product(ideal(R, {"x"}), ideal(R, {"y", "z"})), ideal(R, {"x*y", "x*z"})));
    CHECK(ideal_equal(ideal_power(ideal(R, {"x", "y"}), 2), ideal(R, {"x^2", "x*y", "y^2"})));
  }

  TEST_CASE("saturation") {
    auto R = ring({"x", "y", "z"});
    const auto I = ideal(R, {"x^2*y", "x^3*z"});
    CHECK(ideal_equal(saturate(I, poly(R, "x")), ideal(R, {"y", "z"})));
    CHECK(ideal_equal(saturate(ideal(R, {"x*y", "x*z"}), IdealPresentation::maximal(R)), ideal(R, {"x*y", "x*z"})));
  }

  TEST_CASE("krull dimension") {
    auto R3 = ring({"x", "y", "z"});
    CHECK(krull_dimension(ideal(R3, {"x*y", "x*z"})) == 2);
    auto R5 = ring({"a", "b", "c", "d", "e"});
    CHECK(krull_dimension(ideal(R5, {"a*c", "a*d", "b*c", "b*d"})) == 3);
    CHECK(krull_dimension(IdealPresentation(R5)) == 5);
    CHECK(krull_dimension(IdealPresentation::unit(R5)) == -1);
  }

  TEST_CASE("standard monomials") {
    auto R = ring({"x", "y"});
    CHECK(standard_monomials(ideal(R, {"x^2", "y"})) == std::vector<Monomial>{Monomial(), Monomial::variable(0)});
    CHECK_THROWS_AS(standard_monomials(ideal(R, {"x"})), NotArtinian);
    CHECK(standard_monomials(ideal(R, {"x"}), 2).size() == 3);
  }
}

TEST_SUITE("syzygies") {
  TEST_CASE("koszul relation of two variables") {
    auto R = ring({"x", "y"});
    const auto S = syzygies(polys(R, {"x", "y"}), R);
    REQUIRE(S.size() == 1);
    const auto c = vec::to_polys(S.module(), S.elements()[0]);
    CHECK(c[0] * poly(R, "x") + c[1] * poly(R, "y") == Polynomial(R));
    CHECK((c[0] == poly(R, "y") || c[0] == poly(R, "-y")));
    CHECK(c[1] == (c[0] == poly(R, "y") ? poly(R, "-x") : poly(R, "x")));
  }

  TEST_CASE("relation of two monomials") {
    auto R = ring({"x", "y", "z"});
    const auto S = syzygies(polys(R, {"x*y", "x*z"}), R);
    REQUIRE(S.size() == 1);
    const auto c = vec::to_polys(S.module(), S.elements()[0]);
    CHECK(c[0] * poly(R, "x*y") + c[1] * poly(R, "x*z") == Polynomial(R));
    CHECK(c[0].degree() == 1);
    CHECK(c[0].monic() == poly(R, "z"));
    CHECK(c[1].monic() == poly(R, "y"));
  }

  TEST_CASE("single nonzerodivisor has no relations") {
    auto R = ring({"x", "y"});
    CHECK(syzygies(polys(R, {"x^2 + x*y"}), R).is_zero());
  }
}

TEST_SUITE("groebner properties") {
  TEST_CASE("reduced basis does not depend on generator order") {
    auto R = ring({"x", "y", "z", "w"});
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(testing::random_form(R, rng, 2 + static_cast<int>(rng() % 2), 3));
      const auto ref = gb_elements(gens, R);
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(gb_elements(gens, R) == ref);
      std::vector<Polynomial> scaled;
      for (const auto& g : gens) scaled.push_back(g.scaled(17));
      CHECK(gb_elements(scaled, R) == ref);
    }
  }

  TEST_CASE("bases verify and are reduced") {
    auto R = ring({"x", "y", "z", "w"});
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(testing::random_form(R, rng, 2, 4));
      const auto gb = buchberger(gens, R);
      std::vector<Vec> as_vecs;
      for (const auto& g : gens) as_vecs.push_back(vec::embed(g, 0));
      CHECK(verify_groebner(gb.module_gb(), as_vecs));
      for (std::size_t i = 0; i < gb.elements().size(); ++i) {
        CHECK(gb.elements()[i].lead().coeff == 1);
        for (std::size_t j = 0; j < gb.elements().size(); ++j)
          if (i != j)
            for (const auto& t : gb.elements()[j].terms()) CHECK_FALSE(gb.elements()[i].lead().mon.divides(t.mon));
      }
    }
  }

  TEST_CASE("intersection lies between product and both factors") {
    auto R = ring({"x", "y", "z", "w"});
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
      const IdealPresentation A(R, {testing::random_form(R, rng, 1, 2), testing::random_form(R, rng, 2, 3)});
      const IdealPresentation B(R, {testing::random_form(R, rng, 2, 2), testing::random_form(R, rng, 2, 3)});
      const auto C = intersect(A, B);
      CHECK(ideal_contains(A, C));
      CHECK(ideal_contains(B, C));
      CHECK(ideal_contains(C, ideal_product(A, B)));
      CHECK(ideal_equal(C, intersect_by_syzygies(A, B)));
    }
  }

  TEST_CASE("colon routes agree") {
    auto R = ring({"x", "y", "z", "w"});
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 10; ++trial) {
      const auto I = testing::squarefree_monomial_ideal(R, rng, 3);
      const Polynomial f = testing::random_form(R, rng, 1, 2);
      const auto Q = quotient(I, f);
      CHECK(ideal_equal(Q, quotient_by_syzygies(I, f)));
      CHECK(ideal_contains(Q, I));
      for (const auto& q : Q.generators()) CHECK(groebner(I).contains(q * f));
    }
  }

  TEST_CASE("dimension equals dimension of the initial ideal") {
    auto R = ring({"x", "y", "z", "w", "v"});
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Polynomial> gens;
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < k; ++j) gens.push_back(testing::random_form(R, rng, 2, 15));
      const auto gb = buchberger(gens, R);
      CHECK(krull_dimension(gb) == monomial_ideal_dimension(gb.initial_ideal(), 5));
      CHECK(krull_dimension(gb) == 5 - k);
    }
  }

  TEST_CASE("syzygies pair to zero") {
    auto R = ring({"x", "y", "z"});
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Polynomial> gens;
      for (int j = 0; j < 3; ++j) gens.push_back(testing::random_form(R, rng, 2, 3));
      const auto S = syzygies(gens, R);
      CHECK_FALSE(S.is_zero());
      for (const auto& s : S.elements()) {
        const auto c = vec::to_polys(S.module(), s);
        Polynomial sum(R);
        for (std::size_t i = 0; i < gens.size(); ++i) sum += c[i] * gens[i];
        CHECK(sum.is_zero());
      }
    }
  }
}
