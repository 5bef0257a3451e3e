#pragma once

#include <random>
#include <string>
#include <vector>

#include "irlab/ideal.hpp"
#include "irlab/module.hpp"
#include "irlab/polynomial.hpp"
#include "irlab/ring.hpp"

namespace testing {

inline irlab::RingPtr ring(std::vector<std::string> vars, irlab::Coeff p = 32003) {
  return irlab::make_ring(std::move(vars), p);
}

inline irlab::Polynomial poly(const irlab::RingPtr& R, const std::string& text) {
  return irlab::parse_polynomial(text, R);
}

inline irlab::IdealPresentation ideal(const irlab::RingPtr& R, const std::vector<std::string>& gens) {
  return irlab::IdealPresentation::parse(R, gens);
}

inline std::vector<irlab::Polynomial> polys(const irlab::RingPtr& R, const std::vector<std::string>& texts) {
  std::vector<irlab::Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(R, t));
  return out;
}

inline irlab::ModulePresentation cyclic(const irlab::RingPtr& R, const std::vector<std::string>& gens) {
  return irlab::ModulePresentation::cyclic(ideal(R, gens));
}

/// Random polynomial with up to `terms` terms of degree <= max_deg.
inline irlab::Polynomial random_poly(const irlab::RingPtr& R, std::mt19937_64& rng, int terms, int max_deg) {
  std::vector<irlab::Term> ts;
  const auto p = R->field().characteristic();
  for (int t = 0; t < terms; ++t) {
    irlab::Monomial m;
    int budget = static_cast<int>(rng() % (max_deg + 1));
    for (std::size_t v = 0; v < R->nvars() && budget > 0; ++v) {
      const int e = static_cast<int>(rng() % (budget + 1));
      m.set(v, m[v] + e);
      budget -= e;
    }
    ts.push_back({m, static_cast<irlab::Coeff>(rng() % p)});
  }
  irlab::Polynomial f(R);
  for (const auto& t : ts) f += irlab::Polynomial::monomial(R, t.mon, t.coeff);
  return f;
}

/// Random homogeneous polynomial of degree `deg`.
inline irlab::Polynomial random_form(const irlab::RingPtr& R, std::mt19937_64& rng, int deg, int terms) {
  irlab::Polynomial f(R);
  const auto mons = irlab::monomials_of_degree(R->nvars(), deg);
  const auto p = R->field().characteristic();
  for (int t = 0; t < terms; ++t)
    f += irlab::Polynomial::monomial(R, mons[rng() % mons.size()], static_cast<irlab::Coeff>(rng() % (p - 1) + 1));
  return f;
}

inline irlab::IdealPresentation squarefree_monomial_ideal(const irlab::RingPtr& R, std::mt19937_64& rng, int ngens) {
  std::vector<irlab::Polynomial> gens;
  const std::size_t n = R->nvars();
  while (static_cast<int>(gens.size()) < ngens) {
    irlab::Monomial m;
    const int deg = 2 + static_cast<int>(rng() % 2);
    int placed = 0;
    while (placed < deg) {
      const std::size_t v = rng() % n;
      if (m[v] == 0) {
        m.set(v, 1);
        ++placed;
      }
    }
    gens.push_back(irlab::Polynomial::monomial(R, m));
  }
  return irlab::IdealPresentation(R, gens);
}

/// Rank over F_p by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<irlab::Coeff>> rows, const irlab::PrimeField& F) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const irlab::Coeff inv = F.inv(rows[r][c]);
    for (auto& v : rows[r]) v = F.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const irlab::Coeff f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(f, rows[r][k]));
    }
    ++r;
  }
  return r;
}

}  // namespace testing
