#include "irlab/parameters.hpp"

#include <algorithm>
#include <unordered_map>

#include "irlab/cohomology.hpp"
#include "irlab/errors.hpp"
#include "irlab/linalg.hpp"
#include "irlab/random.hpp"

namespace irlab {

namespace {

IdealPresentation with(const IdealPresentation& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), extra.begin(), extra.end());
  return IdealPresentation(I.ring(), std::move(g));
}

int dim_with(const IdealPresentation& I, const std::vector<Polynomial>& extra) {
  return krull_dimension(with(I, extra));
}

/// Random combination of the degree-D products g*u, g in gens.
Polynomial random_element(const std::vector<Polynomial>& gens, int D, FieldRng& rng, double density) {
  const auto& ring = gens.front().ring();
  const auto& K = ring->field();
  std::vector<Term> terms;
  bool any = false;
  for (const auto& g : gens) {
    int dg = g.degree();
    if (dg > D) continue;
    for (const auto& u : monomials_of_degree(ring->nvars(), D - dg)) {
      if (density < 1.0 && static_cast<double>(rng.below(1u << 20)) >= density * (1u << 20)) continue;
      any = true;
      Coeff c = rng.nonzero(K);
      for (const auto& t : g.terms()) terms.push_back({t.mon * u, K.mul(c, t.coeff)});
    }
  }
  if (!any) {
    // keep at least one product so sparse draws never come back empty
    for (const auto& g : gens) {
      if (g.degree() > D) continue;
      auto us = monomials_of_degree(ring->nvars(), D - g.degree());
      const auto& u = us[rng.below(us.size())];
      for (const auto& t : g.terms()) terms.push_back({t.mon * u, t.coeff});
      break;
    }
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace

SopCheck check_system_of_parameters(const std::vector<Polynomial>& x, const IdealPresentation& I) {
  SopCheck out;
  const int d = krull_dimension(I);
  if (static_cast<int>(x.size()) != d) {
    out.expected_dim = d;
    out.actual_dim = static_cast<int>(x.size());
    return out;
  }
  std::vector<Polynomial> prefix;
  for (std::size_t i = 0; i < x.size(); ++i) {
    prefix.push_back(x[i]);
    int got = dim_with(I, prefix);
    if (got != d - static_cast<int>(i) - 1) {
      out.failing_prefix = i + 1;
      out.expected_dim = d - static_cast<int>(i) - 1;
      out.actual_dim = got;
      return out;
    }
  }
  out.ok = true;
  return out;
}

bool is_system_of_parameters(const std::vector<Polynomial>& x, const IdealPresentation& I) {
  return check_system_of_parameters(x, I).ok;
}

Polynomial find_parameter_element(const IdealPresentation& I, const IdealPresentation& C, int min_degree,
                                  std::uint64_t seed, const ParameterSearchOptions& opt) {
  const int d = krull_dimension(I);
  if (d < 1) throw PreconditionError("parameter element needs dim M >= 1");
  GroebnerBasis gbC = groebner(C);
  if (gbC.is_zero()) throw PreconditionError("constraint ideal is zero");
  const auto& gens = gbC.elements();
  int lowest = gens.front().degree();
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw PreconditionError("constraint ideal is not homogeneous");
    lowest = std::min(lowest, g.degree());
  }
  if (!(opt.density > 0)) throw PreconditionError("density must be positive");
  const int start = std::max({min_degree, lowest, 1});
  FieldRng rng(seed);
  for (int D = start; D <= start + opt.degree_span; ++D) {
    // sparse draws rarely hit every component; densify before raising D
    for (double density = std::min(opt.density, 1.0);; density = std::min(1.0, 2 * density)) {
      for (int attempt = 0; attempt < opt.attempts_per_degree; ++attempt) {
        Polynomial x = random_element(gens, D, rng, density);
        if (x.is_zero()) continue;
        if (dim_with(I, {x}) == d - 1) return x;
      }
      if (density >= 1.0) break;
    }
  }
  throw SearchExhausted("no parameter element found in degrees " + std::to_string(start) + ".." +
                        std::to_string(start + opt.degree_span));
}

ParameterSystem construct_c_sop(const IdealPresentation& I, int min_degree, std::uint64_t seed,
                                const ParameterSearchOptions& opt) {
  const int d = krull_dimension(I);
  if (d < 1) throw PreconditionError("C-system of parameters needs dim M >= 1");
  ParameterSystem out;
  out.min_degree = min_degree;
  out.c_certified = true;
  IdealPresentation cur = groebner(I).presentation();
  std::vector<Polynomial> rev;
  for (int i = d; i >= 1; --i) {
    LocalCohomology H = local_cohomology(ModulePresentation::cyclic(cur));
    AnnihilatorData ad = annihilator_data(H);
    IdealPresentation C = groebner(ideal_power(ad.product, 3)).presentation();
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    Polynomial x(I.ring());
    try {
      x = find_parameter_element(cur, C, min_degree, s, opt);
    } catch (const SearchExhausted& e) {
      throw SearchExhausted("stage " + std::to_string(i) + ": " + e.what());
    }
    out.stages.push_back({i, C.generators(), x.degree(), s, i, i - 1});
    cur = groebner(with(cur, {x})).presentation();
    rev.push_back(std::move(x));
  }
  out.elements.assign(rev.rbegin(), rev.rend());
  return out;
}

ParameterSystem random_sop(const IdealPresentation& I, int degree, std::uint64_t seed,
                           const ParameterSearchOptions& opt) {
  const int d = krull_dimension(I);
  if (d < 1) throw PreconditionError("system of parameters needs dim M >= 1");
  ParameterSystem out;
  out.min_degree = degree;
  IdealPresentation cur = groebner(I).presentation();
  const IdealPresentation unit = IdealPresentation::unit(I.ring());
  std::vector<Polynomial> rev;
  for (int i = d; i >= 1; --i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    Polynomial x = find_parameter_element(cur, unit, degree, s, opt);
    out.stages.push_back({i, unit.generators(), x.degree(), s, i, i - 1});
    cur = groebner(with(cur, {x})).presentation();
    rev.push_back(std::move(x));
  }
  out.elements.assign(rev.rbegin(), rev.rend());
  return out;
}

CertificateCheck verify_c_certificate(const IdealPresentation& I, const std::vector<Polynomial>& x) {
  CertificateCheck out;
  const int d = krull_dimension(I);
  if (static_cast<int>(x.size()) != d) {
    out.reason = "expected " + std::to_string(d) + " elements";
    return out;
  }
  IdealPresentation cur = groebner(I).presentation();
  for (int i = d; i >= 1; --i) {
    const Polynomial& xi = x[static_cast<std::size_t>(i - 1)];
    LocalCohomology H = local_cohomology(ModulePresentation::cyclic(cur));
    AnnihilatorData ad = annihilator_data(H);
    GroebnerBasis C = groebner(ideal_power(ad.product, 3));
    if (!C.contains(xi)) {
      out.failing_index = i;
      out.reason = "not in the cube of the annihilator product";
      return out;
    }
    cur = groebner(with(cur, {xi})).presentation();
    if (krull_dimension(cur) != i - 1) {
      out.failing_index = i;
      out.reason = "dimension does not drop by one";
      return out;
    }
  }
  out.ok = true;
  return out;
}

IrResult socle_dimension(const IdealPresentation& J) {
  const auto& ring = J.ring();
  GroebnerBasis gb = groebner(J);
  const auto basis = standard_monomials(gb);
  IrResult out;
  out.length = static_cast<long long>(basis.size());

  GroebnerBasis gbc = groebner(quotient(J, IdealPresentation::maximal(ring)));
  out.by_colon = static_cast<int>(out.length - static_cast<long long>(standard_monomials(gbc).size()));

  std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
  for (std::size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], k);
  const std::size_t L = basis.size();
  std::vector<linalg::SparseRow> rows;
  rows.reserve(L);
  for (const auto& b : basis) {
    linalg::SparseRow row;
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      Polynomial img = gb.normal_form(Polynomial::monomial(ring, b * Monomial::variable(v)));
      for (const auto& t : img.terms()) row.emplace_back(v * L + idx.at(t.mon), t.coeff);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  out.by_kernels = static_cast<int>(L - linalg::rank(ring->field(), std::move(rows)));
  if (out.by_colon != out.by_kernels)
    throw InternalError("socle methods disagree: " + std::to_string(out.by_colon) + " vs " +
                        std::to_string(out.by_kernels));
  out.value = out.by_colon;
  return out;
}

IrResult index_of_reducibility(const std::vector<Polynomial>& q, const IdealPresentation& I) {
  SopCheck chk = check_system_of_parameters(q, I);
  if (!chk.ok) {
    std::string msg = "not a system of parameters";
    if (chk.failing_prefix)
      msg += ": prefix of length " + std::to_string(*chk.failing_prefix) + " leaves dimension " +
             std::to_string(chk.actual_dim) + ", expected " + std::to_string(chk.expected_dim);
    else
      msg += ": " + std::to_string(chk.actual_dim) + " elements for dimension " + std::to_string(chk.expected_dim);
    throw NotSystemOfParameters(msg);
  }
  return socle_dimension(with(I, q));
}

DSequenceCheck is_d_sequence(const std::vector<Polynomial>& x, const IdealPresentation& I) {
  DSequenceCheck out;
  const int d = static_cast<int>(x.size());
  for (int i = 0; i < d; ++i) {
    IdealPresentation base = groebner(with(I, std::vector<Polynomial>(x.begin(), x.begin() + i))).presentation();
    for (int j = i + 1; j <= d; ++j) {
      const Polynomial& xj = x[static_cast<std::size_t>(j - 1)];
      IdealPresentation lhs = quotient(base, x[static_cast<std::size_t>(i)] * xj);
      IdealPresentation rhs = quotient(base, xj);
      if (!ideal_equal(lhs, rhs)) {
        out.ok = false;
        out.witness = std::make_pair(i, j);
        return out;
      }
    }
  }
  return out;
}

}  // namespace irlab
