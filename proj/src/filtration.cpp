#include "irlab/filtration.hpp"

#include <algorithm>
#include <bit>

#include "irlab/errors.hpp"
#include "irlab/parameters.hpp"

namespace irlab {

UnmixedComponent unmixed_component(const IdealPresentation& I, std::uint64_t seed) {
  IdealPresentation base = groebner(I).presentation();
  const int d = krull_dimension(base);
  if (d < 0) throw PreconditionError("unmixed component of the zero module");
  if (d == 0) return {base, std::nullopt, true};
  AnnihilatorData ad = annihilator_data(ModulePresentation::cyclic(base));
  Polynomial x = find_parameter_element(base, ad.product, 1, seed);
  IdealPresentation K = saturate(base, x);
  bool agrees = ideal_equal(quotient(base, x), K);
  return {std::move(K), std::move(x), agrees};
}

bool is_unmixed(const IdealPresentation& I) { return ideal_equal(unmixed_component(I).ideal, I); }

DimensionFiltration dimension_filtration(const IdealPresentation& I, const LocalCohomology& H) {
  if (H.dim < 0) throw PreconditionError("dimension filtration of the zero module");
  DimensionFiltration F{groebner(I).presentation(), {}, {}};
  if (H.dim == 0) {
    F.dims.push_back(0);
    return F;
  }
  AnnihilatorData ad = annihilator_data(H);
  IdealPresentation K = F.base;
  for (int j = 0; j < H.dim; ++j) {
    const auto& a = ad.a[static_cast<std::size_t>(j)];
    if (!groebner(a).is_unit()) K = saturate(K, a);
    if (j == 0) {
      F.ideals.push_back(K);
      F.dims.push_back(0);
    } else if (!ideal_equal(K, F.ideals.back())) {
      F.ideals.push_back(K);
      F.dims.push_back(j);
    }
  }
  F.dims.push_back(H.dim);
  return F;
}

DimensionFiltration dimension_filtration(const IdealPresentation& I) {
  return dimension_filtration(I, local_cohomology(ModulePresentation::cyclic(I)));
}

// ---------------------------------------------------------------------------
// monomial decomposition

namespace {

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  return out;
}

constexpr std::size_t kMaxComponents = 1u << 16;

void split(std::vector<Monomial> gens, std::vector<std::vector<Monomial>>& out) {
  gens = minimal_monomials(std::move(gens));
  auto it = std::find_if(gens.begin(), gens.end(), [](const Monomial& m) { return std::popcount(m.support_mask()) > 1; });
  if (it == gens.end()) {
    if (out.size() >= kMaxComponents) throw ResourceError("monomial decomposition has too many components");
    out.push_back(std::move(gens));
    return;
  }
  const Monomial m = *it;
  const auto v = static_cast<std::size_t>(std::countr_zero(m.support_mask()));
  const Monomial left = Monomial::variable(v, m[v]);
  const Monomial right = m / left;
  gens.erase(it);
  auto a = gens;
  a.push_back(left);
  split(std::move(a), out);
  gens.push_back(right);
  split(std::move(gens), out);
}

bool monomial_ideal_contains(const std::vector<Monomial>& big, const std::vector<Monomial>& small) {
  return std::all_of(small.begin(), small.end(), [&](const Monomial& s) {
    return std::any_of(big.begin(), big.end(), [&](const Monomial& b) { return b.divides(s); });
  });
}

}  // namespace

std::vector<IdealPresentation> monomial_primary_decomposition(const IdealPresentation& I) {
  if (!I.is_monomial()) throw PreconditionError("decomposition needs monomial generators");
  const auto& ring = I.ring();
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.lead().mon);
  std::vector<std::vector<Monomial>> comps;
  if (gens.empty()) return {};
  split(gens, comps);
  for (auto& c : comps)
    std::sort(c.begin(), c.end(), [](const Monomial& a, const Monomial& b) {
      return std::countr_zero(a.support_mask()) < std::countr_zero(b.support_mask());
    });
  std::vector<std::vector<Monomial>> keep;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
      if (i == j || !monomial_ideal_contains(comps[i], comps[j])) continue;
      // comps[j] ⊆ comps[i]; drop i unless they are equal and i comes first
      redundant = !monomial_ideal_contains(comps[j], comps[i]) || j < i;
    }
    if (!redundant) keep.push_back(comps[i]);
  }
  std::vector<IdealPresentation> out;
  for (const auto& c : keep) {
    std::vector<Polynomial> g;
    for (const auto& m : c) g.push_back(Polynomial::monomial(ring, m));
    out.emplace_back(ring, std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// sequential classification

namespace {

FiltrationStep classify_step(int index, const ModulePresentation& P) {
  FiltrationStep s;
  s.index = index;
  LocalCohomology H = local_cohomology(P);
  if (H.dim < 0) {
    s.zero = true;
    s.cm = s.generalized_cm = true;
    return s;
  }
  s.dim = H.dim;
  s.depth = H.depth;
  s.cm = H.depth && *H.depth == H.dim;
  s.generalized_cm = true;
  for (int i = 0; i < H.dim; ++i)
    if (H.dual_dims[static_cast<std::size_t>(i)] > 0) s.generalized_cm = false;
  return s;
}

}  // namespace

SequentialClass classify_sequential(const IdealPresentation& I) {
  LocalCohomology H = local_cohomology(ModulePresentation::cyclic(I));
  SequentialClass out{false, false, dimension_filtration(I, H), {}};
  const auto& F = out.filtration;
  const std::size_t t = F.length();
  if (t == 0) {
    out.steps.push_back(classify_step(0, ModulePresentation::cyclic(F.base)));
  } else {
    out.steps.push_back(classify_step(0, subquotient_presentation(F.ideals[0], F.base)));
    for (std::size_t i = 1; i < t; ++i)
      out.steps.push_back(classify_step(static_cast<int>(i), subquotient_presentation(F.ideals[i], F.ideals[i - 1])));
    out.steps.push_back(classify_step(static_cast<int>(t), ModulePresentation::cyclic(F.ideals[t - 1])));
  }
  out.seq_cm = std::all_of(out.steps.begin(), out.steps.end(), [](const FiltrationStep& s) { return s.cm; });
  out.seq_gcm =
      std::all_of(out.steps.begin(), out.steps.end(), [](const FiltrationStep& s) { return s.generalized_cm; });
  return out;
}

GoodSopCheck is_good_sop(const std::vector<Polynomial>& x, const DimensionFiltration& F) {
  GoodSopCheck out;
  const int d = F.dims.back();
  if (static_cast<int>(x.size()) != d) throw PreconditionError("parameter system length differs from dim M");
  GroebnerBasis gbI = groebner(F.base);
  for (std::size_t i = 0; i < F.length(); ++i) {
    std::vector<Polynomial> g = F.base.generators();
    for (int k = F.dims[i]; k < d; ++k) g.push_back(x[static_cast<std::size_t>(k)]);
    IdealPresentation meet = intersect(F.ideals[i], IdealPresentation(F.base.ring(), std::move(g)));
    for (const auto& h : meet.generators()) {
      if (!gbI.contains(h)) {
        out.good = false;
        out.witness = std::make_pair(static_cast<int>(i), h);
        return out;
      }
    }
  }
  return out;
}

}  // namespace irlab
