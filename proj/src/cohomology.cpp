#include "irlab/cohomology.hpp"

#include <algorithm>
#include <bit>

#include "irlab/errors.hpp"
#include "irlab/filtration.hpp"
#include "irlab/linalg.hpp"

namespace irlab {

long long LocalCohomology::hilbert(int i, int degree) const {
  if (i < 0 || i > dim) return 0;
  const auto& E = duals[static_cast<std::size_t>(i)];
  if (E.num_generators() == 0) return 0;
  return hilbert_series(E).value(-degree - static_cast<int>(nvars));
}

LocalCohomology local_cohomology(const ModulePresentation& M) {
  LocalCohomology H;
  H.nvars = M.ring()->nvars();
  H.resolution = free_resolution(M, true);
  const int L = H.resolution.length();
  if (L < 0) return H;
  const int n = static_cast<int>(H.nvars);
  H.depth = n - L;
  H.dim = module_dimension(M);
  for (int i = 0; i <= H.dim; ++i) {
    ModulePresentation E = ext_module(H.resolution, n - i);
    H.dual_dims.push_back(E.num_generators() ? module_dimension(E) : -1);
    H.socle.push_back(static_cast<int>(E.num_generators()));
    H.duals.push_back(std::move(E));
  }
  return H;
}

std::vector<int> socle_dimensions(const ModulePresentation& M) {
  LocalCohomology H = local_cohomology(M);
  if (H.dim < 0) throw PreconditionError("socle dimensions of the zero module");
  return H.socle;
}

std::optional<int> power_of_maximal_inside(const IdealPresentation& J) {
  GroebnerBasis gb = groebner(J);
  if (gb.is_unit()) return 1;
  if (krull_dimension(gb) != 0) return std::nullopt;
  int top = 0;
  for (const auto& m : standard_monomials(gb)) top = std::max(top, m.degree());
  return top + 1;
}

AnnihilatorData annihilator_data(const LocalCohomology& H) {
  if (H.dim < 1) throw PreconditionError("annihilator data needs dim M >= 1");
  const auto& ring = H.resolution.ring;
  AnnihilatorData out{{}, IdealPresentation::unit(ring), 1};
  for (int i = 0; i < H.dim; ++i) {
    const auto& E = H.duals[static_cast<std::size_t>(i)];
    IdealPresentation a = E.num_generators() ? annihilator(E) : IdealPresentation::unit(ring);
    out.product = groebner(ideal_product(out.product, a)).presentation();
    if (out.n0) {
      auto k = power_of_maximal_inside(a);
      out.n0 = k ? std::optional<int>(std::max(*out.n0, *k)) : std::nullopt;
    }
    out.a.push_back(std::move(a));
  }
  return out;
}

AnnihilatorData annihilator_data(const ModulePresentation& M) { return annihilator_data(local_cohomology(M)); }

CmFlags cm_flags(const LocalCohomology& H, const ModulePresentation& M) {
  if (H.dim < 0) throw PreconditionError("CM flags of the zero module");
  CmFlags f;
  f.cm = H.depth && *H.depth == H.dim;
  f.generalized_cm = true;
  for (int i = 0; i < H.dim; ++i)
    if (H.dual_dims[static_cast<std::size_t>(i)] > 0) f.generalized_cm = false;
  if (M.cyclic_ideal()) {
    f.unmixed = is_unmixed(*M.cyclic_ideal());
  } else {
    // an associated prime of dimension i < d shows up as dim Ext^{n-i} = i
    f.unmixed = true;
    for (int i = 0; i < H.dim; ++i)
      if (H.dual_dims[static_cast<std::size_t>(i)] == i) f.unmixed = false;
  }
  return f;
}

CmFlags cm_flags(const ModulePresentation& M) { return cm_flags(local_cohomology(M), M); }

// ---------------------------------------------------------------------------
// Hochster's formula

std::vector<long long> reduced_cohomology(const std::vector<std::uint32_t>& faces, const PrimeField& F) {
  std::size_t top = 0;
  for (auto f : faces) top = std::max<std::size_t>(top, static_cast<std::size_t>(std::popcount(f)));
  std::vector<std::vector<std::uint32_t>> by_size(top + 2);
  for (auto f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& v : by_size) std::sort(v.begin(), v.end());

  // rank of the boundary from faces of size k to faces of size k-1
  std::vector<std::size_t> rk(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    const auto& lower = by_size[k - 1];
    std::vector<linalg::SparseRow> rows;
    for (auto s : by_size[k]) {
      linalg::SparseRow row;
      int pos = 0;
      for (std::uint32_t rest = s; rest; rest &= rest - 1) {
        std::uint32_t bit = rest & (~rest + 1);
        auto it = std::lower_bound(lower.begin(), lower.end(), s ^ bit);
        row.emplace_back(static_cast<std::size_t>(it - lower.begin()), pos % 2 ? F.neg(1) : 1);
        ++pos;
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    rk[k] = linalg::rank(F, std::move(rows));
  }
  std::vector<long long> out(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k)
    out[k] = static_cast<long long>(by_size[k].size()) - static_cast<long long>(rk[k]) -
             static_cast<long long>(rk[k + 1]);
  return out;
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::map<int, long long> hochster_hilbert(const IdealPresentation& I, int i, int lo, int hi) {
  const auto& ring = I.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::uint32_t> nonfaces;
  for (const auto& g : I.generators()) {
    if (!g.is_monomial()) throw PreconditionError("Hochster's formula needs a monomial ideal");
    const Monomial& m = g.lead().mon;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] > 1) throw PreconditionError("Hochster's formula needs a square-free ideal");
    nonfaces.push_back(m.support_mask());
  }
  auto is_face = [&](std::uint32_t s) {
    return std::none_of(nonfaces.begin(), nonfaces.end(), [&](std::uint32_t g) { return (g & ~s) == 0; });
  };
  std::vector<std::uint32_t> faces;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (is_face(s)) faces.push_back(s);

  std::map<int, long long> out;
  for (int nu = lo; nu <= hi; ++nu) out[nu] = 0;
  for (auto F : faces) {
    const int size = std::popcount(F);
    const int j = i - size - 1;
    if (j < -1) continue;
    std::vector<std::uint32_t> link;
    for (auto G : faces)
      if ((G & F) == 0 && is_face(G | F)) link.push_back(G);
    auto coh = reduced_cohomology(link, ring->field());
    if (static_cast<std::size_t>(j + 1) >= coh.size() || coh[static_cast<std::size_t>(j + 1)] == 0) continue;
    const long long h = coh[static_cast<std::size_t>(j + 1)];
    // multidegrees a <= 0 with support exactly F and total degree nu
    for (int nu = lo; nu <= hi; ++nu) {
      long long count = size == 0 ? (nu == 0 ? 1 : 0) : binom(-nu - 1, size - 1);
      out[nu] += h * count;
    }
  }
  return out;
}

}  // namespace irlab
