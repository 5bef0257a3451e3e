#include "irlab/resolution.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "irlab/errors.hpp"

namespace irlab {

// ---------------------------------------------------------------------------
// FreeResolution

int FreeResolution::length() const {
  for (std::size_t k = degrees.size(); k-- > 0;)
    if (!degrees[k].empty()) return static_cast<int>(k);
  return -1;
}

std::vector<std::size_t> FreeResolution::betti() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= length(); ++k) out.push_back(degrees[static_cast<std::size_t>(k)].size());
  return out;
}

std::map<std::pair<int, int>, int> FreeResolution::graded_betti() const {
  std::map<std::pair<int, int>, int> out;
  for (std::size_t k = 0; k < degrees.size(); ++k)
    for (int d : degrees[k]) ++out[{static_cast<int>(k), d}];
  return out;
}

std::string FreeResolution::betti_table() const {
  auto gb = graded_betti();
  if (gb.empty()) return "(zero module)\n";
  int lo = gb.begin()->first.second, hi = lo;
  for (const auto& [key, c] : gb) {
    lo = std::min(lo, key.second);
    hi = std::max(hi, key.second);
  }
  std::ostringstream os;
  os << "deg:";
  for (int d = lo; d <= hi; ++d) os << '\t' << d;
  os << '\n';
  for (int k = 0; k <= length(); ++k) {
    os << k << ':';
    for (int d = lo; d <= hi; ++d) {
      auto it = gb.find({k, d});
      os << '\t' << (it == gb.end() ? 0 : it->second);
    }
    os << '\n';
  }
  return os.str();
}

bool FreeResolution::is_complex() const {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (!(maps[k] * maps[k + 1]).is_zero()) return false;
  return true;
}

bool FreeResolution::has_unit_entries() const {
  return std::any_of(maps.begin(), maps.end(), [](const PolyMatrix& d) { return d.find_unit().has_value(); });
}

HilbertSeries FreeResolution::euler_characteristic() const {
  HilbertSeries out(ring->nvars());
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    HilbertSeries f = HilbertSeries::of_free(ring->nvars(), degrees[k]);
    if (k % 2)
      out -= f;
    else
      out += f;
  }
  return out;
}

// ---------------------------------------------------------------------------
// construction and minimalization

namespace {

/// Splits off the unit entry (a, b) of maps[m]: F_{m+1} -> F_m.
void prune(FreeResolution& R, std::size_t m, std::size_t a, std::size_t b) {
  PolyMatrix& d = R.maps[m];
  const Polynomial u = d.entry(a, b);
  const Coeff uinv = R.ring->field().inv(u.lead().coeff);
  for (std::size_t c = 0; c < d.cols(); ++c) {
    if (c == b) continue;
    Polynomial f = d.entry(a, c);
    if (!f.is_zero()) d.add_column_multiple(c, b, -f.scaled(uinv));
  }
  d.erase_column(b);
  d.erase_row(a);
  if (m >= 1) R.maps[m - 1].erase_column(a);
  if (m + 1 < R.maps.size()) R.maps[m + 1].erase_row(b);
  R.degrees[m + 1].erase(R.degrees[m + 1].begin() + static_cast<std::ptrdiff_t>(b));
  R.degrees[m].erase(R.degrees[m].begin() + static_cast<std::ptrdiff_t>(a));
}

void prune_all(FreeResolution& R, std::size_t m) {
  while (auto u = R.maps[m].find_unit()) prune(R, m, u->first, u->second);
}

void trim(FreeResolution& R) {
  while (R.degrees.size() > 1 && R.degrees.back().empty()) {
    R.degrees.pop_back();
    R.maps.pop_back();
  }
}

}  // namespace

FreeResolution minimalize(FreeResolution R) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t m = 0; m < R.maps.size(); ++m) {
      if (R.maps[m].find_unit()) {
        prune_all(R, m);
        again = true;
      }
    }
  }
  trim(R);
  R.minimal = true;
  return R;
}

FreeResolution free_resolution(const ModulePresentation& M, bool minimal) {
  const auto& ring = M.ring();
  const std::size_t n = ring->nvars();
  FreeResolution R;
  R.ring = ring;
  R.minimal = minimal;
  R.degrees.push_back(M.gen_degrees());
  std::vector<Vec> cols = M.relations();
  for (std::size_t k = 0; !cols.empty(); ++k) {
    if (k > 2 * n + 4) throw InternalError("resolution failed to terminate");
    FreeModule target(ring, R.degrees[k]);
    std::vector<int> src;
    src.reserve(cols.size());
    for (const auto& c : cols) src.push_back(c.is_zero() ? 0 : vec::degree(target, c));
    R.degrees.push_back(std::move(src));
    R.maps.push_back(PolyMatrix::from_columns(target, cols));
    // past the Hilbert syzygy bound the remaining tail is pruned in any mode
    if (minimal || k >= n) prune_all(R, k);
    const PolyMatrix& d = R.maps[k];
    if (d.cols() == 0) break;
    std::vector<Vec> columns;
    columns.reserve(d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j) columns.push_back(d.column_vec(j));
    ModuleGB syz = syzygies(FreeModule(ring, R.degrees[k]), columns, R.degrees[k + 1]);
    cols = syz.elements();
  }
  trim(R);
  return R;
}

FreeResolution taylor_resolution(const IdealPresentation& I) {
  if (!I.is_monomial()) throw PreconditionError("Taylor resolution needs monomial generators");
  const auto& gens = I.generators();
  const std::size_t g = gens.size();
  if (g > 20) throw PreconditionError("Taylor resolution limited to 20 generators, got " + std::to_string(g));
  const auto& ring = I.ring();
  std::vector<Monomial> mons;
  for (const auto& f : gens) mons.push_back(f.lead().mon);

  // faces of each size, as bitmasks, with their lcm
  std::vector<std::vector<std::uint32_t>> faces(g + 1);
  for (std::uint32_t s = 0; s < (1u << g); ++s) faces[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  std::vector<Monomial> lcm(std::size_t{1} << g);
  for (std::uint32_t s = 1; s < (1u << g); ++s) {
    std::uint32_t low = s & (~s + 1);
    lcm[s] = Monomial::lcm(lcm[s ^ low], mons[static_cast<std::size_t>(std::countr_zero(low))]);
  }
  std::vector<std::uint32_t> index(std::size_t{1} << g);
  for (const auto& level : faces)
    for (std::size_t i = 0; i < level.size(); ++i) index[level[i]] = static_cast<std::uint32_t>(i);

  FreeResolution R;
  R.ring = ring;
  for (std::size_t k = 0; k <= g; ++k) {
    std::vector<int> degs;
    for (auto s : faces[k]) degs.push_back(lcm[s].degree());
    R.degrees.push_back(std::move(degs));
  }
  for (std::size_t k = 1; k <= g; ++k) {
    PolyMatrix d(ring, faces[k - 1].size(), faces[k].size());
    for (std::size_t c = 0; c < faces[k].size(); ++c) {
      const std::uint32_t s = faces[k][c];
      int pos = 0;
      for (std::size_t j = 0; j < g; ++j) {
        if (!(s & (1u << j))) continue;
        const std::uint32_t t = s ^ (1u << j);
        Coeff sign = pos % 2 ? ring->field().neg(1) : 1;
        d.set(index[t], c, Polynomial::monomial(ring, lcm[s] / lcm[t], sign));
        ++pos;
      }
    }
    R.maps.push_back(std::move(d));
  }
  return R;
}

// ---------------------------------------------------------------------------
// Ext and invariants

namespace {

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](int x) { return -x; });
  return out;
}

}  // namespace

ModulePresentation ext_module(const FreeResolution& R, int j) {
  const auto& ring = R.ring;
  const int n = static_cast<int>(ring->nvars());
  if (j < 0 || j > n) throw PreconditionError("Ext index out of range");
  if (!R.minimal) throw PreconditionError("Ext needs a minimal resolution");
  const int L = R.length();
  if (L < 0 || j > L) return ModulePresentation::zero(ring);
  const auto ju = static_cast<std::size_t>(j);
  const FreeModule dual(ring, negated(R.degrees[ju]));

  std::vector<Vec> kgens;
  if (j == L) {
    for (std::size_t i = 0; i < R.degrees[ju].size(); ++i) kgens.push_back(vec::unit(static_cast<std::uint32_t>(i)));
  } else {
    // kernel of the transpose of F_{j+1} -> F_j
    const FreeModule next(ring, negated(R.degrees[ju + 1]));
    ModuleGB k = syzygies(next, R.maps[ju].row_vecs(), dual.shifts());
    kgens = k.elements();
  }
  if (kgens.empty()) return ModulePresentation::zero(ring);
  std::vector<int> degs;
  for (const auto& v : kgens) degs.push_back(vec::degree(dual, v));

  std::vector<Vec> all = kgens;
  std::vector<int> alldeg = degs;
  if (j >= 1) {
    const auto rows = R.maps[ju - 1].row_vecs();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].is_zero()) continue;
      all.push_back(rows[r]);
      alldeg.push_back(-R.degrees[ju - 1][r]);
    }
  }
  ModuleGB syz = syzygies(dual, all, alldeg);
  const auto m = static_cast<std::uint32_t>(kgens.size());
  std::vector<Vec> rels;
  for (const auto& s : syz.elements()) {
    Vec v = vec::restrict_components(s, 0, m);
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  return ModulePresentation(ring, std::move(degs), std::move(rels)).minimized();
}

ModulePresentation ext_module(const ModulePresentation& M, int j) { return ext_module(free_resolution(M, true), j); }

HilbertSeries hilbert_series(const ModulePresentation& M) {
  ModuleGB gb = groebner_basis(M.free_module(), M.relations());
  return HilbertSeries::of_quotient(gb);
}

std::optional<int> depth(const ModulePresentation& M) {
  FreeResolution R = free_resolution(M, true);
  if (R.length() < 0) return std::nullopt;
  return static_cast<int>(M.ring()->nvars()) - R.length();
}

int module_dimension(const ModulePresentation& M) {
  if (M.cyclic_ideal()) return krull_dimension(*M.cyclic_ideal());
  return hilbert_series(M).dimension();
}

ModuleInvariants module_invariants(const ModulePresentation& M) {
  ModuleInvariants out{false, -1, std::nullopt, std::nullopt, annihilator(M), hilbert_series(M)};
  const int dim = krull_dimension(out.annihilator);
  if (dim != out.hilbert.dimension())
    throw InternalError("dimension from the annihilator disagrees with the Hilbert series");
  out.dim = dim;
  if (dim < 0) {
    out.zero = true;
    return out;
  }
  FreeResolution R = free_resolution(M, true);
  out.projective_dimension = R.length();
  out.depth = static_cast<int>(M.ring()->nvars()) - R.length();
  return out;
}

}  // namespace irlab
