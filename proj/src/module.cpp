#include "irlab/module.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "irlab/errors.hpp"

namespace irlab {

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix PolyMatrix::from_columns(const FreeModule& target, const std::vector<Vec>& columns) {
  std::vector<Column> cols;
  cols.reserve(columns.size());
  for (const auto& v : columns) {
    std::map<std::size_t, std::vector<Term>> byrow;
    for (const auto& t : v.terms) byrow[t.comp].push_back({t.mon, t.coeff});
    Column c;
    for (auto& [row, terms] : byrow) c.emplace_back(row, Polynomial(target.ring(), std::move(terms)));
    cols.push_back(std::move(c));
  }
  return PolyMatrix(target.ring(), target.rank(), std::move(cols));
}

Polynomial PolyMatrix::entry(std::size_t i, std::size_t j) const {
  for (const auto& [row, f] : cols_[j])
    if (row == i) return f;
  return Polynomial(ring_);
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial value) {
  auto& col = cols_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != col.end() && it->first == i) {
    if (value.is_zero())
      col.erase(it);
    else
      it->second = std::move(value);
  } else if (!value.is_zero()) {
    col.insert(it, {i, std::move(value)});
  }
}

Vec PolyMatrix::column_vec(std::size_t j) const {
  Vec v;
  for (const auto& [row, f] : cols_[j])
    for (const auto& t : f.terms()) v.terms.push_back({t.mon, static_cast<std::uint32_t>(row), t.coeff});
  // rows ascending gives descending POT order; terms within a row are sorted
  return v;
}

std::vector<Vec> PolyMatrix::row_vecs() const {
  std::vector<Vec> out(rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [row, f] : cols_[j])
      for (const auto& t : f.terms()) out[row].terms.push_back({t.mon, static_cast<std::uint32_t>(j), t.coeff});
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  std::vector<Column> cols(rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [row, f] : cols_[j]) cols[row].emplace_back(j, f);
  return PolyMatrix(ring_, cols_.size(), std::move(cols));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix dimensions do not match");
  PolyMatrix out(a.ring_, a.rows_, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::map<std::size_t, Polynomial> acc;
    for (const auto& [k, f] : b.cols_[j]) {
      for (const auto& [i, g] : a.cols_[k]) {
        auto it = acc.try_emplace(i, Polynomial(a.ring_)).first;
        it->second += g * f;
      }
    }
    for (auto& [i, f] : acc)
      if (!f.is_zero()) out.cols_[j].emplace_back(i, std::move(f));
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

std::optional<std::pair<std::size_t, std::size_t>> PolyMatrix::find_unit() const {
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [row, f] : cols_[j])
      if (f.is_constant()) return std::make_pair(row, j);
  return std::nullopt;
}

void PolyMatrix::erase_row(std::size_t i) {
  for (auto& col : cols_) {
    Column next;
    next.reserve(col.size());
    for (auto& [row, f] : col) {
      if (row == i) continue;
      next.emplace_back(row > i ? row - 1 : row, std::move(f));
    }
    col = std::move(next);
  }
  --rows_;
}

void PolyMatrix::erase_column(std::size_t j) { cols_.erase(cols_.begin() + static_cast<std::ptrdiff_t>(j)); }

void PolyMatrix::add_column_multiple(std::size_t c, std::size_t b, const Polynomial& f) {
  if (f.is_zero()) return;
  std::map<std::size_t, Polynomial> acc;
  for (auto& [row, g] : cols_[c]) acc.emplace(row, std::move(g));
  for (const auto& [row, g] : cols_[b]) {
    auto it = acc.try_emplace(row, Polynomial(ring_)).first;
    it->second += f * g;
  }
  Column next;
  for (auto& [row, g] : acc)
    if (!g.is_zero()) next.emplace_back(row, std::move(g));
  cols_[c] = std::move(next);
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_.size(); ++j) os << (j ? ", " : "") << entry(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ModulePresentation

ModulePresentation::ModulePresentation(RingPtr ring, std::vector<int> gen_degrees, std::vector<Vec> relations)
    : ring_(std::move(ring)), gen_degrees_(std::move(gen_degrees)) {
  FreeModule F(ring_, gen_degrees_);
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    for (const auto& t : r.terms)
      if (t.comp >= F.rank()) throw PreconditionError("relation component out of range");
    if (!vec::is_homogeneous(F, r)) throw PreconditionError("relation is not homogeneous: " + vec::to_string(F, r));
    relations_.push_back(std::move(r));
  }
}

ModulePresentation ModulePresentation::cyclic(const IdealPresentation& I) {
  if (!I.is_homogeneous()) throw PreconditionError("ideal is not homogeneous");
  std::vector<Vec> rels;
  for (const auto& g : I.generators()) rels.push_back(vec::embed(g, 0));
  ModulePresentation M(I.ring(), {0}, std::move(rels));
  M.cyclic_ = I;
  return M;
}

ModulePresentation ModulePresentation::free(const RingPtr& ring, std::vector<int> gen_degrees) {
  return ModulePresentation(ring, std::move(gen_degrees), {});
}

PolyMatrix ModulePresentation::relation_matrix() const { return PolyMatrix::from_columns(free_module(), relations_); }

ModulePresentation ModulePresentation::minimized() const {
  const FreeModule F = free_module();
  const auto& K = ring_->field();
  std::vector<Vec> rels = relations_;
  std::vector<bool> alive(gen_degrees_.size(), true);
  bool changed = false;
  for (;;) {
    std::size_t ri = rels.size();
    const VTerm* pivot = nullptr;
    for (std::size_t k = 0; k < rels.size() && !pivot; ++k) {
      for (const auto& t : rels[k].terms) {
        if (t.mon.is_one()) {
          ri = k;
          pivot = &t;
          break;
        }
      }
    }
    if (!pivot) break;
    changed = true;
    const std::uint32_t comp = pivot->comp;
    const Coeff uinv = K.inv(pivot->coeff);
    Vec r = std::move(rels[ri]);
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(ri));
    for (auto& s : rels) {
      Polynomial c = vec::component(F, s, comp);
      if (c.is_zero()) continue;
      s = vec::sub(F, s, vec::times(F, r, c.scaled(uinv)));
    }
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Vec& v) { return v.is_zero(); }), rels.end());
    alive[comp] = false;
  }
  if (!changed) return *this;
  std::vector<std::uint32_t> newidx(gen_degrees_.size(), 0);
  std::vector<int> degs;
  for (std::size_t i = 0; i < gen_degrees_.size(); ++i) {
    if (!alive[i]) continue;
    newidx[i] = static_cast<std::uint32_t>(degs.size());
    degs.push_back(gen_degrees_[i]);
  }
  for (auto& r : rels)
    for (auto& t : r.terms) t.comp = newidx[t.comp];
  ModulePresentation out(ring_, std::move(degs), std::move(rels));
  return out;
}

bool ModulePresentation::is_zero() const { return minimized().num_generators() == 0; }

std::string ModulePresentation::to_string() const {
  std::ostringstream os;
  os << "coker on " << gen_degrees_.size() << " generators, degrees [";
  for (std::size_t i = 0; i < gen_degrees_.size(); ++i) os << (i ? "," : "") << gen_degrees_[i];
  os << "], relations:";
  const FreeModule F = free_module();
  for (const auto& r : relations_) os << "\n  " << vec::to_string(F, r);
  return os.str();
}

ModulePresentation subquotient_presentation(const IdealPresentation& A, const IdealPresentation& B) {
  const auto& ring = A.ring();
  if (!same_ring(ring, B.ring())) throw PreconditionError("mismatched ambient rings");
  if (!A.is_homogeneous() || !B.is_homogeneous()) throw PreconditionError("subquotient needs homogeneous ideals");
  GroebnerBasis gbA = groebner(A);
  for (const auto& b : B.generators())
    if (!gbA.contains(b)) throw PreconditionError("containment violation: " + b.to_string() + " is not in the numerator ideal");
  const auto& ga = gbA.elements();
  std::vector<Polynomial> all = ga;
  all.insert(all.end(), B.generators().begin(), B.generators().end());
  ModuleGB syz = syzygies(all, ring);
  const auto r = static_cast<std::uint32_t>(ga.size());
  std::vector<Vec> rels;
  for (const auto& s : syz.elements()) {
    Vec v = vec::restrict_components(s, 0, r);
    if (!v.is_zero()) rels.push_back(std::move(v));
  }
  std::vector<int> degs;
  for (const auto& g : ga) degs.push_back(g.degree());
  return ModulePresentation(ring, std::move(degs), std::move(rels)).minimized();
}

IdealPresentation generator_annihilator(const ModulePresentation& M, std::size_t i) {
  const FreeModule F = M.free_module();
  std::vector<Vec> gens{vec::unit(static_cast<std::uint32_t>(i))};
  gens.insert(gens.end(), M.relations().begin(), M.relations().end());
  ModuleGB syz = syzygies(F, gens);
  std::vector<Polynomial> out;
  for (const auto& s : syz.elements()) {
    Polynomial c = vec::component(syz.module(), s, 0);
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  return groebner(IdealPresentation(M.ring(), std::move(out))).presentation();
}

IdealPresentation annihilator(const ModulePresentation& M) {
  if (M.cyclic_ideal()) return groebner(*M.cyclic_ideal()).presentation();
  IdealPresentation acc = IdealPresentation::unit(M.ring());
  for (std::size_t i = 0; i < M.num_generators(); ++i) {
    acc = intersect(acc, generator_annihilator(M, i));
    if (acc.is_zero()) break;
  }
  return acc;
}

}  // namespace irlab
