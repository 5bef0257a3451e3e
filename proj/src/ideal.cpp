#include "irlab/ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "irlab/errors.hpp"

namespace irlab {

// ---------------------------------------------------------------------------
// IdealPresentation

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring_)) throw PreconditionError("ideal generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

IdealPresentation IdealPresentation::parse(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  polys.reserve(gens.size());
  for (const auto& s : gens) polys.push_back(parse_polynomial(s, ring));
  return IdealPresentation(ring, std::move(polys));
}

IdealPresentation IdealPresentation::unit(const RingPtr& ring) {
  return IdealPresentation(ring, {Polynomial::constant(ring, 1)});
}

IdealPresentation IdealPresentation::maximal(const RingPtr& ring) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
  return IdealPresentation(ring, std::move(v));
}

bool IdealPresentation::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool IdealPresentation::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::vector<std::string> IdealPresentation::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(ModuleGB gb) : gb_(std::move(gb)) {
  if (gb_.module().rank() != 1) throw PreconditionError("GroebnerBasis needs a rank-one module basis");
  for (const auto& e : gb_.elements()) {
    elements_.push_back(vec::component(gb_.module(), e, 0));
    initial_.push_back(e.lead().mon);
  }
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring())) throw PreconditionError("normal_form: mismatched rings");
  return vec::component(gb_.module(), gb_.normal_form(vec::embed(f, 0)), 0);
}

bool GroebnerBasis::contains(const IdealPresentation& I) const {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [this](const Polynomial& g) { return contains(g); });
}

IdealPresentation GroebnerBasis::presentation() const { return IdealPresentation(ring(), elements_); }

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring, const GbOptions& opt) {
  FreeModule F = FreeModule::rank(ring, 1);
  std::vector<Vec> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw PreconditionError("buchberger: generators from different rings");
    vs.push_back(vec::embed(g, 0));
  }
  return GroebnerBasis(groebner_basis(F, vs, opt));
}

GroebnerBasis groebner(const IdealPresentation& I, const GbOptions& opt) {
  return buchberger(I.generators(), I.ring(), opt);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

// ---------------------------------------------------------------------------
// ideal operations

namespace {

void check_common(const IdealPresentation& A, const IdealPresentation& B) {
  if (!same_ring(A.ring(), B.ring())) throw PreconditionError("ideal operation on different rings");
}

/// Ring with an extra leading variable, eliminated first.
RingPtr elimination_ring(const RingPtr& ring) {
  std::string name = "_t";
  while (ring->variable_index(name)) name += "_";
  std::vector<std::string> vars{name};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  return std::make_shared<const Ring>(ring->field(), std::move(vars), MonomialOrder::elimination(1));
}

Polynomial lift(const Polynomial& f, const RingPtr& target) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i + 1 < target->nvars(); ++i) m.set(i + 1, t.mon[i]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial drop_first(const Polynomial& f, const RingPtr& target) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < target->nvars(); ++i) m.set(i, t.mon[i + 1]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace

IdealPresentation ideal_sum(const IdealPresentation& A, const IdealPresentation& B) {
  check_common(A, B);
  std::vector<Polynomial> g = A.generators();
  g.insert(g.end(), B.generators().begin(), B.generators().end());
  return groebner(IdealPresentation(A.ring(), std::move(g))).presentation();
}

IdealPresentation ideal_product(const IdealPresentation& A, const IdealPresentation& B) {
  check_common(A, B);
  std::vector<Polynomial> g;
  for (const auto& a : A.generators())
    for (const auto& b : B.generators()) g.push_back(a * b);
  return groebner(IdealPresentation(A.ring(), std::move(g))).presentation();
}

IdealPresentation intersect(const IdealPresentation& A, const IdealPresentation& B) {
  check_common(A, B);
  if (A.is_zero() || B.is_zero()) return IdealPresentation(A.ring());
  RingPtr T = elimination_ring(A.ring());
  Polynomial t = Polynomial::variable(T, 0);
  Polynomial one_minus_t = Polynomial::constant(T, 1) - t;
  std::vector<Polynomial> g;
  for (const auto& a : A.generators()) g.push_back(t * lift(a, T));
  for (const auto& b : B.generators()) g.push_back(one_minus_t * lift(b, T));
  GroebnerBasis gb = buchberger(g, T);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) {
    bool has_t = std::any_of(e.terms().begin(), e.terms().end(), [](const Term& tm) { return tm.mon[0] != 0; });
    if (!has_t) out.push_back(drop_first(e, A.ring()));
  }
  return groebner(IdealPresentation(A.ring(), std::move(out))).presentation();
}

IdealPresentation intersect_by_syzygies(const IdealPresentation& A, const IdealPresentation& B) {
  check_common(A, B);
  const auto& ring = A.ring();
  std::vector<Polynomial> g = A.generators();
  g.insert(g.end(), B.generators().begin(), B.generators().end());
  ModuleGB syz = syzygies(g, ring);
  const std::size_t k = A.generators().size();
  std::vector<Polynomial> out;
  for (const auto& s : syz.elements()) {
    auto comps = vec::to_polys(syz.module(), s);
    Polynomial acc(ring);
    for (std::size_t i = 0; i < k; ++i) acc += comps[i] * A.generators()[i];
    out.push_back(acc);
  }
  return groebner(IdealPresentation(ring, std::move(out))).presentation();
}

namespace {

/// g / f for g a multiple of the monic f.
Polynomial exact_quotient(Polynomial g, const Polynomial& f) {
  Polynomial q(g.ring());
  while (!g.is_zero()) {
    const Term& lg = g.lead();
    if (!f.lead().mon.divides(lg.mon)) throw InternalError("colon: element is not a multiple of the divisor");
    const Monomial m = lg.mon / f.lead().mon;
    const Coeff c = lg.coeff;
    q += Polynomial::monomial(g.ring(), m, c);
    g -= f.times_monomial(m, c);
  }
  return q;
}

}  // namespace

IdealPresentation quotient(const IdealPresentation& A, const Polynomial& f) {
  const auto& ring = A.ring();
  if (f.is_zero()) return IdealPresentation::unit(ring);
  const Polynomial fm = f.monic();
  std::vector<Polynomial> out;
  const IdealPresentation meet = intersect(A, IdealPresentation(ring, {fm}));
  for (const auto& g : meet.generators()) out.push_back(exact_quotient(g, fm));
  return groebner(IdealPresentation(ring, std::move(out))).presentation();
}

IdealPresentation quotient_by_syzygies(const IdealPresentation& A, const Polynomial& f) {
  const auto& ring = A.ring();
  if (f.is_zero()) return IdealPresentation::unit(ring);
  std::vector<Polynomial> g{f};
  g.insert(g.end(), A.generators().begin(), A.generators().end());
  ModuleGB syz = syzygies(g, ring);
  std::vector<Polynomial> out;
  for (const auto& s : syz.elements()) {
    Polynomial c = vec::component(syz.module(), s, 0);
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  return groebner(IdealPresentation(ring, std::move(out))).presentation();
}

IdealPresentation quotient(const IdealPresentation& A, const IdealPresentation& B) {
  check_common(A, B);
  IdealPresentation acc = IdealPresentation::unit(A.ring());
  for (const auto& b : B.generators()) {
    acc = intersect(acc, quotient(A, b));
  }
  return acc;
}

IdealPresentation saturate(const IdealPresentation& A, const Polynomial& f) {
  IdealPresentation cur = groebner(A).presentation();
  for (;;) {
    IdealPresentation next = quotient(cur, f);
    if (ideal_equal(next, cur)) return cur;
    cur = std::move(next);
  }
}

IdealPresentation saturate(const IdealPresentation& A, const IdealPresentation& B) {
  check_common(A, B);
  IdealPresentation acc = IdealPresentation::unit(A.ring());
  for (const auto& b : B.generators()) acc = intersect(acc, saturate(A, b));
  return acc;
}

IdealPresentation ideal_power(const IdealPresentation& A, unsigned e) {
  IdealPresentation acc = IdealPresentation::unit(A.ring());
  for (unsigned i = 0; i < e; ++i) acc = ideal_product(acc, A);
  return acc;
}

IdealPresentation ideal_ops(const IdealPresentation& A, const IdealPresentation& B, IdealOp op) {
  switch (op) {
    case IdealOp::sum:
      return ideal_sum(A, B);
    case IdealOp::product:
      return ideal_product(A, B);
    case IdealOp::intersection:
      return intersect(A, B);
    case IdealOp::colon:
      return quotient(A, B);
  }
  throw PreconditionError("unknown ideal operation");
}

bool ideal_equal(const IdealPresentation& A, const IdealPresentation& B) {
  check_common(A, B);
  const auto ea = groebner(A).elements();
  const auto eb = groebner(B).elements();
  return ea == eb;
}

bool ideal_contains(const IdealPresentation& big, const IdealPresentation& small) {
  check_common(big, small);
  return groebner(big).contains(small);
}

// ---------------------------------------------------------------------------
// dimension and standard monomials

int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return -1;
  std::vector<std::uint32_t> masks;
  masks.reserve(gens.size());
  for (const auto& g : gens) masks.push_back(g.support_mask());
  int best = 0;
  const std::uint32_t full = nvars == 32 ? ~0u : ((1u << nvars) - 1);
  for (std::uint32_t u = 0; u <= full; ++u) {
    int size = std::popcount(u);
    if (size <= best) continue;
    bool independent = std::all_of(masks.begin(), masks.end(), [u](std::uint32_t m) { return (m & ~u) != 0; });
    if (independent) best = size;
    if (u == full) break;
  }
  return best;
}

int krull_dimension(const GroebnerBasis& gb) {
  return monomial_ideal_dimension(gb.initial_ideal(), gb.ring()->nvars());
}

int krull_dimension(const IdealPresentation& I) { return krull_dimension(groebner(I)); }

bool is_artinian(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->nvars();
  std::vector<bool> has_power(n, false);
  for (const auto& m : gb.initial_ideal()) {
    if (m.is_one()) return true;
    std::uint32_t mask = m.support_mask();
    if (std::popcount(mask) == 1) has_power[static_cast<std::size_t>(std::countr_zero(mask))] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::optional<int> degree_bound) {
  if (!degree_bound && !is_artinian(gb)) throw NotArtinian("quotient ring is not Artinian");
  const auto& ring = *gb.ring();
  const auto& init = gb.initial_ideal();
  auto in_initial = [&](const Monomial& m) {
    return std::any_of(init.begin(), init.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  std::vector<Monomial> out;
  if (in_initial(Monomial())) return out;
  std::vector<Monomial> layer{Monomial()};
  int d = 0;
  while (!layer.empty()) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (degree_bound && d >= *degree_bound) break;
    std::set<std::vector<int>> seen;
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      for (std::size_t i = 0; i < ring.nvars(); ++i) {
        Monomial c = m * Monomial::variable(i);
        if (in_initial(c)) continue;
        std::vector<int> key(ring.nvars());
        for (std::size_t k = 0; k < ring.nvars(); ++k) key[k] = c[k];
        if (seen.insert(key).second) next.push_back(c);
      }
    }
    layer = std::move(next);
    ++d;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) < 0; });
  return out;
}

std::vector<Monomial> standard_monomials(const IdealPresentation& I, std::optional<int> degree_bound) {
  return standard_monomials(groebner(I), degree_bound);
}

// ---------------------------------------------------------------------------
// syzygies

ModuleGB syzygies(const FreeModule& F, const std::vector<Vec>& gens, const std::vector<int>& gen_degrees) {
  const std::size_t r = F.rank();
  const std::size_t m = gens.size();
  FreeModule target(F.ring(), gen_degrees);
  FreeModule ext = F.direct_sum(target);
  std::vector<Vec> lifted;
  lifted.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec v = gens[i];
    v.terms.push_back({Monomial(), static_cast<std::uint32_t>(r + i), 1});
    lifted.push_back(std::move(v));
  }
  ModuleGB gb = groebner_basis(ext, lifted);
  std::vector<Vec> syz;
  for (const auto& e : gb.elements()) {
    if (e.lead().comp >= r)
      syz.push_back(vec::restrict_components(e, static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r + m)));
  }
  return ModuleGB(target, std::move(syz), std::nullopt, gb.stats());
}

ModuleGB syzygies(const FreeModule& F, const std::vector<Vec>& gens) {
  std::vector<int> degs;
  degs.reserve(gens.size());
  for (const auto& g : gens) degs.push_back(g.is_zero() ? 0 : vec::degree(F, g));
  return syzygies(F, gens, degs);
}

ModuleGB syzygies(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  FreeModule F = FreeModule::rank(ring, 1);
  std::vector<Vec> vs;
  for (const auto& g : gens) vs.push_back(vec::embed(g, 0));
  return syzygies(F, vs);
}

}  // namespace irlab
