#include "irlab/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "irlab/errors.hpp"

namespace irlab {

namespace {
std::atomic<std::uint64_t> g_budget{kDefaultSpairBudget};
}  // namespace

std::uint64_t spair_budget() { return g_budget.load(); }
void set_spair_budget(std::uint64_t budget) { g_budget.store(budget); }

// ---------------------------------------------------------------------------
// ModuleGB

ModuleGB::ModuleGB(FreeModule module, std::vector<Vec> elements, std::optional<int> truncated_at, GbStats stats)
    : module_(std::move(module)), elements_(std::move(elements)), by_comp_(module_.rank()),
      truncated_at_(truncated_at), stats_(stats) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& l = elements_[i].lead();
    by_comp_[l.comp].push_back({Lead{l.mon, l.mon.support_mask()}, i});
  }
}

std::optional<std::size_t> ModuleGB::find_divisor(const Monomial& mon, std::uint32_t comp) const {
  std::uint32_t mask = mon.support_mask();
  for (const auto& [lead, idx] : by_comp_[comp]) {
    if ((lead.mask & ~mask) == 0 && lead.mon.divides(mon)) return idx;
  }
  return std::nullopt;
}

namespace {

/// Full reduction of `v` by the elements reachable through `find`.
template <typename Find>
Vec full_reduce(const FreeModule& F, Vec work, const std::vector<Vec>& polys, Find&& find) {
  const auto& K = F.ring()->field();
  Vec rem;
  std::size_t pos = 0;
  while (pos < work.terms.size()) {
    const VTerm t = work.terms[pos];
    auto d = find(t.mon, t.comp);
    if (!d) {
      rem.terms.push_back(t);
      ++pos;
      continue;
    }
    const Vec& g = polys[*d];
    Coeff c = K.div(t.coeff, g.lead().coeff);
    Monomial u = t.mon / g.lead().mon;
    Vec tail;
    tail.terms.assign(work.terms.begin() + static_cast<std::ptrdiff_t>(pos), work.terms.end());
    work = vec::sub_multiple(F, tail, g, u, c);
    pos = 0;
  }
  return rem;
}

}  // namespace

Vec ModuleGB::normal_form(const Vec& v) const {
  return full_reduce(module_, v, elements_,
                     [this](const Monomial& m, std::uint32_t c) { return find_divisor(m, c); });
}

bool ModuleGB::is_whole_module() const {
  for (std::uint32_t c = 0; c < module_.rank(); ++c)
    if (!find_divisor(Monomial(), c)) return false;
  return true;
}

std::vector<Monomial> ModuleGB::leading_monomials(std::uint32_t comp) const {
  std::vector<Monomial> out;
  for (const auto& [lead, idx] : by_comp_[comp]) out.push_back(lead.mon);
  return out;
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Item {
  std::size_t i;
  std::size_t j;  // kNone for an input generator
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
};

class Engine {
 public:
  Engine(const FreeModule& F, const GbOptions& opt) : F_(F), opt_(opt), index_(F.rank()) {}

  ModuleGB run(const std::vector<Vec>& gens) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].is_zero()) continue;
      queue_.push_back({g, kNone, gens[g].lead().mon, gens[g].lead().comp, vec::degree(F_, gens[g])});
    }
    const std::uint64_t budget = spair_budget();
    while (!queue_.empty()) {
      std::size_t best = select();
      Item it = queue_[best];
      queue_[best] = queue_.back();
      queue_.pop_back();
      if (opt_.degree_bound && it.sugar > *opt_.degree_bound) {
        truncated_ = true;
        ++stats_.pairs_skipped;
        continue;
      }
      Vec h;
      int sugar = it.sugar;
      if (it.j == kNone) {
        h = gens[it.i];
      } else {
        if (++stats_.pairs_processed > budget)
          throw ResourceError("Groebner S-pair budget of " + std::to_string(budget) + " exceeded");
        h = spoly(it);
      }
      h = top_reduce(std::move(h), sugar);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      h = vec::monic(F_, h);
      insert(std::move(h), sugar);
    }
    return finish();
  }

 private:
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue_.size(); ++k) {
      const Item& a = queue_[k];
      const Item& b = queue_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      if (F_.compare(a.lcm, a.comp, b.lcm, b.comp) < 0) best = k;
    }
    return best;
  }

  Vec spoly(const Item& it) const {
    const Vec& f = polys_[it.i];
    const Vec& g = polys_[it.j];
    Monomial uf = it.lcm / f.lead().mon;
    Monomial ug = it.lcm / g.lead().mon;
    Vec a = vec::times_monomial(F_, f, uf, 1);
    return vec::sub_multiple(F_, a, g, ug, 1);
  }

  std::optional<std::size_t> find(const Monomial& mon, std::uint32_t comp) const {
    std::uint32_t mask = mon.support_mask();
    for (const auto& [lmask, idx] : index_[comp]) {
      if ((lmask & ~mask) == 0 && polys_[idx].lead().mon.divides(mon)) return idx;
    }
    return std::nullopt;
  }

  Vec top_reduce(Vec h, int& sugar) const {
    const auto& K = F_.ring()->field();
    while (!h.is_zero()) {
      const VTerm& t = h.lead();
      auto d = find(t.mon, t.comp);
      if (!d) break;
      const Vec& g = polys_[*d];
      Monomial u = t.mon / g.lead().mon;
      sugar = std::max(sugar, sugar_[*d] + u.degree());
      h = vec::sub_multiple(F_, h, g, u, K.div(t.coeff, g.lead().coeff));
    }
    return h;
  }

  void insert(Vec h, int sugar) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    const Vec& hv = polys_[hi];
    const Monomial& lh = hv.lead().mon;
    const std::uint32_t comp = hv.lead().comp;
    const bool use_coprime = F_.rank() == 1;

    // candidate pairs (h, g) for active g in the same component
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> cands;
    for (const auto& [mask, g] : index_[comp]) {
      const Monomial& lg = polys_[g].lead().mon;
      cands.push_back({g, Monomial::lcm(lh, lg), use_coprime && lh.coprime(lg), true});
    }
    // criterion M: drop if another lcm properly divides this one
    for (auto& a : cands) {
      for (const auto& b : cands) {
        if (&a == &b) continue;
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.keep = false;
          break;
        }
      }
    }
    // criterion F and the product criterion, per group of equal lcm
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      bool any_coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
          any_coprime = any_coprime || cands[b].coprime;
          cands[b].keep = false;
        }
      }
      if (any_coprime) cands[a].keep = false;
    }
    // chain criterion on existing pairs
    std::vector<Item> kept;
    kept.reserve(queue_.size() + cands.size());
    for (auto& it : queue_) {
      if (it.j != kNone && it.comp == comp && lh.divides(it.lcm)) {
        Monomial l1 = Monomial::lcm(polys_[it.i].lead().mon, lh);
        Monomial l2 = Monomial::lcm(polys_[it.j].lead().mon, lh);
        if (!(l1 == it.lcm) && !(l2 == it.lcm)) {
          ++stats_.pairs_skipped;
          continue;
        }
      }
      kept.push_back(std::move(it));
    }
    for (const auto& c : cands) {
      if (!c.keep) {
        ++stats_.pairs_skipped;
        continue;
      }
      const Monomial& lg = polys_[c.g].lead().mon;
      int s = std::max(sugar + (c.lcm.degree() - lh.degree()), sugar_[c.g] + (c.lcm.degree() - lg.degree()));
      kept.push_back({c.g, hi, c.lcm, comp, s});
    }
    queue_ = std::move(kept);
    // active set: drop elements whose lead is a multiple of lm(h)
    auto& bucket = index_[comp];
    bucket.erase(std::remove_if(bucket.begin(), bucket.end(),
                                [&](const auto& e) { return lh.divides(polys_[e.second].lead().mon); }),
                 bucket.end());
    bucket.push_back({lh.support_mask(), hi});
  }

  ModuleGB finish() {
    std::vector<std::size_t> active;
    for (const auto& bucket : index_)
      for (const auto& [mask, idx] : bucket) active.push_back(idx);
    std::vector<Vec> out;
    out.reserve(active.size());
    for (std::size_t idx : active) {
      // the lead of an active element has no other active divisor; reduce the tail
      const Vec& p = polys_[idx];
      Vec tail;
      tail.terms.assign(p.terms.begin() + 1, p.terms.end());
      Vec r = full_reduce(F_, std::move(tail), polys_,
                          [this](const Monomial& m, std::uint32_t c) { return find(m, c); });
      r.terms.insert(r.terms.begin(), p.lead());
      out.push_back(vec::monic(F_, r));
    }
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
      return F_.compare(a.lead().mon, a.lead().comp, b.lead().mon, b.lead().comp) > 0;
    });
    std::optional<int> trunc;
    if (opt_.degree_bound) trunc = *opt_.degree_bound;
    return ModuleGB(F_, std::move(out), truncated_ ? trunc : std::nullopt, stats_);
  }

  const FreeModule& F_;
  const GbOptions& opt_;
  std::vector<Vec> polys_;
  std::vector<int> sugar_;
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> index_;
  std::vector<Item> queue_;
  GbStats stats_;
  bool truncated_ = false;
};

}  // namespace

ModuleGB groebner_basis(const FreeModule& F, const std::vector<Vec>& gens, const GbOptions& options) {
  Engine engine(F, options);
  return engine.run(gens);
}

bool verify_groebner(const ModuleGB& gb, const std::vector<Vec>& gens) {
  const auto& F = gb.module();
  for (const auto& g : gens)
    if (!gb.contains(g)) return false;
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (el[i].lead().comp != el[j].lead().comp) continue;
      Monomial l = Monomial::lcm(el[i].lead().mon, el[j].lead().mon);
      Vec a = vec::times_monomial(F, el[i], l / el[i].lead().mon, 1);
      Vec s = vec::sub_multiple(F, a, el[j], l / el[j].lead().mon, 1);
      if (!gb.contains(s)) return false;
    }
  }
  return true;
}

}  // namespace irlab
