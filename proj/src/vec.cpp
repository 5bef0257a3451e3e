#include "irlab/vec.hpp"

#include <algorithm>
#include <limits>

#include "irlab/errors.hpp"

namespace irlab {

FreeModule FreeModule::direct_sum(const FreeModule& other) const {
  if (!same_ring(ring_, other.ring_)) throw PreconditionError("direct sum over different rings");
  std::vector<int> s = shifts_;
  s.insert(s.end(), other.shifts_.begin(), other.shifts_.end());
  return FreeModule(ring_, std::move(s));
}

namespace vec {

Vec from_terms(const FreeModule& F, std::vector<VTerm> terms) {
  const auto& K = F.ring()->field();
  std::sort(terms.begin(), terms.end(),
            [&](const VTerm& a, const VTerm& b) { return F.compare(a.mon, a.comp, b.mon, b.comp) > 0; });
  Vec out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    t.coeff %= K.characteristic();
    if (!out.terms.empty() && out.terms.back().comp == t.comp && out.terms.back().mon == t.mon) {
      out.terms.back().coeff = K.add(out.terms.back().coeff, t.coeff);
    } else {
      if (!out.terms.empty() && out.terms.back().coeff == 0) out.terms.pop_back();
      out.terms.push_back(t);
    }
  }
  if (!out.terms.empty() && out.terms.back().coeff == 0) out.terms.pop_back();
  return out;
}

Vec unit(std::uint32_t comp) {
  Vec v;
  v.terms.push_back({Monomial(), comp, 1});
  return v;
}

Vec embed(const Polynomial& f, std::uint32_t comp) {
  Vec v;
  v.terms.reserve(f.size());
  for (const auto& t : f.terms()) v.terms.push_back({t.mon, comp, t.coeff});
  return v;
}

Vec from_polys(const std::vector<Polynomial>& polys) {
  // POT: component 0 first, each block already sorted
  Vec v;
  for (std::uint32_t i = 0; i < polys.size(); ++i)
    for (const auto& t : polys[i].terms()) v.terms.push_back({t.mon, i, t.coeff});
  return v;
}

std::vector<Polynomial> to_polys(const FreeModule& F, const Vec& v) {
  std::vector<std::vector<Term>> parts(F.rank());
  for (const auto& t : v.terms) parts[t.comp].push_back({t.mon, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(F.rank());
  for (auto& p : parts) out.emplace_back(F.ring(), std::move(p));
  return out;
}

Polynomial component(const FreeModule& F, const Vec& v, std::uint32_t comp) {
  std::vector<Term> part;
  for (const auto& t : v.terms)
    if (t.comp == comp) part.push_back({t.mon, t.coeff});
  return Polynomial(F.ring(), std::move(part));
}

namespace {

template <typename BTransform>
Vec merge(const FreeModule& F, const Vec& a, const Vec& b, BTransform&& tb) {
  const auto& K = F.ring()->field();
  Vec out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  const std::size_t na = a.terms.size(), nb = b.terms.size();
  while (i < na && j < nb) {
    VTerm y = tb(b.terms[j]);
    const VTerm& x = a.terms[i];
    int c = F.compare(x.mon, x.comp, y.mon, y.comp);
    if (c > 0) {
      out.terms.push_back(x);
      ++i;
    } else if (c < 0) {
      if (y.coeff) out.terms.push_back(y);
      ++j;
    } else {
      Coeff s = K.add(x.coeff, y.coeff);
      if (s) out.terms.push_back({x.mon, x.comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < na; ++i) out.terms.push_back(a.terms[i]);
  for (; j < nb; ++j) {
    VTerm y = tb(b.terms[j]);
    if (y.coeff) out.terms.push_back(y);
  }
  return out;
}

}  // namespace

Vec add(const FreeModule& F, const Vec& a, const Vec& b) {
  return merge(F, a, b, [](const VTerm& t) { return t; });
}

Vec sub(const FreeModule& F, const Vec& a, const Vec& b) {
  const auto& K = F.ring()->field();
  return merge(F, a, b, [&](const VTerm& t) { return VTerm{t.mon, t.comp, K.neg(t.coeff)}; });
}

Vec scale(const FreeModule& F, const Vec& a, Coeff c) {
  const auto& K = F.ring()->field();
  Vec out;
  if (c % K.characteristic() == 0) return out;
  out.terms = a.terms;
  for (auto& t : out.terms) t.coeff = K.mul(t.coeff, c);
  return out;
}

Vec times_monomial(const FreeModule& F, const Vec& a, const Monomial& m, Coeff c) {
  const auto& K = F.ring()->field();
  Vec out;
  if (c % K.characteristic() == 0) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.mon * m, t.comp, K.mul(t.coeff, c)});
  return out;
}

Vec times(const FreeModule& F, const Vec& a, const Polynomial& f) {
  Vec acc;
  for (const auto& t : f.terms()) acc = add(F, acc, times_monomial(F, a, t.mon, t.coeff));
  return acc;
}

Vec sub_multiple(const FreeModule& F, const Vec& a, const Vec& b, const Monomial& m, Coeff c) {
  const auto& K = F.ring()->field();
  Coeff nc = K.neg(c);
  return merge(F, a, b, [&](const VTerm& t) { return VTerm{t.mon * m, t.comp, K.mul(t.coeff, nc)}; });
}

Vec monic(const FreeModule& F, const Vec& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.ring()->field().inv(a.lead().coeff));
}

int degree(const FreeModule& F, const Vec& a) {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : a.terms) d = std::max(d, F.degree(t.mon, t.comp));
  return d;
}

bool is_homogeneous(const FreeModule& F, const Vec& a) {
  if (a.is_zero()) return true;
  int d = F.degree(a.lead().mon, a.lead().comp);
  for (const auto& t : a.terms)
    if (F.degree(t.mon, t.comp) != d) return false;
  return true;
}

Vec shift_components(const Vec& a, std::int64_t offset) {
  Vec out = a;
  for (auto& t : out.terms) t.comp = static_cast<std::uint32_t>(t.comp + offset);
  return out;
}

Vec restrict_components(const Vec& a, std::uint32_t lo, std::uint32_t hi) {
  Vec out;
  for (const auto& t : a.terms)
    if (t.comp >= lo && t.comp < hi) out.terms.push_back({t.mon, t.comp - lo, t.coeff});
  return out;
}

std::string to_string(const FreeModule& F, const Vec& v) {
  auto polys = to_polys(F, v);
  std::string s = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].to_string();
  }
  return s + ")";
}

}  // namespace vec
}  // namespace irlab
