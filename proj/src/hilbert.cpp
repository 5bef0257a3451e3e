#include "irlab/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace irlab {

namespace {

using Numer = std::map<int, long long>;

void add_into(Numer& acc, const Numer& x, int shift, long long sign) {
  for (const auto& [e, c] : x) acc[e + shift] += sign * c;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// Numerator of the Hilbert series of S/J, J = (gens), by pivoting on a
/// variable power: N(J) = N(J + (p)) + t^deg(p) N(J : p).
Numer monomial_numerator(std::vector<Monomial> gens) {
  gens = minimal_generators(std::move(gens));
  if (gens.empty()) return {{0, 1}};
  if (gens.front().is_one()) return {};
  // pairwise coprime generators form a regular sequence
  std::size_t best_var = 0, best_count = 0;
  int counts[kMaxVars] = {};
  for (const auto& g : gens)
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (g[v]) ++counts[v];
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (static_cast<std::size_t>(counts[v]) > best_count) {
      best_count = static_cast<std::size_t>(counts[v]);
      best_var = v;
    }
  }
  if (best_count <= 1) {
    Numer acc{{0, 1}};
    for (const auto& g : gens) {
      Numer next;
      add_into(next, acc, 0, 1);
      add_into(next, acc, g.degree(), -1);
      acc = std::move(next);
    }
    return acc;
  }
  unsigned e = ~0u;
  for (const auto& g : gens)
    if (g[best_var]) e = std::min<unsigned>(e, g[best_var]);
  Monomial p = Monomial::variable(best_var, e);
  std::vector<Monomial> plus{p};
  for (const auto& g : gens)
    if (!p.divides(g)) plus.push_back(g);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g / Monomial::gcd(g, p));
  Numer out = monomial_numerator(std::move(plus));
  add_into(out, monomial_numerator(std::move(colon)), static_cast<int>(e), 1);
  return out;
}

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HilbertSeries::HilbertSeries(std::size_t nvars, std::map<int, long long> numerator)
    : nvars_(nvars), num_(std::move(numerator)) {
  normalize();
}

void HilbertSeries::normalize() {
  for (auto it = num_.begin(); it != num_.end();) it = it->second == 0 ? num_.erase(it) : std::next(it);
}

HilbertSeries HilbertSeries::of_monomial_quotient(const std::vector<Monomial>& gens, std::size_t nvars, int shift) {
  Numer n;
  add_into(n, monomial_numerator(gens), shift, 1);
  return HilbertSeries(nvars, std::move(n));
}

HilbertSeries HilbertSeries::of_quotient(const ModuleGB& gb) {
  const auto& F = gb.module();
  HilbertSeries out(F.ring()->nvars());
  for (std::uint32_t c = 0; c < F.rank(); ++c)
    out += of_monomial_quotient(gb.leading_monomials(c), F.ring()->nvars(), F.shift(c));
  return out;
}

HilbertSeries HilbertSeries::of_free(std::size_t nvars, const std::vector<int>& degrees) {
  Numer n;
  for (int d : degrees) n[d] += 1;
  return HilbertSeries(nvars, std::move(n));
}

long long HilbertSeries::value(int degree) const {
  long long v = 0;
  for (const auto& [e, c] : num_) {
    if (degree < e) continue;
    if (nvars_ == 0)
      v += degree == e ? c : 0;
    else
      v += c * binom(degree - e + static_cast<long long>(nvars_) - 1, static_cast<long long>(nvars_) - 1);
  }
  return v;
}

std::vector<long long> HilbertSeries::reduced(int& low, int& cancelled) const {
  cancelled = 0;
  low = num_.empty() ? 0 : num_.begin()->first;
  std::vector<long long> coef;
  if (num_.empty()) return coef;
  coef.assign(static_cast<std::size_t>(num_.rbegin()->first - low + 1), 0);
  for (const auto& [e, c] : num_) coef[static_cast<std::size_t>(e - low)] = c;
  while (coef.size() > 1) {
    long long s = 0;
    for (long long c : coef) s += c;
    if (s != 0) break;
    // divide by (1 - t): q_k = sum_{i<=k} n_i
    std::vector<long long> q(coef.size() - 1);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < coef.size(); ++k) {
      run += coef[k];
      q[k] = run;
    }
    coef = std::move(q);
    ++cancelled;
  }
  return coef;
}

int HilbertSeries::dimension() const {
  if (num_.empty()) return -1;
  int low = 0, cancelled = 0;
  reduced(low, cancelled);
  return static_cast<int>(nvars_) - cancelled;
}

long long HilbertSeries::multiplicity() const {
  int low = 0, cancelled = 0;
  long long s = 0;
  for (long long c : reduced(low, cancelled)) s += c;
  return s;
}

HilbertSeries& HilbertSeries::operator+=(const HilbertSeries& o) {
  add_into(num_, o.num_, 0, 1);
  normalize();
  return *this;
}

HilbertSeries& HilbertSeries::operator-=(const HilbertSeries& o) {
  add_into(num_, o.num_, 0, -1);
  normalize();
  return *this;
}

HilbertSeries HilbertSeries::shifted(int by) const {
  Numer n;
  add_into(n, num_, by, 1);
  return HilbertSeries(nvars_, std::move(n));
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  if (num_.empty()) return "0";
  os << "(";
  bool first = true;
  for (const auto& [e, c] : num_) {
    long long a = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  os << ")/(1-t)^" << nvars_;
  return os.str();
}

}  // namespace irlab
