#include "irlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "irlab/errors.hpp"

namespace irlab {

namespace {

/// Sorts descending and merges equal monomials, dropping zeros.
std::vector<Term> canonicalize(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mon, b.mon) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  const auto& F = ring.field();
  for (auto& t : terms) {
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (auto& t : terms) t.coeff %= ring_->field().characteristic();
  terms_ = canonicalize(*ring_, std::move(terms));
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Coeff v = ring->field().from_int(c);
  Polynomial p(std::move(ring));
  if (v) p.terms_.push_back({Monomial(), v});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  c %= p.ring_->field().characteristic();
  if (c) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw PreconditionError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index));
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mon.degree() != terms_.front().mon.degree()) return false;
  return true;
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

int Polynomial::low_degree() const noexcept {
  if (terms_.empty()) return -1;
  int d = terms_.front().mon.degree();
  for (const auto& t : terms_) d = std::min(d, t.mon.degree());
  return d;
}

void Polynomial::check_same_ring(const Polynomial& b) const {
  if (!same_ring(ring_, b.ring_)) throw PreconditionError("mismatched ambient rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  const Ring& R = *a.ring();
  const auto& F = R.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    int c = ia == ea ? -1 : ib == eb ? 1 : R.compare(ia->mon, ib->mon);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->mon, subtract ? F.neg(ib->coeff) : ib->coeff});
      ++ib;
    } else {
      Coeff v = subtract ? F.sub(ia->coeff, ib->coeff) : F.add(ia->coeff, ib->coeff);
      if (v) out.push_back({ia->mon, v});
      ++ia;
      ++ib;
    }
  }
  return Polynomial(a.ring(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  return merge(a, b, false);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  return merge(a, b, true);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  const auto& F = a.ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto& slot = acc[s.mon * t.mon];
      slot = F.add(slot, F.mul(s.coeff, t.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) terms.push_back({m, c});
  return Polynomial(a.ring_, std::move(terms));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(ring_);
  c %= ring_->field().characteristic();
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, Coeff c) const {
  Polynomial r(ring_);
  c %= ring_->field().characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the order of terms
  for (const auto& t : terms_) r.terms_.push_back({t.mon * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->nvars() != ring_->nvars() || !(target->field() == ring_->field()))
    throw PreconditionError("in_ring: incompatible rings");
  return Polynomial(target, terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mon == b.terms_[i].mon) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& F = ring_->field();
  bool first = true;
  for (const auto& t : terms_) {
    long long c = F.to_signed(t.coeff);
    bool negative = c < 0;
    unsigned long long mag = negative ? static_cast<unsigned long long>(-c) : static_cast<unsigned long long>(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mon.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += monomial_to_string(t.mon, *ring_);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected exponent", pos_);
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (e > 0xffff) throw ParseError("exponent too large", start);
        ++pos_;
      }
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto p = ring_->field().characteristic();
      unsigned long long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + static_cast<unsigned>(s_[pos_] - '0')) % p;
        ++pos_;
      }
      return Polynomial::constant(ring_, static_cast<long long>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_->variable_index(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

}  // namespace irlab
