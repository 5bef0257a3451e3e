#include "irlab/field.hpp"

#include <stdexcept>
#include <string>

#include "irlab/errors.hpp"

namespace irlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Coeff p) : p_(p) {
  if (p >= (Coeff{1} << 31) || !is_prime(p))
    throw PreconditionError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw std::domain_error("inverse of zero in prime field");
  // extended Euclid
  long long t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

}  // namespace irlab
