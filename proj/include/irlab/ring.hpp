#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "irlab/field.hpp"
#include "irlab/monomial.hpp"

namespace irlab {

/// Ambient polynomial ring k[x_0..x_{n-1}] with a monomial order.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> variable_index(std::string_view name) const;

  int compare(const Monomial& a, const Monomial& b) const noexcept { return order_.compare(a, b, vars_.size()); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, Coeff characteristic = PrimeField::kDefaultCharacteristic,
                  MonomialOrder order = MonomialOrder::grevlex());

/// Same variables and field, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace irlab
