#include "irlab/ring.hpp"

#include <algorithm>
#include <set>

#include "irlab/errors.hpp"

namespace irlab {

Ring::Ring(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
  if (vars_.size() > kMaxVars) throw PreconditionError("at most 16 variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

RingPtr make_ring(std::vector<std::string> variables, Coeff characteristic, MonomialOrder order) {
  return std::make_shared<const Ring>(PrimeField(characteristic), std::move(variables), order);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return std::make_shared<const Ring>(ring->field(), ring->variables(), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace irlab
