#include "irlab/linalg.hpp"

#include <algorithm>
#include <map>

namespace irlab::linalg {

namespace {

/// a - c*b over sparse rows.
SparseRow axpy(const PrimeField& F, const SparseRow& a, const SparseRow& b, Coeff c) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, F.neg(F.mul(c, b[j].second)));
      ++j;
    } else {
      Coeff v = F.sub(a[i].second, F.mul(c, b[j].second));
      if (v) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const PrimeField& F, std::vector<SparseRow> rows) {
  // pivot column -> normalized pivot row (leading coefficient 1)
  std::map<std::size_t, SparseRow> pivots;
  for (auto& row : rows) {
    SparseRow r = std::move(row);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        Coeff inv = F.inv(r.front().second);
        for (auto& [c, v] : r) v = F.mul(v, inv);
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      r = axpy(F, r, it->second, r.front().second);
    }
  }
  return pivots.size();
}

std::size_t rank(const PrimeField& F, std::vector<std::vector<Coeff>> rows) {
  std::vector<SparseRow> sparse;
  sparse.reserve(rows.size());
  for (const auto& r : rows) {
    SparseRow s;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] % F.characteristic()) s.emplace_back(c, r[c] % F.characteristic());
    sparse.push_back(std::move(s));
  }
  return rank(F, std::move(sparse));
}

}  // namespace irlab::linalg
