#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "irlab/field.hpp"

namespace irlab::linalg {

/// Sparse row: (column, nonzero value) pairs, strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Coeff>>;

/// Rank over F_p of the matrix whose rows are given. Rows are consumed.
std::size_t rank(const PrimeField& F, std::vector<SparseRow> rows);

/// Rank of a dense row-major matrix.
std::size_t rank(const PrimeField& F, std::vector<std::vector<Coeff>> rows);

}  // namespace irlab::linalg
