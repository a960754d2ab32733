#pragma once

#include <optional>
#include <vector>

#include "tropgroups/matrix.hpp"

namespace tropgroups {

struct SpanWitness {
  std::vector<TropScalar> coefficients;
};

// Principal-solution membership test of x in the column space of A.
std::optional<SpanWitness> member(const std::vector<TropScalar>& x, const TropMatrix& a);

bool col_space_equal(const TropMatrix& a, const TropMatrix& b);
bool row_space_equal(const TropMatrix& a, const TropMatrix& b);
bool h_related(const TropMatrix& a, const TropMatrix& b);

// Indices of a minimal generating set of columns, earliest index kept among
// columns that are scalar multiples of each other.
std::vector<std::size_t> extremal_columns(const TropMatrix& a);
std::vector<std::size_t> extremal_rows(const TropMatrix& a);
std::size_t column_rank(const TropMatrix& a);
std::size_t row_rank(const TropMatrix& a);
bool is_full_rank(const TropMatrix& a);

struct Reduction {
  TropMatrix z;
  std::vector<std::size_t> row_keep;
  std::vector<std::size_t> col_keep;
};

Reduction reduce_full_rank(const TropMatrix& x);

}  // namespace tropgroups
