#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tropgroups/matrix.hpp"
#include "tropgroups/permgroups.hpp"

namespace tropgroups {

// One value z_γ chosen for a colour.
struct ColourValue {
  std::uint32_t colour;
  Rational lo;      // interval the standard part lies strictly inside
  Rational hi;
  Value value;
};

struct ConstructionPlan {
  std::size_t row_orbits = 0;     // k (after any transpose)
  std::size_t column_orbits = 0;  // k'
  bool transposed = false;
  std::vector<std::size_t> kept_rows;  // nodes surviving the domination reduction
  std::vector<std::size_t> kept_cols;
  std::vector<ColourValue> values;
  Tag next_tag = 1;
};

struct Construction {
  TropMatrix matrix;
  ConstructionPlan plan;
};

// Realizes Aut(d) (paired) as Σ of a finite matrix.  Throws ReducibleInput or
// HypothesisViolated.
Construction construct_from_bipartite(const BipartiteDigraph& d, Tag first_tag = 1);

// Full-rank idempotent whose maximal subgroup has finite part Aut(d).
Construction construct_idempotent(const ColouredDigraph& d, Tag first_tag = 1);
// Same for a 2-closed group; throws NotTwoClosed otherwise.
Construction construct_idempotent(const PermGroup& g, Tag first_tag = 1);

TropMatrix assemble_blocks(const std::vector<std::pair<TropMatrix, std::size_t>>& blocks,
                           const TropScalar& fill);

// The 12 elements of Alt(4) on 4 points, breadth-first from the identity over
// the generators (1,2,3) and (1,2)(3,4), right multiplication.
std::vector<Perm> alt4_elements();
// Column g applied to (a,b,c,d)ᵀ with (g·V)_i = V_{g⁻¹(i)}, one per element above.
TropMatrix alt4_column_matrix(const Value& a, const Value& b, const Value& c, const Value& d);

TropMatrix finite_approximant(const TropMatrix& e, std::int64_t m);

}  // namespace tropgroups
