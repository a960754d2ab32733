#pragma once

#include <cstdint>
#include <vector>

#include "tropgroups/matrix.hpp"
#include "tropgroups/permgroups.hpp"

namespace tropgroups {

struct SearchLimits {
  std::uint64_t max_nodes = kDefaultSearchNodes;
  std::uint64_t max_order = kDefaultOrderCap;
  unsigned threads = 1;
};

// Units with P ⊗ b = a ⊗ Q.
struct UnitPair {
  MonomialMatrix p;
  MonomialMatrix q;
  friend bool operator==(const UnitPair&, const UnitPair&) = default;
};

enum class PairMode {
  general,    // σ and τ independent
  commuting,  // square input, Q = P
};

// Backtracking over row and column assignments with propagation of the
// scalings along the support of `a`.  Each root of a connected piece gets the
// value 0, so one representative is returned per solution family.  Results are
// sorted by (σ, τ).  Throws SearchBudgetExceeded past limits.max_nodes.
std::vector<UnitPair> search_unit_pairs(const TropMatrix& a, const TropMatrix& b, PairMode mode,
                                        bool first_only, const SearchLimits& limits);

}  // namespace tropgroups
