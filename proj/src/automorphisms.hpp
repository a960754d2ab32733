#pragma once

#include <cstdint>
#include <vector>

#include "tropgroups/perm.hpp"

namespace tropgroups::detail {

struct AutSearchResult {
  std::vector<Perm> generators;
  std::uint64_t order = 1;
};

// Automorphisms of a complete coloured digraph on `n` vertices: arc colours
// in `arc` (n*n, diagonal ignored) and vertex colours in `vertex`.
// Individualization-refinement search down a stabilizer chain.
AutSearchResult automorphisms(std::size_t n, const std::vector<std::uint32_t>& arc,
                              const std::vector<std::uint32_t>& vertex,
                              std::uint64_t max_nodes);

}  // namespace tropgroups::detail
