#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropgroups/matrix.hpp"

namespace tropgroups {

// B_A: an edge ω_i -> θ_j coloured A_ij for every finite entry.
struct ColouredBipartiteGraph {
  struct Edge {
    std::size_t omega;
    std::size_t theta;
    Value colour;
  };
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
};

// A connected component of B_A as sorted row (Ω) and column (Θ) indices.
struct Component {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  friend bool operator==(const Component&, const Component&) = default;
};

struct LabelledMatrix {
  TropMatrix matrix;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

struct ComponentClass {
  std::vector<std::size_t> members;  // indices into ComponentPartition::components
  // witnesses[k] is a unit U with C(U ⊗ A|members[k]) = C(A|members[0]).
  std::vector<MonomialMatrix> witnesses;
};

struct ComponentPartition {
  std::vector<Component> components;
  std::vector<ComponentClass> classes;
  std::vector<std::size_t> class_of;  // per component
};

ColouredBipartiteGraph bipartite_graph(const TropMatrix& a);
// Ordered by smallest row index.
std::vector<Component> connected_components(const TropMatrix& a);
LabelledMatrix restrict(const TropMatrix& a, const Component& x);

struct SearchLimits;
// A unit U with C(U ⊗ b) = C(a), if any.  Both inputs must have full rank.
std::optional<MonomialMatrix> col_space_isomorphic(const TropMatrix& a, const TropMatrix& b,
                                                   const SearchLimits& limits);
std::optional<MonomialMatrix> col_space_isomorphic(const TropMatrix& a, const TropMatrix& b);

ComponentPartition class_partition(const TropMatrix& a, const SearchLimits& limits);
ComponentPartition class_partition(const TropMatrix& a);

}  // namespace tropgroups
