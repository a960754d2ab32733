#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tropgroups/perm.hpp"

namespace tropgroups {

inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000;
inline constexpr std::uint64_t kDefaultSearchNodes = 10'000'000;

// A permutation group given by generators.  A paired group acts on two sets
// Ω = {0..n-1} and Γ = {n..n+m-1} at once; its generators are permutations of
// n+m points that preserve the split.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> generators);
  static PermGroup paired(std::size_t n, std::size_t m, std::vector<Perm> generators);
  static PermGroup paired_from_pairs(std::size_t n, std::size_t m,
                                     const std::vector<std::pair<Perm, Perm>>& generators);
  static PermGroup parse(const std::vector<std::string>& cycles, std::size_t degree);

  std::size_t degree() const { return degree_; }
  bool is_paired() const { return split_ > 0; }
  std::size_t omega_size() const { return is_paired() ? split_ : degree_; }
  std::size_t gamma_size() const { return is_paired() ? degree_ - split_ : 0; }
  const std::vector<Perm>& generators() const { return generators_; }

  // Restrictions of a paired group to Ω and Γ.
  PermGroup omega_action() const;
  PermGroup gamma_action() const;

 private:
  std::size_t degree_ = 0;
  std::size_t split_ = 0;
  std::vector<Perm> generators_;
};

// Breadth-first closure; throws OrderCapExceeded beyond `cap` elements.
std::vector<Perm> enumerate_elements(const PermGroup& g, std::uint64_t cap = kDefaultOrderCap);
std::uint64_t group_order(const PermGroup& g, std::uint64_t cap = kDefaultOrderCap);
bool contains(const PermGroup& g, const Perm& p, std::uint64_t cap = kDefaultOrderCap);
// A small generating set picked greedily from the elements.
std::vector<Perm> small_generating_set(const std::vector<Perm>& elements);

// Orbit of each point under the group, labelled by first occurrence.
std::vector<std::size_t> orbit_labels(std::size_t degree, const std::vector<Perm>& generators);

// Complete loopless digraph with a colour on every ordered pair i != j.
struct ColouredDigraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> colours;  // n*n, diagonal ignored

  ColouredDigraph() = default;
  explicit ColouredDigraph(std::size_t size) : n(size), colours(size * size, 0) {}
  std::uint32_t colour(std::size_t i, std::size_t j) const { return colours[i * n + j]; }
  void set(std::size_t i, std::size_t j, std::uint32_t c) { colours[i * n + j] = c; }
};

// Bipartite digraph with all edges directed Ω -> Θ; kNoEdge marks a missing edge.
struct BipartiteDigraph {
  static constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::uint32_t> colours;  // n*m

  BipartiteDigraph() = default;
  BipartiteDigraph(std::size_t rows, std::size_t cols)
      : n(rows), m(cols), colours(rows * cols, kNoEdge) {}
  std::uint32_t colour(std::size_t i, std::size_t j) const { return colours[i * m + j]; }
  bool has_edge(std::size_t i, std::size_t j) const { return colour(i, j) != kNoEdge; }
  void set(std::size_t i, std::size_t j, std::uint32_t c) { colours[i * m + j] = c; }
  BipartiteDigraph reversed() const;  // transpose: Θ becomes the source side
};

ColouredDigraph pair_orbit_colouring(const PermGroup& g);
BipartiteDigraph paired_orbit_colouring(const PermGroup& g);

struct AutomorphismGroup {
  PermGroup group;
  std::uint64_t order = 1;
};

AutomorphismGroup coloured_automorphisms(const ColouredDigraph& d,
                                         std::uint64_t max_nodes = kDefaultSearchNodes);
// Paired automorphisms in S_Ω × S_Θ; the result is a paired group.
AutomorphismGroup coloured_automorphisms(const BipartiteDigraph& d,
                                         std::uint64_t max_nodes = kDefaultSearchNodes);

AutomorphismGroup two_closure(const PermGroup& g);
bool is_two_closed(const PermGroup& g, std::uint64_t cap = kDefaultOrderCap);
AutomorphismGroup paired_two_closure(const PermGroup& g, std::uint64_t cap = kDefaultOrderCap);
bool is_paired_two_closed(const PermGroup& g, std::uint64_t cap = kDefaultOrderCap);

bool groups_isomorphic(const PermGroup& g, const PermGroup& h, std::uint64_t cap = 10'000);
// Common name for small groups ("S2", "D4", "A4", ...) or "" if unrecognised.
std::string identify_group(const PermGroup& g);

bool is_irreducible(const BipartiteDigraph& d);

}  // namespace tropgroups
