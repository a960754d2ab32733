#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropgroups/components.hpp"
#include "tropgroups/matrix.hpp"
#include "tropgroups/permgroups.hpp"
#include "tropgroups/spaces.hpp"
#include "tropgroups/unit_search.hpp"

namespace tropgroups {

// P ⊗ A = A ⊗ Q for the matrix the element was computed against.
struct StabilizerElement {
  MonomialMatrix p;
  MonomialMatrix q;
  Value eigenvalue;
  friend bool operator==(const StabilizerElement&, const StabilizerElement&) = default;
};

// The eigenvalue-0 part Σ of G_A.  `elements` is filled when the order is at
// most the enumeration cap; `generators` always is.  Sorted by (σ, τ).
struct Sigma {
  std::vector<StabilizerElement> elements;
  std::vector<StabilizerElement> generators;
  std::uint64_t order = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool complete() const { return elements.size() == order; }
  PermGroup row_action() const;
  PermGroup paired_action() const;
};

// The unique Q with P ⊗ A = A ⊗ Q, if P ⊗ A lies in the column space class of A.
std::optional<MonomialMatrix> solve_column_side(const TropMatrix& a, const MonomialMatrix& p);

Sigma stabilizer_pairs(const TropMatrix& a, const SearchLimits& limits = {});
Sigma commuting_units(const TropMatrix& e, const SearchLimits& limits = {});

struct Normalization {
  MonomialMatrix u;  // diag(−u)
  MonomialMatrix v;  // diag(−v)
  TropMatrix b;      // U ⊗ A ⊗ V
  Sigma sigma_b;     // every element is a plain permutation pair
};

// Needs A full rank with connected B_A; `sigma` is Σ of A.
Normalization normalize_eigenvectors(const TropMatrix& a, const Sigma& sigma);
Normalization normalize_eigenvectors(const TropMatrix& a, const SearchLimits& limits = {});

struct GroupFactor {
  PermGroup row_action;     // G_α on n_α points
  PermGroup paired_action;  // G_α on n_α + m_α points
  std::vector<StabilizerElement> generators;  // on the normalized representative
  std::uint64_t order = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t multiplicity = 1;
  std::size_t representative = 0;  // component index in the partition
  std::vector<std::size_t> members;
  std::string name;  // "1" for trivial, a catalogue name, or "G<k>"
  TropMatrix normalized;  // B for the representative
};

enum class DescriptionKind { schutzenberger, maximal };

// ∏_α (ℝ × G_α) ≀ S_{h_α}.
struct GroupDescription {
  DescriptionKind kind = DescriptionKind::schutzenberger;
  Reduction reduction;
  ComponentPartition partition;
  std::vector<GroupFactor> factors;

  std::size_t real_rank() const;
  std::string formula() const;
};

GroupDescription group_description(const TropMatrix& a, const SearchLimits& limits = {});
GroupDescription maximal_subgroup(const TropMatrix& e, const SearchLimits& limits = {});

bool classification_conditions(const GroupDescription& desc, std::size_t n, std::size_t m);

}  // namespace tropgroups
