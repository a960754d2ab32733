#include "tropgroups/components.hpp"

#include <algorithm>
#include <numeric>

#include "tropgroups/errors.hpp"
#include "tropgroups/spaces.hpp"
#include "tropgroups/unit_search.hpp"

namespace tropgroups {

namespace {

void require_nondegenerate(const TropMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a.finite_in_row(i) == 0) throw DegenerateRowOrColumn("row " + std::to_string(i + 1) + " is all -inf");
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.finite_in_column(j) == 0)
      throw DegenerateRowOrColumn("column " + std::to_string(j + 1) + " is all -inf");
}

}  // namespace

ColouredBipartiteGraph bipartite_graph(const TropMatrix& a) {
  require_nondegenerate(a);
  ColouredBipartiteGraph g{a.rows(), a.cols(), {}};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) g.edges.push_back({i, j, a(i, j).value()});
  return g;
}

std::vector<Component> connected_components(const TropMatrix& a) {
  require_nondegenerate(a);
  const std::size_t n = a.rows(), m = a.cols();
  // Vertices 0..n-1 are rows, n..n+m-1 columns.
  std::vector<std::size_t> parent(n + m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (a(i, j).is_finite()) {
        const auto x = find(i), y = find(n + j);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
  // Every component contains a row, and its root is its smallest row.
  std::vector<Component> out;
  std::vector<std::size_t> slot(n + m, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].rows.push_back(i);
  }
  for (std::size_t j = 0; j < m; ++j) out[slot[find(n + j)]].cols.push_back(j);
  return out;
}

LabelledMatrix restrict(const TropMatrix& a, const Component& x) {
  const auto comps = connected_components(a);
  if (std::find(comps.begin(), comps.end(), x) == comps.end())
    throw NotAComponent("vertex set is not a connected component");
  return {a.submatrix(x.rows, x.cols), x.rows, x.cols};
}

std::optional<MonomialMatrix> col_space_isomorphic(const TropMatrix& a, const TropMatrix& b,
                                                   const SearchLimits& limits) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  const auto found = search_unit_pairs(a, b, PairMode::general, true, limits);
  if (found.empty()) return std::nullopt;
  return found.front().p;
}

std::optional<MonomialMatrix> col_space_isomorphic(const TropMatrix& a, const TropMatrix& b) {
  return col_space_isomorphic(a, b, SearchLimits{});
}

ComponentPartition class_partition(const TropMatrix& a, const SearchLimits& limits) {
  if (!is_full_rank(a)) throw NotFullRank("class_partition needs a full-rank matrix");
  ComponentPartition part;
  part.components = connected_components(a);
  part.class_of.assign(part.components.size(), 0);
  std::vector<TropMatrix> blocks;
  for (const auto& c : part.components) blocks.push_back(a.submatrix(c.rows, c.cols));

  for (std::size_t k = 0; k < part.components.size(); ++k) {
    bool placed = false;
    for (std::size_t cl = 0; cl < part.classes.size() && !placed; ++cl) {
      const auto rep = part.classes[cl].members.front();
      if (auto u = col_space_isomorphic(blocks[rep], blocks[k], limits)) {
        part.classes[cl].members.push_back(k);
        part.classes[cl].witnesses.push_back(std::move(*u));
        part.class_of[k] = cl;
        placed = true;
      }
    }
    if (!placed) {
      part.class_of[k] = part.classes.size();
      part.classes.push_back({{k}, {MonomialMatrix::identity(blocks[k].rows())}});
    }
  }
  return part;
}

ComponentPartition class_partition(const TropMatrix& a) { return class_partition(a, SearchLimits{}); }

}  // namespace tropgroups
