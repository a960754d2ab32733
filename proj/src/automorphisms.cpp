#include "automorphisms.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "tropgroups/errors.hpp"

namespace tropgroups::detail {

namespace {

struct Partition {
  std::vector<std::vector<std::uint32_t>> cells;
  std::vector<std::uint32_t> cell_of;

  bool discrete() const { return cells.size() == cell_of.size(); }

  void reindex() {
    for (std::uint32_t k = 0; k < cells.size(); ++k)
      for (auto v : cells[k]) cell_of[v] = k;
  }
};

using Tuple = std::array<std::uint32_t, 3>;

struct Signature {
  std::uint32_t cell;
  std::vector<Tuple> profile;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

class Engine {
 public:
  Engine(std::size_t n, const std::vector<std::uint32_t>& arc, std::uint64_t max_nodes)
      : n_(n), arc_(arc), max_nodes_(max_nodes) {}

  AutSearchResult run(const std::vector<std::uint32_t>& vertex) {
    Partition p;
    p.cell_of.assign(n_, 0);
    std::vector<std::uint32_t> order(n_);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return vertex[a] < vertex[b]; });
    for (std::size_t k = 0; k < n_; ++k) {
      if (k == 0 || vertex[order[k]] != vertex[order[k - 1]]) p.cells.emplace_back();
      p.cells.back().push_back(order[k]);
    }
    p.reindex();
    Partition q = p;
    refine_pair(p, q);

    AutSearchResult result;
    while (!p.discrete()) {
      std::size_t cell = 0;
      while (p.cells[cell].size() == 1) ++cell;
      const auto members = p.cells[cell];
      const std::uint32_t v = members.front();
      Partition left = individualize(p, v);

      // Orbit of v under the generators found at this level (all of which
      // fix the earlier base points).
      std::vector<std::uint32_t> parent(n_);
      std::iota(parent.begin(), parent.end(), 0u);
      auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::uint64_t orbit_size = 1;
      for (std::size_t k = 1; k < members.size(); ++k) {
        const std::uint32_t w = members[k];
        if (find(w) == find(v)) continue;
        Partition right = individualize(p, w);
        Partition l = left;
        if (auto g = find_iso(l, right)) {
          for (std::uint32_t x = 0; x < n_; ++x) {
            const auto a = find(x), b = find((*g)[x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
          result.generators.push_back(std::move(*g));
        }
      }
      orbit_size = 0;
      for (auto w : members) orbit_size += find(w) == find(v);
      result.order *= orbit_size;
      Partition r = left;
      refine_pair(left, r);
      p = std::move(left);
    }
    return result;
  }

 private:
  std::uint32_t arc(std::size_t u, std::size_t v) const { return arc_[u * n_ + v]; }

  void count_node() {
    if (++nodes_ > max_nodes_)
      throw SearchBudgetExceeded("automorphism search exceeded " + std::to_string(max_nodes_) +
                                 " nodes");
  }

  Partition individualize(const Partition& p, std::uint32_t v) const {
    Partition out;
    out.cell_of.assign(n_, 0);
    for (std::size_t k = 0; k < p.cells.size(); ++k) {
      if (k == p.cell_of[v]) {
        out.cells.push_back({v});
        std::vector<std::uint32_t> rest;
        for (auto u : p.cells[k])
          if (u != v) rest.push_back(u);
        if (!rest.empty()) out.cells.push_back(std::move(rest));
      } else {
        out.cells.push_back(p.cells[k]);
      }
    }
    out.reindex();
    return out;
  }

  // One refinement round; returns the ordered (signature, count) trace.
  std::vector<std::pair<Signature, std::size_t>> refine_round(Partition& p) const {
    std::vector<Signature> sig(n_);
    for (std::uint32_t v = 0; v < n_; ++v) {
      sig[v].cell = p.cell_of[v];
      sig[v].profile.reserve(n_ - 1);
      for (std::uint32_t u = 0; u < n_; ++u)
        if (u != v) sig[v].profile.push_back({arc(v, u), arc(u, v), p.cell_of[u]});
      std::sort(sig[v].profile.begin(), sig[v].profile.end());
    }
    std::vector<std::uint32_t> order(n_);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      if (sig[a] != sig[b]) return sig[a] < sig[b];
      return a < b;
    });
    std::vector<std::pair<Signature, std::size_t>> trace;
    Partition out;
    out.cell_of.assign(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) {
      const auto v = order[k];
      if (k == 0 || sig[v] != sig[order[k - 1]]) {
        out.cells.emplace_back();
        trace.emplace_back(sig[v], 0);
      }
      out.cells.back().push_back(v);
      ++trace.back().second;
    }
    // Keep each cell's vertices in their previous relative order.
    for (auto& c : out.cells) std::sort(c.begin(), c.end());
    out.reindex();
    p = std::move(out);
    return trace;
  }

  // Refines both partitions in lockstep; false if they diverge.
  bool refine_pair(Partition& l, Partition& r) const {
    while (true) {
      const std::size_t before = l.cells.size();
      if (refine_round(l) != refine_round(r)) return false;
      if (l.cells.size() == before) return true;
    }
  }

  std::optional<Perm> find_iso(Partition& l, Partition& r) {
    count_node();
    if (!refine_pair(l, r)) return std::nullopt;
    if (l.discrete()) {
      std::vector<Perm::Point> g(n_);
      for (std::size_t k = 0; k < n_; ++k) g[l.cells[k][0]] = r.cells[k][0];
      for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v)
          if (u != v && arc(u, v) != arc(g[u], g[v])) return std::nullopt;
      return Perm(std::move(g));
    }
    std::size_t cell = 0;
    while (l.cells[cell].size() == 1) ++cell;
    const std::uint32_t x = l.cells[cell].front();
    const auto targets = r.cells[cell];
    for (auto y : targets) {
      Partition l2 = individualize(l, x);
      Partition r2 = individualize(r, y);
      if (auto g = find_iso(l2, r2)) return g;
    }
    return std::nullopt;
  }

  std::size_t n_;
  const std::vector<std::uint32_t>& arc_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

AutSearchResult automorphisms(std::size_t n, const std::vector<std::uint32_t>& arc,
                              const std::vector<std::uint32_t>& vertex,
                              std::uint64_t max_nodes) {
  if (n == 0) return {};
  Engine engine(n, arc, max_nodes);
  return engine.run(vertex);
}

}  // namespace tropgroups::detail
