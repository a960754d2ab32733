#include "tropgroups/permgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "automorphisms.hpp"
#include "tropgroups/errors.hpp"

namespace tropgroups {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw DimensionMismatch("generator degree differs from group degree");
}

PermGroup PermGroup::paired(std::size_t n, std::size_t m, std::vector<Perm> generators) {
  if (n == 0 || m == 0) throw std::invalid_argument("paired group needs non-empty Ω and Γ");
  PermGroup g(n + m, std::move(generators));
  g.split_ = n;
  for (const auto& p : g.generators_)
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] >= n) throw std::invalid_argument("paired generator does not preserve Ω");
  return g;
}

PermGroup PermGroup::paired_from_pairs(std::size_t n, std::size_t m,
                                       const std::vector<std::pair<Perm, Perm>>& generators) {
  std::vector<Perm> gens;
  for (const auto& [a, b] : generators) {
    if (a.degree() != n || b.degree() != m) throw DimensionMismatch("paired generator degrees");
    std::vector<Perm::Point> img(n + m);
    for (std::size_t i = 0; i < n; ++i) img[i] = a[i];
    for (std::size_t j = 0; j < m; ++j) img[n + j] = static_cast<Perm::Point>(n + b[j]);
    gens.emplace_back(std::move(img));
  }
  return paired(n, m, std::move(gens));
}

PermGroup PermGroup::parse(const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(Perm::parse(c, degree));
  return {degree, std::move(gens)};
}

namespace {

Perm restrict_to(const Perm& p, std::size_t lo, std::size_t hi) {
  std::vector<Perm::Point> img(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) img[i - lo] = static_cast<Perm::Point>(p[i] - lo);
  return Perm(std::move(img));
}

}  // namespace

PermGroup PermGroup::omega_action() const {
  if (!is_paired()) return *this;
  std::vector<Perm> gens;
  for (const auto& g : generators_) gens.push_back(restrict_to(g, 0, split_));
  return {split_, std::move(gens)};
}

PermGroup PermGroup::gamma_action() const {
  if (!is_paired()) throw std::logic_error("gamma_action of an unpaired group");
  std::vector<Perm> gens;
  for (const auto& g : generators_) gens.push_back(restrict_to(g, split_, degree_));
  return {degree_ - split_, std::move(gens)};
}

std::vector<Perm> enumerate_elements(const PermGroup& g, std::uint64_t cap) {
  std::vector<Perm> elements{Perm::identity(g.degree())};
  std::unordered_set<Perm> seen(elements.begin(), elements.end());
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& gen : g.generators()) {
      Perm y = elements[k] * gen;
      if (seen.insert(y).second) {
        if (elements.size() >= cap)
          throw OrderCapExceeded("group order exceeds " + std::to_string(cap));
        elements.push_back(std::move(y));
      }
    }
  return elements;
}

std::uint64_t group_order(const PermGroup& g, std::uint64_t cap) {
  return enumerate_elements(g, cap).size();
}

bool contains(const PermGroup& g, const Perm& p, std::uint64_t cap) {
  const auto els = enumerate_elements(g, cap);
  return std::find(els.begin(), els.end(), p) != els.end();
}

std::vector<Perm> small_generating_set(const std::vector<Perm>& elements) {
  if (elements.empty()) return {};
  const std::size_t degree = elements.front().degree();
  std::vector<Perm> sorted = elements;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Perm& a, const Perm& b) { return a.order() > b.order(); });
  std::vector<Perm> gens;
  std::unordered_set<Perm> closure{Perm::identity(degree)};
  for (const auto& x : sorted) {
    if (closure.count(x)) continue;
    gens.push_back(x);
    const auto els = enumerate_elements(PermGroup(degree, gens), elements.size() + 1);
    closure = std::unordered_set<Perm>(els.begin(), els.end());
    if (closure.size() == elements.size()) break;
  }
  return gens;
}

std::vector<std::size_t> orbit_labels(std::size_t degree, const std::vector<Perm>& generators) {
  std::vector<std::size_t> parent(degree);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators)
    for (std::size_t i = 0; i < degree; ++i) {
      const auto a = find(i), b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> label(degree);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < degree; ++i)
    label[i] = ids.try_emplace(find(i), ids.size()).first->second;
  return label;
}

BipartiteDigraph BipartiteDigraph::reversed() const {
  BipartiteDigraph r(m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) r.set(j, i, colour(i, j));
  return r;
}

namespace {

// Union-find over `count` items; returns colour ids in first-occurrence order.
std::vector<std::uint32_t> orbit_colours(std::size_t count,
                                         const std::vector<std::vector<std::size_t>>& maps) {
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : maps)
    for (std::size_t x = 0; x < count; ++x) {
      const auto a = find(x), b = find(f[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::uint32_t> colour(count);
  std::map<std::size_t, std::uint32_t> ids;
  for (std::size_t x = 0; x < count; ++x)
    colour[x] = ids.try_emplace(find(x), static_cast<std::uint32_t>(ids.size())).first->second;
  return colour;
}

}  // namespace

ColouredDigraph pair_orbit_colouring(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::vector<std::vector<std::size_t>> maps;
  for (const auto& p : g.generators()) {
    std::vector<std::size_t> f(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f[i * n + j] = p[i] * n + p[j];
    maps.push_back(std::move(f));
  }
  const auto raw = orbit_colours(n * n, maps);
  // Renumber so that only off-diagonal pairs consume colour ids.
  ColouredDigraph d(n);
  std::map<std::uint32_t, std::uint32_t> ids;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        d.set(i, j, ids.try_emplace(raw[i * n + j], static_cast<std::uint32_t>(ids.size())).first->second);
  return d;
}

BipartiteDigraph paired_orbit_colouring(const PermGroup& g) {
  if (!g.is_paired()) throw std::invalid_argument("paired_orbit_colouring needs a paired group");
  const std::size_t n = g.omega_size(), m = g.gamma_size();
  std::vector<std::vector<std::size_t>> maps;
  for (const auto& p : g.generators()) {
    std::vector<std::size_t> f(n * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) f[i * m + j] = p[i] * m + (p[n + j] - n);
    maps.push_back(std::move(f));
  }
  const auto colours = orbit_colours(n * m, maps);
  BipartiteDigraph d(n, m);
  d.colours = colours;
  return d;
}

AutomorphismGroup coloured_automorphisms(const ColouredDigraph& d, std::uint64_t max_nodes) {
  const auto res = detail::automorphisms(d.n, d.colours, std::vector<std::uint32_t>(d.n, 0),
                                         max_nodes);
  return {PermGroup(d.n, res.generators), res.order};
}

AutomorphismGroup coloured_automorphisms(const BipartiteDigraph& d, std::uint64_t max_nodes) {
  const std::size_t n = d.n, m = d.m, total = n + m;
  // Arcs inside a side or from Θ back to Ω get fixed sentinel colours; the
  // vertex colours keep the two sides apart.
  constexpr std::uint32_t kSame = BipartiteDigraph::kNoEdge - 1;
  constexpr std::uint32_t kBack = BipartiteDigraph::kNoEdge - 2;
  std::vector<std::uint32_t> arc(total * total, kSame);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      arc[i * total + n + j] = d.colour(i, j);
      arc[(n + j) * total + i] = kBack;
    }
  std::vector<std::uint32_t> vertex(total, 0);
  for (std::size_t j = n; j < total; ++j) vertex[j] = 1;
  const auto res = detail::automorphisms(total, arc, vertex, max_nodes);
  return {PermGroup::paired(n, m, res.generators), res.order};
}

AutomorphismGroup two_closure(const PermGroup& g) {
  return coloured_automorphisms(pair_orbit_colouring(g));
}

bool is_two_closed(const PermGroup& g, std::uint64_t cap) {
  return group_order(g, cap) == two_closure(g).order;
}

namespace {

void require_faithful(const PermGroup& g, std::uint64_t cap) {
  const auto order = group_order(g, cap);
  if (group_order(g.omega_action(), cap) != order)
    throw NotFaithful("action on the first set has a kernel");
  if (group_order(g.gamma_action(), cap) != order)
    throw NotFaithful("action on the second set has a kernel");
}

}  // namespace

AutomorphismGroup paired_two_closure(const PermGroup& g, std::uint64_t cap) {
  require_faithful(g, cap);
  return coloured_automorphisms(paired_orbit_colouring(g));
}

bool is_paired_two_closed(const PermGroup& g, std::uint64_t cap) {
  return group_order(g, cap) == paired_two_closure(g, cap).order;
}

namespace {

struct ElementTable {
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t> index;
  std::vector<std::uint64_t> orders;

  explicit ElementTable(std::vector<Perm> els) : elements(std::move(els)) {
    for (std::size_t k = 0; k < elements.size(); ++k) {
      index.emplace(elements[k], k);
      orders.push_back(elements[k].order());
    }
  }
};

bool is_abelian(const std::vector<Perm>& gens) {
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (a * b != b * a) return false;
  return true;
}

// Checks that gens[k] -> images[k] (for the first `count` generators)
// extends to an injective homomorphism of the generated subgroup.
bool consistent(const std::vector<Perm>& gens, const std::vector<Perm>& images, std::size_t count) {
  const std::size_t dg = gens.front().degree();
  const std::size_t dh = images.front().degree();
  std::unordered_map<Perm, Perm> phi{{Perm::identity(dg), Perm::identity(dh)}};
  std::unordered_set<Perm> used{Perm::identity(dh)};
  std::vector<Perm> queue{Perm::identity(dg)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Perm x = queue[q];
    const Perm fx = phi.at(x);
    for (std::size_t k = 0; k < count; ++k) {
      Perm y = x * gens[k];
      Perm fy = fx * images[k];
      auto it = phi.find(y);
      if (it != phi.end()) {
        if (it->second != fy) return false;
        continue;
      }
      if (!used.insert(fy).second) return false;
      phi.emplace(y, std::move(fy));
      queue.push_back(std::move(y));
    }
  }
  return true;
}

bool search_images(const std::vector<Perm>& gens, const ElementTable& h, std::vector<Perm>& images,
                   std::size_t k) {
  if (k == gens.size()) return true;
  const auto want = gens[k].order();
  for (std::size_t e = 0; e < h.elements.size(); ++e) {
    if (h.orders[e] != want) continue;
    images.push_back(h.elements[e]);
    if (consistent(gens, images, k + 1) && search_images(gens, h, images, k + 1)) return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

bool groups_isomorphic(const PermGroup& g, const PermGroup& h, std::uint64_t cap) {
  const auto eg = enumerate_elements(g, cap);
  const auto eh = enumerate_elements(h, cap);
  if (eg.size() != eh.size()) return false;
  if (eg.size() == 1) return true;

  std::vector<std::uint64_t> og, oh;
  for (const auto& x : eg) og.push_back(x.order());
  for (const auto& x : eh) oh.push_back(x.order());
  std::sort(og.begin(), og.end());
  std::sort(oh.begin(), oh.end());
  if (og != oh) return false;

  const auto gens = small_generating_set(eg);
  if (is_abelian(gens) != is_abelian(small_generating_set(eh))) return false;

  // Any bijective homomorphism onto a group of the same order is an isomorphism.
  ElementTable table(eh);
  std::vector<Perm> images;
  return search_images(gens, table, images, 0);
}

namespace {

struct NamedGroup {
  const char* name;
  std::size_t degree;
  std::vector<const char*> gens;
};

const std::vector<NamedGroup>& catalog() {
  static const std::vector<NamedGroup> groups = {
      {"S2", 2, {"(1,2)"}},
      {"C3", 3, {"(1,2,3)"}},
      {"C4", 4, {"(1,2,3,4)"}},
      {"C2xC2", 4, {"(1,2)", "(3,4)"}},
      {"C5", 5, {"(1,2,3,4,5)"}},
      {"C6", 6, {"(1,2,3,4,5,6)"}},
      {"S3", 3, {"(1,2,3)", "(1,2)"}},
      {"C7", 7, {"(1,2,3,4,5,6,7)"}},
      {"C8", 8, {"(1,2,3,4,5,6,7,8)"}},
      {"C4xC2", 6, {"(1,2,3,4)", "(5,6)"}},
      {"C2xC2xC2", 6, {"(1,2)", "(3,4)", "(5,6)"}},
      {"D4", 4, {"(1,2,3,4)", "(1,3)"}},
      {"Q8", 8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}},
      {"D5", 5, {"(1,2,3,4,5)", "(2,5)(3,4)"}},
      {"D6", 6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}},
      {"A4", 4, {"(1,2,3)", "(1,2)(3,4)"}},
      {"S4", 4, {"(1,2,3,4)", "(1,2)"}},
      {"A4xA4", 8, {"(1,2,3)", "(1,2)(3,4)", "(5,6,7)", "(5,6)(7,8)"}},
      {"S4xS4", 8, {"(1,2,3,4)", "(1,2)", "(5,6,7,8)", "(5,6)"}},
      {"A5", 5, {"(1,2,3,4,5)", "(1,2,3)"}},
      {"S5", 5, {"(1,2,3,4,5)", "(1,2)"}},
  };
  return groups;
}

}  // namespace

std::string identify_group(const PermGroup& g) {
  std::uint64_t order;
  try {
    order = group_order(g, 10'000);
  } catch (const OrderCapExceeded&) {
    return "";
  }
  if (order == 1) return "1";
  for (const auto& entry : catalog()) {
    std::vector<std::string> cycles(entry.gens.begin(), entry.gens.end());
    const auto named = PermGroup::parse(cycles, entry.degree);
    if (group_order(named) != order) continue;
    if (groups_isomorphic(g, named)) return entry.name;
  }
  return "";
}

bool is_irreducible(const BipartiteDigraph& d) {
  for (std::size_t i = 0; i < d.n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < d.m; ++j) any = any || d.has_edge(i, j);
    if (!any) return false;
  }
  for (std::size_t j = 0; j < d.m; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < d.n; ++i) any = any || d.has_edge(i, j);
    if (!any) return false;
  }
  for (std::size_t a = 0; a < d.n; ++a)
    for (std::size_t b = a + 1; b < d.n; ++b) {
      bool twin = true;
      for (std::size_t j = 0; j < d.m && twin; ++j) twin = d.colour(a, j) == d.colour(b, j);
      if (twin) return false;
    }
  for (std::size_t a = 0; a < d.m; ++a)
    for (std::size_t b = a + 1; b < d.m; ++b) {
      bool twin = true;
      for (std::size_t i = 0; i < d.n && twin; ++i) twin = d.colour(i, a) == d.colour(i, b);
      if (twin) return false;
    }
  return true;
}

}  // namespace tropgroups
