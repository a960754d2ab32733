#include "tropgroups/constructors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "tropgroups/errors.hpp"
#include "tropgroups/spaces.hpp"
#include "tropgroups/stabilizer.hpp"

namespace tropgroups {

namespace {

constexpr std::uint64_t kVerifyCap = 10'000;

// Orbit-pair refinement: colour (γ, orbit(i), orbit(j)) renumbered in
// row-major first-occurrence order.
BipartiteDigraph refine_by_orbits(const BipartiteDigraph& d, const PermGroup& aut) {
  const auto labels = orbit_labels(d.n + d.m, aut.generators());
  BipartiteDigraph out(d.n, d.m);
  std::map<std::tuple<std::uint32_t, std::size_t, std::size_t>, std::uint32_t> ids;
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.m; ++j) {
      const auto key = std::make_tuple(d.colour(i, j), labels[i], labels[d.n + j]);
      out.set(i, j, ids.try_emplace(key, static_cast<std::uint32_t>(ids.size())).first->second);
    }
  return out;
}

std::vector<std::vector<std::size_t>> orbits_of(std::size_t lo, std::size_t hi,
                                                const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::vector<std::size_t>> by_label;
  for (std::size_t x = lo; x < hi; ++x) by_label[labels[x]].push_back(x - lo);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [label, members] : by_label) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

// u <= v for rows: whenever (u,s),(u,t) share a colour, so do (v,s),(v,t).
bool row_dominated(const BipartiteDigraph& d, std::size_t u, std::size_t v,
                   const std::vector<std::size_t>& cols) {
  for (auto s : cols)
    for (auto t : cols)
      if (d.colour(u, s) == d.colour(u, t) && d.colour(v, s) != d.colour(v, t)) return false;
  return true;
}

bool col_dominated(const BipartiteDigraph& d, std::size_t u, std::size_t v,
                   const std::vector<std::size_t>& rows) {
  for (auto s : rows)
    for (auto t : rows)
      if (d.colour(s, u) == d.colour(t, u) && d.colour(s, v) != d.colour(t, v)) return false;
  return true;
}

// Removes whole orbits dominated by a node of another orbit until none is.
bool remove_dominated(const BipartiteDigraph& d, std::vector<std::vector<std::size_t>>& row_orbits,
                      std::vector<std::vector<std::size_t>>& col_orbits) {
  auto flatten = [](const std::vector<std::vector<std::size_t>>& orbits) {
    std::vector<std::size_t> out;
    for (const auto& o : orbits) out.insert(out.end(), o.begin(), o.end());
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto rows = flatten(row_orbits), cols = flatten(col_orbits);
  for (std::size_t a = 0; a < row_orbits.size(); ++a)
    for (std::size_t b = 0; b < row_orbits.size(); ++b) {
      if (a == b) continue;
      for (auto u : row_orbits[a])
        for (auto v : row_orbits[b])
          if (row_dominated(d, u, v, cols)) {
            row_orbits.erase(row_orbits.begin() + static_cast<std::ptrdiff_t>(b));
            return true;
          }
    }
  for (std::size_t a = 0; a < col_orbits.size(); ++a)
    for (std::size_t b = 0; b < col_orbits.size(); ++b) {
      if (a == b) continue;
      for (auto u : col_orbits[a])
        for (auto v : col_orbits[b])
          if (col_dominated(d, u, v, rows)) {
            col_orbits.erase(col_orbits.begin() + static_cast<std::ptrdiff_t>(b));
            return true;
          }
    }
  return false;
}

Value with_tag(const Rational& standard, Tag tag) {
  return Value(standard, {{tag, Rational(1)}});
}

// Spreads the colours of one interval evenly: the t-th of T values is
// centre - 1/10 + (1/5)·t/(T+1).
void spread(const Rational& centre, const std::vector<std::uint32_t>& colours,
            std::map<std::uint32_t, ColourValue>& out) {
  const Rational lo = centre - Rational(1, 10), hi = centre + Rational(1, 10);
  const std::size_t total = colours.size();
  for (std::size_t t = 1; t <= total; ++t) {
    const Rational s = lo + (hi - lo) * Rational(static_cast<long long>(t), static_cast<long long>(total + 1));
    out[colours[t - 1]] = {colours[t - 1], lo, hi, Value(s)};
  }
}

// Chooses z_γ for every colour of an orbit-refined graph with k <= k'.
std::map<std::uint32_t, ColourValue> choose_values(const BipartiteDigraph& b,
                                                   const std::vector<std::vector<std::size_t>>& row_orbits,
                                                   const std::vector<std::vector<std::size_t>>& col_orbits) {
  const std::size_t k = row_orbits.size(), kp = col_orbits.size();
  // Z[a][c]: colours between row orbit a and column orbit c.
  std::vector<std::vector<std::set<std::uint32_t>>> z(k, std::vector<std::set<std::uint32_t>>(kp));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < kp; ++c)
      for (auto i : row_orbits[a])
        for (auto j : col_orbits[c]) z[a][c].insert(b.colour(i, j));

  std::map<std::uint32_t, ColourValue> out;
  if (k == 2) {
    std::size_t tmax = 2;
    for (const auto& row : z)
      for (const auto& cls : row) tmax = std::max(tmax, cls.size());
    const Rational two_t(2 * static_cast<long long>(tmax));
    const Rational width = Rational(1, 5) / Rational(static_cast<long long>(kp));
    // Orbit 1: class j sits in its own slice of [-1/10, 1/10]; the gaps
    // shrink by 2·Tmax per class so min gaps beat all later spreads.
    Rational gap = width / two_t;
    for (std::size_t c = 0; c < kp; ++c) {
      const Rational start = Rational(-1, 10) + width * Rational(static_cast<long long>(c)) + width / 4;
      std::size_t t = 0;
      for (auto colour : z[0][c])
        out[colour] = {colour, Rational(-1, 10), Rational(1, 10),
                       Value(start + gap * Rational(static_cast<long long>(t++)))};
      gap /= two_t;
    }
    // Orbit 2: class j is centred at -j; gaps grow by 2·Tmax per class so
    // every spread stays below every later min gap.
    std::vector<Rational> gaps(kp);
    gaps[kp - 1] = Rational(1, 10) / Rational(static_cast<long long>(tmax));
    for (std::size_t c = kp - 1; c-- > 0;) gaps[c] = gaps[c + 1] / two_t;
    for (std::size_t c = 0; c < kp; ++c) {
      const Rational centre(-static_cast<long long>(c + 1));
      std::size_t t = 0;
      for (auto colour : z[1][c])
        out[colour] = {colour, centre - Rational(1, 10), centre + Rational(1, 10),
                       Value(centre - Rational(1, 20) + gaps[c] * Rational(static_cast<long long>(t++)))};
    }
    return out;
  }

  std::map<Rational, std::vector<std::uint32_t>> by_centre;
  const auto& delta1 = row_orbits[0];
  for (std::size_t c = 0; c < kp; ++c) {
    const std::size_t pivot = col_orbits[c].front();
    // Q_{j,t}: rows of Δ_1 grouped by their colour into θ_{p_j}.
    std::vector<std::uint32_t> seen;
    std::map<std::uint32_t, std::size_t> group_size;
    for (auto x : delta1) {
      const auto col = b.colour(x, pivot);
      if (!group_size.count(col)) seen.push_back(col);
      ++group_size[col];
    }
    std::size_t offset = 0;
    for (auto col : seen) {
      by_centre[Rational(-static_cast<long long>(offset))].push_back(col);
      offset += group_size[col];
    }
  }
  const long long d1 = static_cast<long long>(delta1.size());
  for (std::size_t a = 1; a < k; ++a)
    for (std::size_t c = 0; c < kp; ++c) {
      const long long i = static_cast<long long>(a + 1), j = static_cast<long long>(c + 1);
      const Rational centre = c == 0 ? Rational(0) : Rational(((i + j) % 2 == 0 ? 1 : -1) * (i + j) * d1);
      for (auto colour : z[a][c]) by_centre[centre].push_back(colour);
    }
  for (auto& [centre, colours] : by_centre) {
    std::sort(colours.begin(), colours.end());
    colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
    spread(centre, colours, out);
  }
  return out;
}

void verify_free(const std::vector<ColourValue>& values) {
  std::vector<Value> vals;
  for (const auto& v : values) vals.push_back(v.value);
  if (!free_basis_check(vals)) throw InternalError("construction produced dependent entries");
  for (const auto& v : values)
    if (!(v.lo < v.value.standard() && v.value.standard() < v.hi))
      throw InternalError("construction value outside its interval");
}

void verify_group(const TropMatrix& a, const AutomorphismGroup& target, bool idempotent) {
  const auto desc = idempotent ? maximal_subgroup(a) : group_description(a);
  if (desc.factors.size() != 1 || desc.factors.front().multiplicity != 1)
    throw InternalError("constructed matrix does not have a single factor");
  const auto& f = desc.factors.front();
  if (f.order != target.order) throw InternalError("constructed matrix realizes the wrong group order");
  if (f.order <= kVerifyCap && !groups_isomorphic(f.row_action, target.group, kVerifyCap))
    throw InternalError("constructed matrix realizes a different group");
}

}  // namespace

Construction construct_from_bipartite(const BipartiteDigraph& d, Tag first_tag) {
  if (!is_irreducible(d)) throw ReducibleInput("graph has an isolated node or a twin pair");

  BipartiteDigraph complete = d;
  std::uint32_t delta = 0;
  for (auto c : d.colours)
    if (c != BipartiteDigraph::kNoEdge) delta = std::max(delta, c + 1);
  for (auto& c : complete.colours)
    if (c == BipartiteDigraph::kNoEdge) c = delta;

  const auto aut = coloured_automorphisms(complete);
  if (aut.order == 1 && (d.n <= 2 || d.m <= 2))
    throw HypothesisViolated("trivial automorphism group needs both sides larger than 2");

  const BipartiteDigraph refined = refine_by_orbits(complete, aut.group);
  const auto labels = orbit_labels(d.n + d.m, aut.group.generators());
  auto row_orbits = orbits_of(0, d.n, labels);
  auto col_orbits = orbits_of(d.n, d.n + d.m, labels);
  if (aut.order > 1) {
    auto non_fixed = [](std::vector<std::vector<std::size_t>>& orbits) {
      std::erase_if(orbits, [](const auto& o) { return o.size() == 1; });
    };
    non_fixed(row_orbits);
    non_fixed(col_orbits);
    if (row_orbits.empty() || col_orbits.empty())
      throw InternalError("removing fixed nodes emptied a side");
    while (remove_dominated(refined, row_orbits, col_orbits)) {
    }
  }

  ConstructionPlan plan;
  for (const auto& o : row_orbits) plan.kept_rows.insert(plan.kept_rows.end(), o.begin(), o.end());
  for (const auto& o : col_orbits) plan.kept_cols.insert(plan.kept_cols.end(), o.begin(), o.end());
  std::sort(plan.kept_rows.begin(), plan.kept_rows.end());
  std::sort(plan.kept_cols.begin(), plan.kept_cols.end());

  BipartiteDigraph reduced(plan.kept_rows.size(), plan.kept_cols.size());
  for (std::size_t a = 0; a < reduced.n; ++a)
    for (std::size_t c = 0; c < reduced.m; ++c)
      reduced.set(a, c, refined.colour(plan.kept_rows[a], plan.kept_cols[c]));

  // Orbits of the reduced graph's own automorphism group.
  const auto aut_b = coloured_automorphisms(reduced);
  BipartiteDigraph work = refine_by_orbits(reduced, aut_b.group);
  const auto b_labels = orbit_labels(work.n + work.m, aut_b.group.generators());
  auto b_rows = orbits_of(0, work.n, b_labels);
  auto b_cols = orbits_of(work.n, work.n + work.m, b_labels);
  if (b_rows.size() > b_cols.size()) {
    plan.transposed = true;
    work = work.reversed();
    std::swap(b_rows, b_cols);
  }
  plan.row_orbits = b_rows.size();
  plan.column_orbits = b_cols.size();

  auto chosen = choose_values(work, b_rows, b_cols);
  plan.next_tag = first_tag;
  for (auto& [colour, cv] : chosen) {
    cv.value = with_tag(cv.value.standard(), plan.next_tag++);
    plan.values.push_back(cv);
  }
  verify_free(plan.values);

  TropMatrix a(work.n, work.m);
  for (std::size_t i = 0; i < work.n; ++i)
    for (std::size_t j = 0; j < work.m; ++j) a(i, j) = chosen.at(work.colour(i, j)).value;
  if (plan.transposed) a = a.transpose();

  verify_group(a, aut, false);
  return {std::move(a), std::move(plan)};
}

Construction construct_idempotent(const ColouredDigraph& d, Tag first_tag) {
  const std::size_t n = d.n;
  if (n == 0) throw std::invalid_argument("construct_idempotent needs at least one point");
  const auto aut = coloured_automorphisms(d);
  Construction out;
  const auto labels = orbit_labels(n, aut.group.generators());
  out.plan.row_orbits = out.plan.column_orbits = *std::max_element(labels.begin(), labels.end()) + 1;
  out.plan.next_tag = first_tag;
  for (std::size_t i = 0; i < n; ++i) {
    out.plan.kept_rows.push_back(i);
    out.plan.kept_cols.push_back(i);
  }
  if (aut.order == 1 && n <= 2) {
    out.matrix = n == 1 ? TropMatrix::from_rows({{0}})
                        : TropMatrix::from_rows({{0, 0}, {TropScalar::neg_inf(), 0}});
    return out;
  }

  std::map<std::tuple<std::uint32_t, std::size_t, std::size_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> refined(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        const auto key = std::make_tuple(d.colour(i, j), labels[i], labels[j]);
        refined[i * n + j] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size())).first->second;
      }
  const std::size_t total = ids.size();
  const Rational lo(-11, 10), hi(-9, 10);
  std::vector<Value> value_of(total);
  for (std::size_t t = 0; t < total; ++t) {
    const Rational s = lo + (hi - lo) * Rational(static_cast<long long>(t + 1), static_cast<long long>(total + 1));
    value_of[t] = with_tag(s, out.plan.next_tag++);
    out.plan.values.push_back({static_cast<std::uint32_t>(t), lo, hi, value_of[t]});
  }
  verify_free(out.plan.values);

  out.matrix = TropMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = i == j ? Value() : value_of[refined[i * n + j]];

  if (!is_idempotent(out.matrix) || !is_full_rank(out.matrix))
    throw InternalError("constructed matrix is not a full-rank idempotent");
  verify_group(out.matrix, aut, true);
  return out;
}

Construction construct_idempotent(const PermGroup& g, Tag first_tag) {
  if (g.is_paired()) throw std::invalid_argument("construct_idempotent needs an unpaired group");
  if (!is_two_closed(g)) throw NotTwoClosed("group is smaller than its 2-closure");
  return construct_idempotent(pair_orbit_colouring(g), first_tag);
}

TropMatrix assemble_blocks(const std::vector<std::pair<TropMatrix, std::size_t>>& blocks,
                           const TropScalar& fill) {
  if (fill.is_finite() && !fill.value().is_zero())
    throw std::invalid_argument("assemble_blocks fill must be -inf or 0");
  std::vector<const TropMatrix*> expanded;
  std::size_t rows = 0, cols = 0;
  for (const auto& [block, mult] : blocks)
    for (std::size_t k = 0; k < mult; ++k) {
      expanded.push_back(&block);
      rows += block.rows();
      cols += block.cols();
    }
  TropMatrix out(rows, cols, std::vector<TropScalar>(rows * cols, fill));
  std::size_t r0 = 0, c0 = 0;
  for (const auto* b : expanded) {
    for (std::size_t i = 0; i < b->rows(); ++i)
      for (std::size_t j = 0; j < b->cols(); ++j) out(r0 + i, c0 + j) = (*b)(i, j);
    r0 += b->rows();
    c0 += b->cols();
  }
  return out;
}

std::vector<Perm> alt4_elements() {
  const PermGroup g = PermGroup::parse({"(1,2,3)", "(1,2)(3,4)"}, 4);
  return enumerate_elements(g);
}

TropMatrix alt4_column_matrix(const Value& a, const Value& b, const Value& c, const Value& d) {
  const std::vector<Value> v{a, b, c, d};
  if (!free_basis_check(v)) throw DependentEntries("a, b, c, d must be independent");
  const auto elements = alt4_elements();
  TropMatrix out(4, elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Perm inv = elements[k].inverse();
    for (std::size_t i = 0; i < 4; ++i) out(i, k) = v[inv[i]];
  }
  return out;
}

TropMatrix finite_approximant(const TropMatrix& e, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("finite_approximant needs m >= 1");
  if (!e.is_square() || !is_idempotent(e)) throw NotIdempotent("finite_approximant needs an idempotent");
  if (!is_full_rank(e)) throw NotFullRank("finite_approximant needs a full-rank idempotent");
  const std::size_t n = e.rows();

  Value total;
  for (const auto& x : e.entries())
    if (x.is_finite()) total += abs(x.value());
  const Value big_n = -total - Value(1);
  const Value fill = big_n.scaled(Rational(m));

  TropMatrix s = e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!s(i, j).is_finite()) s(i, j) = fill;
  TropMatrix f = idempotent_power(s);

  std::vector<TropScalar> row_max(n), col_max(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      row_max[i] = trop_add(row_max[i], e(i, j));
      col_max[j] = trop_add(col_max[j], e(i, j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const TropScalar expected =
          e(i, j).is_finite() ? e(i, j) : trop_mul(trop_mul(row_max[i], fill), col_max[j]);
      if (f(i, j) != expected) throw InternalError("approximant disagrees with its closed form");
    }
  return f;
}

}  // namespace tropgroups
