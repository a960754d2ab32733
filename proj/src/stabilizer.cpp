#include "tropgroups/stabilizer.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "tropgroups/errors.hpp"

namespace tropgroups {

namespace {

Perm to_perm(const std::vector<std::size_t>& sigma) {
  std::vector<Perm::Point> img(sigma.begin(), sigma.end());
  return Perm(std::move(img));
}

Perm paired_perm(const StabilizerElement& e) {
  const std::size_t n = e.p.degree(), m = e.q.degree();
  std::vector<Perm::Point> img(n + m);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Perm::Point>(e.p.sigma()[i]);
  for (std::size_t j = 0; j < m; ++j) img[n + j] = static_cast<Perm::Point>(n + e.q.sigma()[j]);
  return Perm(std::move(img));
}

bool element_less(const StabilizerElement& x, const StabilizerElement& y) {
  if (x.p.sigma() != y.p.sigma()) return x.p.sigma() < y.p.sigma();
  return x.q.sigma() < y.q.sigma();
}

StabilizerElement compose(const StabilizerElement& x, const StabilizerElement& y) {
  return {x.p * y.p, x.q * y.q, x.eigenvalue + y.eigenvalue};
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::vector<StabilizerElement> pick_generators(const std::vector<StabilizerElement>& elements) {
  std::vector<Perm> perms;
  std::map<Perm, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    perms.push_back(to_perm(elements[k].p.sigma()));
    index.emplace(perms.back(), k);
  }
  std::vector<StabilizerElement> gens;
  for (const auto& g : small_generating_set(perms)) gens.push_back(elements[index.at(g)]);
  std::sort(gens.begin(), gens.end(), element_less);
  return gens;
}

// Closure of generators; the row permutation determines the element.
std::vector<StabilizerElement> close_elements(const std::vector<StabilizerElement>& gens,
                                              const StabilizerElement& identity,
                                              std::uint64_t cap) {
  std::vector<StabilizerElement> out{identity};
  std::map<std::vector<std::size_t>, std::size_t> seen{{identity.p.sigma(), 0}};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      StabilizerElement y = compose(out[k], g);
      if (seen.emplace(y.p.sigma(), out.size()).second) {
        if (out.size() >= cap) throw OrderCapExceeded("Σ exceeds the enumeration cap");
        out.push_back(std::move(y));
      }
    }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

Sigma connected_sigma(const TropMatrix& a, PairMode mode, const SearchLimits& limits) {
  const auto pairs = search_unit_pairs(a, a, mode, false, limits);
  Sigma s;
  s.rows = a.rows();
  s.cols = a.cols();
  std::vector<StabilizerElement> elements;
  for (const auto& pq : pairs) {
    const Value c = monomial_eigenvalue(pq.p);
    StabilizerElement e{pq.p.shifted(-c), pq.q.shifted(-c), Value()};
    e.eigenvalue = monomial_eigenvalue(e.p);
    elements.push_back(std::move(e));
  }
  std::sort(elements.begin(), elements.end(), element_less);
  s.order = elements.size();
  s.generators = pick_generators(elements);
  if (s.order <= limits.max_order) s.elements = std::move(elements);
  return s;
}

// Identity of degree n, except that for each (from, to) in `maps` block
// `from` goes onto block `to` through the matching local monomial.
MonomialMatrix embed_block_map(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks,
                               const std::vector<std::pair<std::size_t, std::size_t>>& maps,
                               const std::vector<MonomialMatrix>& locals) {
  std::vector<std::size_t> sigma(n);
  std::vector<Value> scal(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& src = blocks[maps[k].first];
    const auto& dst = blocks[maps[k].second];
    const auto& loc = locals[k];
    for (std::size_t a = 0; a < src.size(); ++a) {
      sigma[src[a]] = dst[loc.sigma()[a]];
      scal[src[a]] = loc.scalings()[a];
    }
  }
  return {std::move(sigma), std::move(scal)};
}

Sigma assembled_sigma(const TropMatrix& a, PairMode mode, const SearchLimits& limits) {
  const auto part = class_partition(a, limits);
  std::vector<std::vector<std::size_t>> row_blocks, col_blocks;
  for (const auto& c : part.components) {
    row_blocks.push_back(c.rows);
    col_blocks.push_back(c.cols);
  }

  std::vector<MonomialMatrix> row_gens;
  std::vector<StabilizerElement> gens;
  std::uint64_t order = 1;
  for (const auto& cl : part.classes) {
    const auto& rep = part.components[cl.members.front()];
    const TropMatrix block = a.submatrix(rep.rows, rep.cols);
    const Sigma local = connected_sigma(block, mode, limits);
    const std::size_t h = cl.members.size();
    for (std::size_t k = 0; k < h; ++k) order = saturating_mul(order, local.order);
    for (std::size_t k = 2; k <= h; ++k) order = saturating_mul(order, k);

    // Σ of the representative block, acting on that block only.
    for (const auto& g : local.generators)
      row_gens.push_back(embed_block_map(a.rows(), row_blocks, {{cl.members[0], cl.members[0]}}, {g.p}));

    // Block permutations through the witnesses: block i goes to block π(i)
    // by (U^{1,i})⁻¹ U^{1,π(i)}.
    auto block_perm = [&](const std::vector<std::size_t>& pi) {
      std::vector<std::pair<std::size_t, std::size_t>> maps;
      std::vector<MonomialMatrix> locals;
      for (std::size_t i = 0; i < h; ++i) {
        maps.emplace_back(cl.members[i], cl.members[pi[i]]);
        locals.push_back(monomial_invert(cl.witnesses[i]) * cl.witnesses[pi[i]]);
      }
      row_gens.push_back(embed_block_map(a.rows(), row_blocks, maps, locals));
    };
    if (h >= 2) {
      std::vector<std::size_t> swap(h), cycle(h);
      for (std::size_t i = 0; i < h; ++i) {
        swap[i] = i;
        cycle[i] = (i + 1) % h;
      }
      std::swap(swap[0], swap[1]);
      block_perm(swap);
      if (h > 2) block_perm(cycle);
    }
  }

  for (const auto& p : row_gens) {
    std::optional<MonomialMatrix> q;
    if (mode == PairMode::commuting) {
      if (p.left_apply(a) == p.right_apply(a)) q = p;
    } else {
      q = solve_column_side(a, p);
    }
    if (!q) throw InternalError("assembled unit does not stabilize the matrix");
    const Value ev = monomial_eigenvalue(p);
    if (!ev.is_zero()) throw InternalError("assembled unit has non-zero eigenvalue");
    gens.push_back({p, *q, ev});
  }

  Sigma s;
  s.rows = a.rows();
  s.cols = a.cols();
  s.order = order;
  if (order <= limits.max_order) {
    const StabilizerElement id{MonomialMatrix::identity(a.rows()), MonomialMatrix::identity(a.cols()),
                               Value()};
    s.elements = close_elements(gens, id, limits.max_order + 1);
    if (s.elements.size() != order) throw InternalError("Σ closure disagrees with its order");
    s.generators = pick_generators(s.elements);
  } else {
    std::sort(gens.begin(), gens.end(), element_less);
    s.generators = std::move(gens);
  }
  return s;
}

}  // namespace

PermGroup Sigma::row_action() const {
  std::vector<Perm> gens;
  for (const auto& g : generators) gens.push_back(to_perm(g.p.sigma()));
  return {rows, std::move(gens)};
}

PermGroup Sigma::paired_action() const {
  std::vector<Perm> gens;
  for (const auto& g : generators) gens.push_back(paired_perm(g));
  return PermGroup::paired(rows, cols, std::move(gens));
}

std::optional<MonomialMatrix> solve_column_side(const TropMatrix& a, const MonomialMatrix& p) {
  const TropMatrix b = p.left_apply(a);
  const std::size_t m = a.cols();
  std::vector<std::size_t> tau(m);
  std::vector<Value> mu(m);
  std::vector<bool> used(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    bool found = false;
    for (std::size_t k = 0; k < m && !found; ++k) {
      if (used[k]) continue;
      std::optional<Value> shift;
      bool ok = true;
      for (std::size_t i = 0; i < a.rows() && ok; ++i) {
        if (a(i, j).is_finite() != b(i, k).is_finite()) ok = false;
        else if (a(i, j).is_finite()) {
          Value d = b(i, k).value() - a(i, j).value();
          if (shift && *shift != d) ok = false;
          else shift = std::move(d);
        }
      }
      if (ok && shift) {
        tau[j] = k;
        mu[j] = std::move(*shift);
        used[k] = true;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  MonomialMatrix q(std::move(tau), std::move(mu));
  if (q.right_apply(a) != b) return std::nullopt;
  return q;
}

Sigma stabilizer_pairs(const TropMatrix& a, const SearchLimits& limits) {
  if (!is_full_rank(a)) throw NotFullRank("stabilizer_pairs needs a full-rank matrix");
  if (connected_components(a).size() == 1) return connected_sigma(a, PairMode::general, limits);
  return assembled_sigma(a, PairMode::general, limits);
}

Sigma commuting_units(const TropMatrix& e, const SearchLimits& limits) {
  if (!e.is_square() || !is_idempotent(e)) throw NotIdempotent("commuting_units needs an idempotent");
  if (!is_full_rank(e)) throw NotFullRank("commuting_units needs a full-rank idempotent");
  if (connected_components(e).size() == 1) return connected_sigma(e, PairMode::commuting, limits);
  return assembled_sigma(e, PairMode::commuting, limits);
}

Normalization normalize_eigenvectors(const TropMatrix& a, const Sigma& sigma) {
  if (connected_components(a).size() != 1)
    throw HypothesisViolated("normalize_eigenvectors needs a connected bipartite graph");
  const std::size_t n = a.rows(), m = a.cols();
  const auto& gens = sigma.generators;

  // u_t is the scaling at (t, k) of any Σ element sending t to the orbit
  // representative k; walk the orbit backwards through the generators.
  std::vector<std::optional<Value>> u(n), v(m);
  for (std::size_t k = 0; k < n; ++k) {
    if (u[k]) continue;
    u[k] = Value();
    std::vector<std::size_t> queue{k};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t x = queue[q];
      for (const auto& g : gens) {
        const auto inv = monomial_invert(g.p);
        const std::size_t y = inv.sigma()[x];
        if (u[y]) continue;
        u[y] = g.p.scalings()[y] + *u[x];
        queue.push_back(y);
      }
    }
  }
  // v_t is the scaling at (k, t) of any Σ element with τ(k) = t.
  for (std::size_t k = 0; k < m; ++k) {
    if (v[k]) continue;
    v[k] = Value();
    std::vector<std::size_t> queue{k};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t x = queue[q];
      for (const auto& g : gens) {
        const std::size_t y = g.q.sigma()[x];
        if (v[y]) continue;
        v[y] = *v[x] + g.q.scalings()[x];
        queue.push_back(y);
      }
    }
  }
  std::vector<Value> neg_u, neg_v;
  for (auto& x : u) neg_u.push_back(-*x);
  for (auto& x : v) neg_v.push_back(-*x);

  Normalization out;
  out.u = MonomialMatrix::diagonal(neg_u);
  out.v = MonomialMatrix::diagonal(neg_v);
  out.b = out.v.right_apply(out.u.left_apply(a));

  const auto u_inv = monomial_invert(out.u);
  const auto v_inv = monomial_invert(out.v);
  auto transform = [&](const StabilizerElement& e) {
    StabilizerElement t{out.u * e.p * u_inv, v_inv * e.q * out.v, e.eigenvalue};
    if (!t.p.is_permutation() || !t.q.is_permutation())
      throw InternalError("normalization left a non-zero scaling");
    if (t.p.left_apply(out.b) != t.q.right_apply(out.b))
      throw InternalError("normalized pair does not stabilize B");
    return t;
  };
  out.sigma_b.order = sigma.order;
  out.sigma_b.rows = sigma.rows;
  out.sigma_b.cols = sigma.cols;
  for (const auto& e : sigma.generators) out.sigma_b.generators.push_back(transform(e));
  for (const auto& e : sigma.elements) out.sigma_b.elements.push_back(transform(e));
  return out;
}

Normalization normalize_eigenvectors(const TropMatrix& a, const SearchLimits& limits) {
  return normalize_eigenvectors(a, stabilizer_pairs(a, limits));
}

std::size_t GroupDescription::real_rank() const {
  std::size_t r = 0;
  for (const auto& f : factors) r += f.multiplicity;
  return r;
}

std::string GroupDescription::formula() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "  x  ";
    out += f.order == 1 ? std::string("R") : "(R x " + f.name + ")";
    if (f.multiplicity > 1) out += " wr S_" + std::to_string(f.multiplicity);
  }
  return out;
}

GroupDescription group_description(const TropMatrix& a, const SearchLimits& limits) {
  GroupDescription desc;
  desc.reduction = reduce_full_rank(a);
  const TropMatrix& z = desc.reduction.z;
  desc.partition = class_partition(z, limits);
  std::size_t unnamed = 0;
  for (const auto& cl : desc.partition.classes) {
    const auto& rep = desc.partition.components[cl.members.front()];
    const TropMatrix block = z.submatrix(rep.rows, rep.cols);
    const Sigma sigma = connected_sigma(block, PairMode::general, limits);
    const Normalization norm = normalize_eigenvectors(block, sigma);

    GroupFactor f;
    f.n = block.rows();
    f.m = block.cols();
    f.row_action = norm.sigma_b.row_action();
    f.paired_action = norm.sigma_b.paired_action();
    f.generators = norm.sigma_b.generators;
    f.order = sigma.order;
    f.multiplicity = cl.members.size();
    f.representative = cl.members.front();
    f.members = cl.members;
    f.normalized = norm.b;
    if (f.order == 1) {
      f.name = "1";
    } else {
      f.name = f.order <= 10'000 ? identify_group(f.row_action) : std::string();
      if (f.name.empty()) f.name = "G" + std::to_string(++unnamed);
    }
    desc.factors.push_back(std::move(f));
  }
  return desc;
}

GroupDescription maximal_subgroup(const TropMatrix& e, const SearchLimits& limits) {
  if (!e.is_square() || !is_idempotent(e)) throw NotIdempotent("maximal_subgroup needs an idempotent");
  GroupDescription desc = group_description(e, limits);
  desc.kind = DescriptionKind::maximal;
  return desc;
}

bool classification_conditions(const GroupDescription& desc, std::size_t n, std::size_t m) {
  std::size_t rows = 0, cols = 0, min_one = 0, small_trivial = 0;
  for (const auto& f : desc.factors) {
    rows += f.n * f.multiplicity;
    cols += f.m * f.multiplicity;
    const std::size_t side = std::min(f.n, f.m);
    if (side == 1) ++min_one;
    if (f.order == 1 && side <= 2) ++small_trivial;
    try {
      if (!is_paired_two_closed(f.paired_action)) return false;
      if (desc.kind == DescriptionKind::maximal && !is_two_closed(f.row_action)) return false;
    } catch (const NotFaithful&) {
      return false;
    }
  }
  return rows <= n && cols <= m && min_one <= 1 && small_trivial <= 2;
}

}  // namespace tropgroups
