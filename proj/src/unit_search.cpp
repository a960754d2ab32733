#include "tropgroups/unit_search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <thread>

#include "tropgroups/errors.hpp"

namespace tropgroups {

namespace {

// Difference vector of two lines modulo a common shift, plus counts of the
// -inf patterns.  Units preserve it up to relabelling.
struct PairProfile {
  std::vector<Value> diffs;
  std::uint32_t fin_inf = 0;
  std::uint32_t inf_fin = 0;
  std::uint32_t inf_inf = 0;
  friend auto operator<=>(const PairProfile&, const PairProfile&) = default;
  friend bool operator==(const PairProfile&, const PairProfile&) = default;
};

struct LineProfile {
  std::size_t finite = 0;
  std::vector<PairProfile> pairs;
  friend auto operator<=>(const LineProfile&, const LineProfile&) = default;
  friend bool operator==(const LineProfile&, const LineProfile&) = default;
};

PairProfile pair_profile(const TropMatrix& x, std::size_t i, std::size_t k) {
  PairProfile p;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const bool fi = x(i, j).is_finite(), fk = x(k, j).is_finite();
    if (fi && fk) p.diffs.push_back(x(i, j).value() - x(k, j).value());
    else if (fi) ++p.fin_inf;
    else if (fk) ++p.inf_fin;
    else ++p.inf_inf;
  }
  std::sort(p.diffs.begin(), p.diffs.end());
  if (!p.diffs.empty()) {
    const Value base = p.diffs.front();
    for (auto& d : p.diffs) d -= base;
  }
  return p;
}

// Profiles of every ordered pair of rows; entry [i * rows + k], diagonal empty.
std::vector<PairProfile> pair_profiles(const TropMatrix& x) {
  std::vector<PairProfile> out(x.rows() * x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.rows(); ++k)
      if (k != i) out[i * x.rows() + k] = pair_profile(x, i, k);
  return out;
}

std::vector<LineProfile> row_profiles(const TropMatrix& x, const std::vector<PairProfile>& pairs) {
  std::vector<LineProfile> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    out[i].finite = x.finite_in_row(i);
    for (std::size_t k = 0; k < x.rows(); ++k)
      if (k != i) out[i].pairs.push_back(pairs[i * x.rows() + k]);
    std::sort(out[i].pairs.begin(), out[i].pairs.end());
  }
  return out;
}

// Integer class ids shared between the profiles of both matrices.
template <typename P>
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> profile_ids(const std::vector<P>& pa,
                                                                              const std::vector<P>& pb) {
  std::map<P, std::uint32_t> ids;
  auto id_of = [&](const P& p) {
    return ids.try_emplace(p, static_cast<std::uint32_t>(ids.size())).first->second;
  };
  std::vector<std::uint32_t> ia, ib;
  for (const auto& p : pa) ia.push_back(id_of(p));
  for (const auto& p : pb) ib.push_back(id_of(p));
  return {ia, ib};
}

// Line and line-pair class ids for the rows of a and b.
struct LineIds {
  std::vector<std::uint32_t> line_a, line_b;
  std::vector<std::uint32_t> pair_a, pair_b;  // [i * rows + k]
};

LineIds line_ids(const TropMatrix& a, const TropMatrix& b) {
  LineIds out;
  const auto pa = pair_profiles(a), pb = pair_profiles(b);
  std::tie(out.line_a, out.line_b) = profile_ids(row_profiles(a, pa), row_profiles(b, pb));
  std::tie(out.pair_a, out.pair_b) = profile_ids(pa, pb);
  return out;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Vertex {
  bool is_row;
  std::size_t index;
  bool anchor_is_row;
  std::size_t anchor = kNone;  // an earlier vertex joined by a finite entry of a
};

class Search {
 public:
  Search(const TropMatrix& a, const TropMatrix& b, PairMode mode, bool first_only,
         std::uint64_t max_nodes, std::atomic<std::uint64_t>& nodes)
      : a_(a), b_(b), n_(a.rows()), m_(a.cols()), mode_(mode), first_only_(first_only),
        max_nodes_(max_nodes), nodes_(nodes) {
    rows_ = line_ids(a, b);
    cols_ = line_ids(a.transpose(), b.transpose());
    sigma_.assign(n_, kNone);
    lambda_.assign(n_, Value());
    row_used_.assign(n_, false);
    tau_.assign(m_, kNone);
    mu_.assign(m_, Value());
    col_used_.assign(m_, false);
    if (mode_ == PairMode::general) build_general_order();
    else build_commuting_order();
  }

  // Explore with root candidates restricted to those with index % stride == offset.
  std::vector<UnitPair> run(std::size_t stride = 1, std::size_t offset = 0) {
    stride_ = stride;
    offset_ = offset;
    results_.clear();
    if (mode_ == PairMode::general) general_step(0);
    else commuting_step(0);
    return std::move(results_);
  }

 private:
  void count_node() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > max_nodes_)
      throw SearchBudgetExceeded("unit search exceeded " + std::to_string(max_nodes_) + " nodes");
  }

  bool root_allowed(std::size_t depth, std::size_t candidate) const {
    return depth != 0 || candidate % stride_ == offset_;
  }

  // Most constrained first: the next vertex has the most finite entries
  // joining it to vertices already placed, preferring the side placed less
  // often.  Each connected piece starts at its fullest column.
  void build_general_order() {
    std::vector<bool> placed_row(n_, false), placed_col(m_, false);
    std::vector<std::size_t> links_row(n_, 0), links_col(m_, 0);
    std::size_t rows_placed = 0, cols_placed = 0;
    auto place = [&](const Vertex& v) {
      order_.push_back(v);
      if (v.is_row) {
        placed_row[v.index] = true;
        ++rows_placed;
        for (std::size_t j = 0; j < m_; ++j)
          if (a_(v.index, j).is_finite()) ++links_col[j];
      } else {
        placed_col[v.index] = true;
        ++cols_placed;
        for (std::size_t i = 0; i < n_; ++i)
          if (a_(i, v.index).is_finite()) ++links_row[i];
      }
    };
    while (order_.size() < n_ + m_) {
      Vertex best{false, kNone, false, kNone};
      std::size_t best_links = 0;
      bool best_side_short = false;
      auto consider = [&](bool is_row, std::size_t idx, std::size_t links) {
        if (links == 0) return;
        const bool side_short = is_row ? rows_placed <= cols_placed : cols_placed < rows_placed;
        if (best.index == kNone || links > best_links ||
            (links == best_links && side_short && !best_side_short)) {
          best = {is_row, idx, false, kNone};
          best_links = links;
          best_side_short = side_short;
        }
      };
      for (std::size_t j = 0; j < m_; ++j)
        if (!placed_col[j]) consider(false, j, links_col[j]);
      for (std::size_t i = 0; i < n_; ++i)
        if (!placed_row[i]) consider(true, i, links_row[i]);
      if (best.index == kNone) {
        // a new connected piece
        for (std::size_t j = 0; j < m_; ++j)
          if (!placed_col[j] && (best.index == kNone || a_.finite_in_column(j) > best_links)) {
            best = {false, j, false, kNone};
            best_links = a_.finite_in_column(j);
          }
        if (best.index == kNone)
          for (std::size_t i = 0; i < n_; ++i)
            if (!placed_row[i]) {
              best = {true, i, false, kNone};
              break;
            }
        place(best);
        continue;
      }
      // anchor: the earliest placed neighbour
      for (const auto& u : order_)
        if (u.is_row != best.is_row &&
            (best.is_row ? a_(best.index, u.index) : a_(u.index, best.index)).is_finite()) {
          best.anchor = u.index;
          best.anchor_is_row = u.is_row;
          break;
        }
      place(best);
    }
  }

  void build_commuting_order() {
    std::vector<bool> seen(n_, false);
    auto weight = [&](std::size_t i) { return a_.finite_in_row(i) + a_.finite_in_column(i); };
    std::size_t remaining = n_;
    while (remaining > 0) {
      std::size_t root = kNone;
      for (std::size_t i = 0; i < n_; ++i)
        if (!seen[i] && (root == kNone || weight(i) > weight(root))) root = i;
      seen[root] = true;
      std::vector<Vertex> queue{{true, root, true, kNone}};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const Vertex v = queue[q];
        order_.push_back(v);
        --remaining;
        for (std::size_t u = 0; u < n_; ++u)
          if (!seen[u] && (a_(v.index, u).is_finite() || a_(u, v.index).is_finite())) {
            seen[u] = true;
            queue.push_back({true, u, true, v.index});
          }
      }
    }
  }

  void record() {
    MonomialMatrix p(sigma_, lambda_);
    if (mode_ == PairMode::commuting) {
      results_.push_back({p, p});
    } else {
      results_.push_back({std::move(p), MonomialMatrix(tau_, mu_)});
    }
  }

  bool general_step(std::size_t depth) {
    if (depth == order_.size()) {
      record();
      return first_only_;
    }
    const Vertex& v = order_[depth];
    if (v.is_row) {
      const std::size_t i = v.index;
      for (std::size_t c = 0; c < n_; ++c) {
        if (row_used_[c] || rows_.line_a[i] != rows_.line_b[c] || !root_allowed(depth, c)) continue;
        count_node();
        Value lam;
        if (v.anchor != kNone) {
          const auto& bv = b_(c, tau_[v.anchor]);
          if (!bv.is_finite()) continue;
          lam = a_(i, v.anchor).value() + mu_[v.anchor] - bv.value();
        }
        if (!row_consistent(i, c, lam)) continue;
        sigma_[i] = c;
        lambda_[i] = std::move(lam);
        row_used_[c] = true;
        assigned_rows_.push_back(i);
        const bool done = general_step(depth + 1);
        assigned_rows_.pop_back();
        row_used_[c] = false;
        sigma_[i] = kNone;
        if (done) return true;
      }
    } else {
      const std::size_t j = v.index;
      for (std::size_t c = 0; c < m_; ++c) {
        if (col_used_[c] || cols_.line_a[j] != cols_.line_b[c] || !root_allowed(depth, c)) continue;
        count_node();
        Value mu;
        if (v.anchor != kNone) {
          const auto& bv = b_(sigma_[v.anchor], c);
          if (!bv.is_finite()) continue;
          mu = lambda_[v.anchor] + bv.value() - a_(v.anchor, j).value();
        }
        if (!col_consistent(j, c, mu)) continue;
        tau_[j] = c;
        mu_[j] = std::move(mu);
        col_used_[c] = true;
        assigned_cols_.push_back(j);
        const bool done = general_step(depth + 1);
        assigned_cols_.pop_back();
        col_used_[c] = false;
        tau_[j] = kNone;
        if (done) return true;
      }
    }
    return false;
  }

  // λ + b(c, τ(j)) = a(i, j) + μ_j for every assigned column j.
  bool row_consistent(std::size_t i, std::size_t c, const Value& lam) const {
    for (auto u : assigned_rows_)
      if (rows_.pair_a[i * n_ + u] != rows_.pair_b[c * n_ + sigma_[u]]) return false;
    for (auto j : assigned_cols_) {
      const auto& x = a_(i, j);
      const auto& y = b_(c, tau_[j]);
      if (x.is_finite() != y.is_finite()) return false;
      if (x.is_finite() && lam + y.value() != x.value() + mu_[j]) return false;
    }
    return true;
  }

  bool col_consistent(std::size_t j, std::size_t c, const Value& mu) const {
    for (auto u : assigned_cols_)
      if (cols_.pair_a[j * m_ + u] != cols_.pair_b[c * m_ + tau_[u]]) return false;
    for (auto i : assigned_rows_) {
      const auto& x = a_(i, j);
      const auto& y = b_(sigma_[i], c);
      if (x.is_finite() != y.is_finite()) return false;
      if (x.is_finite() && lambda_[i] + y.value() != x.value() + mu) return false;
    }
    return true;
  }

  bool commuting_step(std::size_t depth) {
    if (depth == order_.size()) {
      record();
      return first_only_;
    }
    const Vertex& v = order_[depth];
    const std::size_t i = v.index;
    for (std::size_t c = 0; c < n_; ++c) {
      if (row_used_[c] || rows_.line_a[i] != rows_.line_b[c] || cols_.line_a[i] != cols_.line_b[c] ||
          !root_allowed(depth, c))
        continue;
      count_node();
      Value lam;
      if (v.anchor != kNone) {
        const std::size_t p = v.anchor;
        if (a_(p, i).is_finite()) {
          const auto& bv = b_(sigma_[p], c);
          if (!bv.is_finite()) continue;
          lam = lambda_[p] + bv.value() - a_(p, i).value();
        } else {
          const auto& bv = b_(c, sigma_[p]);
          if (!bv.is_finite()) continue;
          lam = a_(i, p).value() + lambda_[p] - bv.value();
        }
      }
      if (!commuting_consistent(i, c, lam)) continue;
      sigma_[i] = c;
      lambda_[i] = std::move(lam);
      row_used_[c] = true;
      assigned_rows_.push_back(i);
      const bool done = commuting_step(depth + 1);
      assigned_rows_.pop_back();
      row_used_[c] = false;
      sigma_[i] = kNone;
      if (done) return true;
    }
    return false;
  }

  bool commuting_consistent(std::size_t i, std::size_t c, const Value& lam) const {
    if (a_(i, i) != b_(c, c)) return false;
    for (auto u : assigned_rows_) {
      if (rows_.pair_a[i * n_ + u] != rows_.pair_b[c * n_ + sigma_[u]]) return false;
      if (cols_.pair_a[i * n_ + u] != cols_.pair_b[c * n_ + sigma_[u]]) return false;
      const auto& x = a_(i, u);
      const auto& y = b_(c, sigma_[u]);
      if (x.is_finite() != y.is_finite()) return false;
      if (x.is_finite() && lam + y.value() != x.value() + lambda_[u]) return false;
      const auto& x2 = a_(u, i);
      const auto& y2 = b_(sigma_[u], c);
      if (x2.is_finite() != y2.is_finite()) return false;
      if (x2.is_finite() && lambda_[u] + y2.value() != x2.value() + lam) return false;
    }
    return true;
  }

  const TropMatrix& a_;
  const TropMatrix& b_;
  std::size_t n_, m_;
  PairMode mode_;
  bool first_only_;
  std::uint64_t max_nodes_;
  std::atomic<std::uint64_t>& nodes_;
  std::size_t stride_ = 1, offset_ = 0;

  LineIds rows_, cols_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> sigma_, tau_;
  std::vector<Value> lambda_, mu_;
  std::vector<bool> row_used_, col_used_;
  std::vector<std::size_t> assigned_rows_, assigned_cols_;
  std::vector<UnitPair> results_;
};

bool pair_less(const UnitPair& x, const UnitPair& y) {
  if (x.p.sigma() != y.p.sigma()) return x.p.sigma() < y.p.sigma();
  return x.q.sigma() < y.q.sigma();
}

}  // namespace

std::vector<UnitPair> search_unit_pairs(const TropMatrix& a, const TropMatrix& b, PairMode mode,
                                        bool first_only, const SearchLimits& limits) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("unit search needs matrices of equal shape");
  if (mode == PairMode::commuting && !a.is_square())
    throw DimensionMismatch("commuting unit search needs square matrices");

  std::atomic<std::uint64_t> nodes{0};
  std::vector<UnitPair> out;
  const unsigned threads = std::max(1u, limits.threads);
  if (threads == 1 || first_only) {
    Search s(a, b, mode, first_only, limits.max_nodes, nodes);
    out = s.run();
  } else {
    std::vector<std::vector<UnitPair>> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          Search s(a, b, mode, false, limits.max_nodes, nodes);
          parts[t] = s.run(threads, t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

}  // namespace tropgroups
