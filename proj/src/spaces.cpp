#include "tropgroups/spaces.hpp"

#include "tropgroups/errors.hpp"

namespace tropgroups {

std::optional<SpanWitness> member(const std::vector<TropScalar>& x, const TropMatrix& a) {
  if (x.size() != a.rows()) throw DimensionMismatch("member: vector length differs from rows");
  SpanWitness w;
  w.coefficients.resize(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::optional<Value> best;
    bool blocked = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!a(i, j).is_finite()) continue;
      if (!x[i].is_finite()) {
        blocked = true;
        break;
      }
      Value d = x[i].value() - a(i, j).value();
      if (!best || d < *best) best = std::move(d);
    }
    if (!blocked && best) w.coefficients[j] = std::move(*best);
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    TropScalar acc;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = trop_add(acc, trop_mul(a(i, j), w.coefficients[j]));
    if (acc != x[i]) return std::nullopt;
  }
  return w;
}

bool col_space_equal(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows()) return false;
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!member(b.column(j), a)) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!member(a.column(j), b)) return false;
  return true;
}

bool row_space_equal(const TropMatrix& a, const TropMatrix& b) {
  return col_space_equal(a.transpose(), b.transpose());
}

bool h_related(const TropMatrix& a, const TropMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && col_space_equal(a, b) &&
         row_space_equal(a, b);
}

namespace {

bool is_scalar_multiple(const std::vector<TropScalar>& u, const std::vector<TropScalar>& v) {
  std::optional<Value> shift;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_finite() != v[i].is_finite()) return false;
    if (!u[i].is_finite()) continue;
    Value d = u[i].value() - v[i].value();
    if (shift && *shift != d) return false;
    shift = std::move(d);
  }
  return true;
}

}  // namespace

std::vector<std::size_t> extremal_columns(const TropMatrix& a) {
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.finite_in_column(j) == 0) continue;
    const auto col = a.column(j);
    bool duplicate = false;
    for (auto k : candidates)
      if (is_scalar_multiple(col, a.column(k))) {
        duplicate = true;
        break;
      }
    if (!duplicate) candidates.push_back(j);
  }
  std::vector<std::size_t> kept;
  for (auto j : candidates) {
    std::vector<std::size_t> others;
    for (auto k : candidates)
      if (k != j) others.push_back(k);
    std::vector<std::size_t> all_rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) all_rows[i] = i;
    if (others.empty() || !member(a.column(j), a.submatrix(all_rows, others))) kept.push_back(j);
  }
  return kept;
}

std::vector<std::size_t> extremal_rows(const TropMatrix& a) {
  return extremal_columns(a.transpose());
}

std::size_t column_rank(const TropMatrix& a) { return extremal_columns(a).size(); }
std::size_t row_rank(const TropMatrix& a) { return extremal_rows(a).size(); }

bool is_full_rank(const TropMatrix& a) {
  return column_rank(a) == a.cols() && row_rank(a) == a.rows();
}

Reduction reduce_full_rank(const TropMatrix& x) {
  if (x.all_neg_inf()) throw ZeroMatrix("matrix has no finite entry");
  Reduction r;
  r.row_keep = extremal_rows(x);
  std::vector<std::size_t> all_cols(x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) all_cols[j] = j;
  const TropMatrix y = x.submatrix(r.row_keep, all_cols);
  r.col_keep = extremal_columns(y);
  std::vector<std::size_t> y_rows(y.rows());
  for (std::size_t i = 0; i < y.rows(); ++i) y_rows[i] = i;
  r.z = y.submatrix(y_rows, r.col_keep);
  if (!is_full_rank(r.z)) throw InternalError("reduction did not reach full rank");
  return r;
}

}  // namespace tropgroups
