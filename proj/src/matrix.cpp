#include "tropgroups/matrix.hpp"

#include <sstream>

#include "tropgroups/errors.hpp"

namespace tropgroups {

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, std::vector<TropScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw DimensionMismatch("entry count does not match shape");
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<TropScalar>>& rows) {
  if (rows.empty()) return {};
  TropMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Value();
  return m;
}

std::vector<TropScalar> TropMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<TropScalar> TropMatrix::column(std::size_t j) const {
  std::vector<TropScalar> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

std::size_t TropMatrix::finite_in_row(std::size_t i) const {
  std::size_t n = 0;
  for (std::size_t j = 0; j < cols_; ++j) n += (*this)(i, j).is_finite();
  return n;
}

std::size_t TropMatrix::finite_in_column(std::size_t j) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows_; ++i) n += (*this)(i, j).is_finite();
  return n;
}

bool TropMatrix::all_neg_inf() const {
  for (const auto& x : entries_)
    if (x.is_finite()) return false;
  return true;
}

TropMatrix TropMatrix::transpose() const {
  TropMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

TropMatrix TropMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
  TropMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t a = 0; a < row_idx.size(); ++a)
    for (std::size_t b = 0; b < col_idx.size(); ++b) s(a, b) = (*this)(row_idx[a], col_idx[b]);
  return s;
}

std::string TropMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += (*this)(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

TropMatrix TropMatrix::parse(std::string_view text) {
  std::vector<std::vector<TropScalar>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<TropScalar> row;
    std::string tok;
    while (tokens >> tok) row.push_back(TropScalar::parse(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix has no rows");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("rows have different lengths");
  return from_rows(rows);
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  TropMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (!aik.is_finite()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& bkj = b(k, j);
        if (!bkj.is_finite()) continue;
        Value s = aik.value() + bkj.value();
        if (!c(i, j).is_finite() || c(i, j).value() < s) c(i, j) = std::move(s);
      }
    }
  return c;
}

bool is_idempotent(const TropMatrix& e) {
  if (!e.is_square()) throw DimensionMismatch("is_idempotent: matrix is not square");
  return mat_mul(e, e) == e;
}

TropMatrix idempotent_power(const TropMatrix& a, int max_squarings) {
  if (!a.is_square()) throw DimensionMismatch("idempotent_power: matrix is not square");
  TropMatrix cur = a;
  for (int step = 0; step <= max_squarings; ++step) {
    TropMatrix sq = mat_mul(cur, cur);
    if (sq == cur) return cur;
    cur = std::move(sq);
  }
  throw NoIdempotentPower("no idempotent power within " + std::to_string(max_squarings) +
                          " squarings");
}

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> sigma, std::vector<Value> scalings)
    : sigma_(std::move(sigma)), scalings_(std::move(scalings)) {
  if (sigma_.size() != scalings_.size())
    throw DimensionMismatch("monomial: permutation and scalings differ in length");
  std::vector<bool> seen(sigma_.size(), false);
  for (auto s : sigma_) {
    if (s >= sigma_.size() || seen[s]) throw std::invalid_argument("monomial: not a permutation");
    seen[s] = true;
  }
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
  return {std::move(sigma), std::vector<Value>(n)};
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<Value> scalings) {
  auto p = identity(scalings.size());
  p.scalings_ = std::move(scalings);
  return p;
}

std::optional<MonomialMatrix> MonomialMatrix::from_matrix(const TropMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<std::size_t> sigma(n);
  std::vector<Value> scal(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (m.finite_in_row(i) != 1) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j).is_finite()) {
        if (used[j]) return std::nullopt;
        used[j] = true;
        sigma[i] = j;
        scal[i] = m(i, j).value();
      }
  }
  return MonomialMatrix(std::move(sigma), std::move(scal));
}

bool MonomialMatrix::is_permutation() const {
  for (const auto& s : scalings_)
    if (!s.is_zero()) return false;
  return true;
}

bool MonomialMatrix::is_identity() const {
  for (std::size_t i = 0; i < sigma_.size(); ++i)
    if (sigma_[i] != i) return false;
  return is_permutation();
}

TropMatrix MonomialMatrix::to_matrix() const {
  TropMatrix m(degree(), degree());
  for (std::size_t i = 0; i < degree(); ++i) m(i, sigma_[i]) = scalings_[i];
  return m;
}

TropMatrix MonomialMatrix::left_apply(const TropMatrix& a) const {
  if (a.rows() != degree()) throw DimensionMismatch("left_apply: degree mismatch");
  TropMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < degree(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = trop_mul(scalings_[i], a(sigma_[i], j));
  return r;
}

TropMatrix MonomialMatrix::right_apply(const TropMatrix& a) const {
  if (a.cols() != degree()) throw DimensionMismatch("right_apply: degree mismatch");
  TropMatrix r(a.rows(), a.cols());
  for (std::size_t k = 0; k < degree(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, sigma_[k]) = trop_mul(a(i, k), scalings_[k]);
  return r;
}

MonomialMatrix MonomialMatrix::shifted(const Value& delta) const {
  MonomialMatrix r = *this;
  for (auto& s : r.scalings_) s += delta;
  return r;
}

MonomialMatrix operator*(const MonomialMatrix& p, const MonomialMatrix& q) {
  if (p.degree() != q.degree()) throw DimensionMismatch("monomial product: degree mismatch");
  const std::size_t n = p.degree();
  std::vector<std::size_t> sigma(n);
  std::vector<Value> scal(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = p.sigma_[i];
    sigma[i] = q.sigma_[k];
    scal[i] = p.scalings_[i] + q.scalings_[k];
  }
  return {std::move(sigma), std::move(scal)};
}

std::string MonomialMatrix::to_string() const { return to_matrix().to_string(); }

MonomialMatrix monomial_invert(const MonomialMatrix& p) {
  const std::size_t n = p.degree();
  std::vector<std::size_t> sigma(n);
  std::vector<Value> scal(n);
  for (std::size_t i = 0; i < n; ++i) {
    sigma[p.sigma()[i]] = i;
    scal[p.sigma()[i]] = -p.scalings()[i];
  }
  return {std::move(sigma), std::move(scal)};
}

Value monomial_eigenvalue(const MonomialMatrix& p) {
  const std::size_t n = p.degree();
  if (n == 0) throw DimensionMismatch("eigenvalue of an empty monomial matrix");
  std::vector<bool> seen(n, false);
  std::optional<Value> mean;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Value sum;
    std::int64_t len = 0;
    for (std::size_t i = start; !seen[i]; i = p.sigma()[i]) {
      seen[i] = true;
      sum += p.scalings()[i];
      ++len;
    }
    Value m = value_div_int(sum, len);
    if (mean && *mean != m)
      throw MultipleEigenvalues("cycle means " + mean->to_string() + " and " + m.to_string());
    mean = std::move(m);
  }
  return *mean;
}

}  // namespace tropgroups
