#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropgroups/semiring.hpp"

namespace tropgroups {

class TropMatrix {
 public:
  TropMatrix() = default;
  // All entries −∞.
  TropMatrix(std::size_t rows, std::size_t cols);
  TropMatrix(std::size_t rows, std::size_t cols, std::vector<TropScalar> entries);
  static TropMatrix from_rows(const std::vector<std::vector<TropScalar>>& rows);
  static TropMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const TropScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  TropScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<TropScalar>& entries() const { return entries_; }

  std::vector<TropScalar> row(std::size_t i) const;
  std::vector<TropScalar> column(std::size_t j) const;
  std::size_t finite_in_row(std::size_t i) const;
  std::size_t finite_in_column(std::size_t j) const;
  bool all_neg_inf() const;

  TropMatrix transpose() const;
  TropMatrix submatrix(const std::vector<std::size_t>& row_idx,
                       const std::vector<std::size_t>& col_idx) const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) = default;

  // One row per line, entries separated by single spaces.
  std::string to_string() const;
  // Rows separated by newlines; '#' comments and blank lines ignored.
  static TropMatrix parse(std::string_view text);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TropScalar> entries_;
};

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);
bool is_idempotent(const TropMatrix& e);
// Squares until a fixed point; throws NoIdempotentPower after max_squarings.
TropMatrix idempotent_power(const TropMatrix& a, int max_squarings = 64);

// A unit matrix: row i has its single finite entry scalings[i] in column sigma[i].
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(std::vector<std::size_t> sigma, std::vector<Value> scalings);
  static MonomialMatrix identity(std::size_t n);
  static MonomialMatrix diagonal(std::vector<Value> scalings);
  static std::optional<MonomialMatrix> from_matrix(const TropMatrix& m);

  std::size_t degree() const { return sigma_.size(); }
  const std::vector<std::size_t>& sigma() const { return sigma_; }
  const std::vector<Value>& scalings() const { return scalings_; }
  bool is_permutation() const;  // all scalings zero
  bool is_identity() const;

  TropMatrix to_matrix() const;
  // P ⊗ A: row i of the result is scalings[i] + row sigma[i] of A.
  TropMatrix left_apply(const TropMatrix& a) const;
  // A ⊗ P: column sigma[k] of the result is column k of A plus scalings[k].
  TropMatrix right_apply(const TropMatrix& a) const;
  MonomialMatrix shifted(const Value& delta) const;  // delta ⊗ P

  friend MonomialMatrix operator*(const MonomialMatrix& p, const MonomialMatrix& q);
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) = default;
  friend auto operator<=>(const MonomialMatrix& a, const MonomialMatrix& b) = default;

  std::string to_string() const;

 private:
  std::vector<std::size_t> sigma_;
  std::vector<Value> scalings_;
};

MonomialMatrix monomial_invert(const MonomialMatrix& p);
// Common cycle mean; throws MultipleEigenvalues if the cycle means differ.
Value monomial_eigenvalue(const MonomialMatrix& p);

}  // namespace tropgroups
