#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "tropgroups/errors.hpp"
#include "tropgroups/spaces.hpp"

using namespace tropgroups;
using oracle::mat;

namespace {

TropScalar combine_row(const TropMatrix& a, std::size_t i, const std::vector<TropScalar>& c) {
  TropScalar s;
  for (std::size_t j = 0; j < a.cols(); ++j) s = trop_add(s, trop_mul(a(i, j), c[j]));
  return s;
}

}  // namespace

TEST_CASE("membership agrees with the candidate-grid oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 400; ++t) {
    const auto a = oracle::random_matrix(rng, 3, 3, -2, 2, 0.25);
    std::vector<TropScalar> x(3);
    if (coin(rng)) {
      // a genuine combination
      const auto c = oracle::random_matrix(rng, 3, 1, -2, 2, 0.3);
      for (std::size_t i = 0; i < 3; ++i) x[i] = combine_row(a, i, c.column(0));
    } else {
      const auto r = oracle::random_matrix(rng, 3, 1, -2, 2, 0.2);
      x = r.column(0);
    }
    const auto w = member(x, a);
    REQUIRE(w.has_value() == oracle::member_brute(x, a));
    if (w) {
      for (std::size_t i = 0; i < 3; ++i) CHECK(combine_row(a, i, w->coefficients) == x[i]);
    }
  }
}

TEST_CASE("worked example ranks and reduction") {
  const TropMatrix a = mat("0 0 -inf -inf\n-inf 1 -inf -inf\n-inf -inf 1 0");
  CHECK(column_rank(a) == 3);
  CHECK(row_rank(a) == 3);
  CHECK(extremal_columns(a) == std::vector<std::size_t>{0, 1, 2});
  const Reduction r = reduce_full_rank(a);
  CHECK(r.z == mat("0 0 -inf\n-inf 1 -inf\n-inf -inf 1"));
  CHECK(r.col_keep == std::vector<std::size_t>{0, 1, 2});
  CHECK(is_full_rank(r.z));
  CHECK_FALSE(is_full_rank(a));
}

TEST_CASE("extremal columns keep the earliest of proportional columns") {
  const TropMatrix a = mat("1 0 2\n2 1 3");
  CHECK(extremal_columns(a) == std::vector<std::size_t>{0});
  CHECK(extremal_columns(mat("-inf 0\n-inf 1")) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(reduce_full_rank(mat("-inf -inf\n-inf -inf")), ZeroMatrix);
}

TEST_CASE("Green's relations by column and row spaces") {
  const TropMatrix a = mat("0 -inf\n-inf 0");
  const TropMatrix b = mat("-inf 3\n1 -inf");
  CHECK(col_space_equal(a, b));
  CHECK(row_space_equal(a, b));
  CHECK(h_related(a, b));
  CHECK_FALSE(col_space_equal(a, mat("0 0\n-inf 0")));
}

TEST_CASE("reduction is H-related to its input's spaces up to isomorphism") {
  // the reduced matrix generates the same column space as the kept rows
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    auto a = oracle::random_matrix(rng, 4, 4, -2, 2, 0.3);
    if (a.all_neg_inf()) continue;
    const Reduction r = reduce_full_rank(a);
    CHECK(is_full_rank(r.z));
    const TropMatrix rows = a.submatrix(r.row_keep, [&] {
      std::vector<std::size_t> all(a.cols());
      for (std::size_t j = 0; j < a.cols(); ++j) all[j] = j;
      return all;
    }());
    for (std::size_t j = 0; j < rows.cols(); ++j) CHECK(member(rows.column(j), r.z).has_value());
    for (std::size_t j = 0; j < r.z.cols(); ++j) CHECK(member(r.z.column(j), rows).has_value());
  }
}
