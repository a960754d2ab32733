#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tropgroups/errors.hpp"
#include "tropgroups/spaces.hpp"
#include "tropgroups/stabilizer.hpp"

using namespace tropgroups;
using oracle::mat;

namespace {

const char* kE = "0 -1+e1\n-1+e2 0";
const char* kF =
    "0 -1+e1 -1+e3 -1+e1\n"
    "-1+e2 0 -1+e2 -1+e3\n"
    "-1+e3 -1+e1 0 -1+e1\n"
    "-1+e2 -1+e3 -1+e2 0";

void check_element(const TropMatrix& a, const StabilizerElement& e) {
  CHECK(mat_mul(e.p.to_matrix(), a) == mat_mul(a, e.q.to_matrix()));
  CHECK(monomial_eigenvalue(e.p) == e.eigenvalue);
  CHECK(e.eigenvalue.is_zero());
}

}  // namespace

TEST_CASE("stabilizer agrees with brute force over S_n x S_m") {
  std::mt19937 rng(2024);
  int tested = 0;
  while (tested < 120) {
    auto a = oracle::random_matrix(rng, 3, 3, -2, 2, 0.3);
    if (!oracle::connected_support(a) || !is_full_rank(a)) continue;
    ++tested;
    const auto brute = oracle::sigma_brute(a);
    const Sigma s = stabilizer_pairs(a);
    REQUIRE(s.complete());
    REQUIRE(s.order == brute.size());
    for (const auto& b : brute) {
      bool found = false;
      for (const auto& e : s.elements)
        if (e.p.to_matrix() == b.p && e.q.to_matrix() == b.q) found = true;
      CHECK(found);
    }
    for (const auto& e : s.elements) check_element(a, e);
  }
}

TEST_CASE("scalar shifts move the eigenvalue and stay in G_A") {
  const TropMatrix a = mat(kE);
  const Sigma s = stabilizer_pairs(a);
  for (const auto& e : s.elements) {
    const MonomialMatrix shifted = e.p.shifted(Value(3));
    CHECK(monomial_eigenvalue(shifted) == Value(3));
    CHECK(shifted.left_apply(a) == e.q.shifted(Value(3)).right_apply(a));
  }
}

TEST_CASE("two-by-two idempotent E with a transposition") {
  const TropMatrix e = mat(kE);
  const Sigma s = stabilizer_pairs(e);
  CHECK(s.order == 2);
  for (const auto& x : s.elements) check_element(e, x);
  // P = [[-inf, a], [b, -inf]] commutes with E after removing its eigenvalue
  const MonomialMatrix p({1, 0}, {Value::parse("-1+e1"), Value::parse("-1+e2")});
  CHECK(mat_mul(p.to_matrix(), e) == mat_mul(e, p.to_matrix()));
  const MonomialMatrix p0 = p.shifted(-monomial_eigenvalue(p));
  bool found = false;
  for (const auto& x : s.elements) found = found || (x.p == p0 && x.q == p0);
  CHECK(found);

  const Sigma c = commuting_units(e);
  CHECK(c.elements == s.elements);
}

TEST_CASE("four-by-four idempotent F with a dihedral group") {
  const TropMatrix f = mat(kF);
  const Sigma s = stabilizer_pairs(f);
  CHECK(s.order == 8);
  CHECK(commuting_units(f).elements == s.elements);
  const auto d = group_description(f);
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0].name == "D4");
  CHECK(d.formula() == "(R x D4)");
}

TEST_CASE("commuting units need an idempotent") {
  CHECK_THROWS_AS(commuting_units(mat("1 0\n0 1")), NotIdempotent);
  CHECK_THROWS_AS(maximal_subgroup(mat("1 0\n0 1")), NotIdempotent);
}

TEST_CASE("column side is determined by the row side") {
  const TropMatrix f = mat(kF);
  for (const auto& e : stabilizer_pairs(f).elements) {
    const auto q = solve_column_side(f, e.p);
    REQUIRE(q.has_value());
    CHECK(*q == e.q);
  }
  // a row swap of E is not balanced by any column unit unless it is scaled
  CHECK_FALSE(solve_column_side(mat("0 -3\n-1 0"), MonomialMatrix({1, 0}, {Value(0), Value(0)})));
}

TEST_CASE("eigenvector normalisation turns Σ into permutation pairs") {
  for (const char* text : {kE, kF, "0 1 -inf\n-inf 0 2\n3 -inf 0"}) {
    const TropMatrix a = mat(text);
    const Normalization n = normalize_eigenvectors(a);
    CHECK(n.b == n.v.right_apply(n.u.left_apply(a)));
    CHECK(n.sigma_b.order == stabilizer_pairs(a).order);
    for (const auto& e : n.sigma_b.elements) {
      CHECK(e.p.is_permutation());
      CHECK(e.q.is_permutation());
      CHECK(e.p.left_apply(n.b) == e.q.right_apply(n.b));
    }
  }
  CHECK_THROWS_AS(normalize_eigenvectors(mat("0 -inf\n-inf 0")), HypothesisViolated);
}

TEST_CASE("descriptions of block matrices") {
  const auto id3 = group_description(TropMatrix::identity(3));
  REQUIRE(id3.factors.size() == 1);
  CHECK(id3.factors[0].order == 1);
  CHECK(id3.factors[0].multiplicity == 3);
  CHECK(id3.formula() == "R wr S_3");
  CHECK(id3.real_rank() == 3);

  const TropMatrix ee = mat(
      "0 -1+e1 -inf -inf\n-1+e2 0 -inf -inf\n"
      "-inf -inf 2 1+e1\n-inf -inf 1+e2 2");
  const auto d = group_description(ee);
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0].multiplicity == 2);
  CHECK(d.formula() == "(R x S2) wr S_2");
  const Sigma s = stabilizer_pairs(ee);
  CHECK(s.order == 8);
  REQUIRE(s.complete());
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  for (const auto& e : s.elements) {
    CHECK(mat_mul(e.p.to_matrix(), ee) == mat_mul(ee, e.q.to_matrix()));
    seen.insert({e.p.sigma(), e.q.sigma()});
  }
  CHECK(seen.size() == 8);

  const auto two = group_description(mat("0 -inf\n-inf 0"));
  CHECK(two.formula() == "R wr S_2");
  const auto mixed = group_description(mat("0 -inf -inf\n-inf 0 -1+e1\n-inf -1+e2 0"));
  CHECK(mixed.formula() == "R  x  (R x S2)");
}

TEST_CASE("classification conditions on descriptions") {
  CHECK(classification_conditions(group_description(mat(kF)), 4, 4));
  CHECK(classification_conditions(group_description(TropMatrix::identity(3)), 3, 3));
  const auto d = maximal_subgroup(mat(kE));
  CHECK(d.kind == DescriptionKind::maximal);
  CHECK(classification_conditions(d, 2, 2));
}

TEST_CASE("budgets are enforced") {
  SearchLimits tiny;
  tiny.max_nodes = 1;
  CHECK_THROWS_AS(stabilizer_pairs(mat(kF), tiny), SearchBudgetExceeded);
}

TEST_CASE("thread count does not change the result") {
  SearchLimits one, four;
  four.threads = 4;
  const TropMatrix f = mat(kF);
  CHECK(stabilizer_pairs(f, one).elements == stabilizer_pairs(f, four).elements);
}
