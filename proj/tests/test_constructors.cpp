#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "tropgroups/constructors.hpp"
#include "tropgroups/errors.hpp"
#include "tropgroups/spaces.hpp"
#include "tropgroups/stabilizer.hpp"

using namespace tropgroups;
using oracle::mat;

namespace {

PermGroup group(std::size_t n, std::vector<std::string> gens) { return PermGroup::parse(gens, n); }

}  // namespace

TEST_CASE("S2 on two points gives a symmetric two-by-two idempotent") {
  const auto c = construct_idempotent(group(2, {"(1,2)"}));
  const TropMatrix& e = c.matrix;
  REQUIRE(e.rows() == 2);
  CHECK(e(0, 0) == TropScalar(0));
  CHECK(e(1, 1) == TropScalar(0));
  CHECK(e(0, 1) == e(1, 0));
  const Value a = e(0, 1).value();
  CHECK(a.standard() > Rational(-11, 10));
  CHECK(a.standard() < Rational(-9, 10));
  CHECK_FALSE(a.infinitesimals().empty());
  const auto d = maximal_subgroup(e);
  CHECK(d.formula() == "(R x S2)");
}

TEST_CASE("small trivial groups use the fixed matrices") {
  CHECK(construct_idempotent(group(1, {"()"})).matrix == mat("0"));
  CHECK(construct_idempotent(group(2, {"()"})).matrix == mat("0 0\n-inf 0"));
  for (std::size_t n : {1, 2}) {
    const auto d = maximal_subgroup(construct_idempotent(group(n, {"()"})).matrix);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].order == 1);
    CHECK(d.factors[0].multiplicity == 1);
  }
}

TEST_CASE("idempotent constructions realize 2-closed groups") {
  const std::vector<std::pair<std::size_t, std::vector<std::string>>> cases = {
      {3, {"()"}}, {3, {"(1,2,3)"}}, {3, {"(1,2,3)", "(1,2)"}}, {4, {"(1,2,3,4)", "(1,3)"}},
      {4, {"(1,2)"}}, {5, {"(1,2,3,4,5)"}},
  };
  for (const auto& [n, gens] : cases) {
    INFO(gens.front());
    const PermGroup g = group(n, gens);
    const auto c = construct_idempotent(g, 5);
    CHECK(is_idempotent(c.matrix));
    CHECK(is_full_rank(c.matrix));
    CHECK(c.plan.values.front().value.infinitesimals().front().first == 5);
    const auto d = maximal_subgroup(c.matrix);
    REQUIRE(d.factors.size() == 1);
    CHECK(groups_isomorphic(d.factors[0].row_action, two_closure(g).group));
    CHECK(commuting_units(c.matrix).elements == stabilizer_pairs(c.matrix).elements);
  }
  CHECK_THROWS_AS(construct_idempotent(group(4, {"(1,2,3)", "(2,3,4)"})), NotTwoClosed);
}

TEST_CASE("bipartite constructions realize Aut(D)") {
  // S2 acting on both sides of a 2x2 graph
  BipartiteDigraph s2(2, 2);
  s2.set(0, 0, 0);
  s2.set(1, 1, 0);
  s2.set(0, 1, 1);
  s2.set(1, 0, 1);
  // a 3x4 graph with missing edges
  BipartiteDigraph g34(3, 4);
  const int pattern[3][4] = {{0, 1, -1, 2}, {1, 0, 2, -1}, {2, -1, 0, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (pattern[i][j] >= 0) g34.set(i, j, static_cast<std::uint32_t>(pattern[i][j]));

  for (const auto* d : {&s2, &g34}) {
    std::uint64_t brute = 0;
    BipartiteDigraph complete = *d;
    for (auto& c : complete.colours)
      if (c == BipartiteDigraph::kNoEdge) c = 99;
    for (const auto& s : oracle::all_perms(d->n))
      for (const auto& t : oracle::all_perms(d->m)) {
        bool ok = true;
        for (std::size_t i = 0; i < d->n && ok; ++i)
          for (std::size_t j = 0; j < d->m && ok; ++j) ok = complete.colour(i, j) == complete.colour(s[i], t[j]);
        brute += ok;
      }
    const auto c = construct_from_bipartite(*d);
    CHECK(is_full_rank(c.matrix));
    for (const auto& x : c.matrix.entries()) CHECK(x.is_finite());
    const auto desc = group_description(c.matrix);
    REQUIRE(desc.factors.size() == 1);
    CHECK(desc.factors[0].order == brute);
    CHECK(groups_isomorphic(desc.factors[0].paired_action, coloured_automorphisms(complete).group));
  }
}

TEST_CASE("bipartite construction rejects small trivial and reducible graphs") {
  BipartiteDigraph d(2, 3);
  const int pattern[2][3] = {{0, 1, 2}, {1, 2, 0}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) d.set(i, j, static_cast<std::uint32_t>(pattern[i][j]));
  // no column reads (1,0) top to bottom, so the rows cannot be swapped and Aut is trivial
  CHECK_THROWS_AS(construct_from_bipartite(d), HypothesisViolated);

  BipartiteDigraph twins(2, 2);
  for (auto& c : twins.colours) c = 0;
  CHECK_THROWS_AS(construct_from_bipartite(twins), ReducibleInput);
}

TEST_CASE("assembled blocks") {
  const TropMatrix a = mat("0 1\n2 3");
  const TropMatrix b = mat("5");
  const TropMatrix m = assemble_blocks({{a, 2}, {b, 1}}, TropScalar::neg_inf());
  REQUIRE(m.rows() == 5);
  CHECK(m.submatrix({2, 3}, {2, 3}) == a);
  CHECK(m(4, 4) == TropScalar(5));
  CHECK(m(0, 2).is_neg_inf());
  const TropMatrix z = assemble_blocks({{a, 1}, {b, 1}}, TropScalar(0));
  CHECK(z(0, 2) == TropScalar(0));
  CHECK_THROWS(assemble_blocks({{a, 1}}, TropScalar(1)));
}

TEST_CASE("Alt(4) columns") {
  const auto elems = alt4_elements();
  REQUIRE(elems.size() == 12);
  CHECK(elems.front().is_identity());
  CHECK(std::set<Perm>(elems.begin(), elems.end()).size() == 12);
  for (const auto& g : elems) {
    // even permutations
    std::size_t transpositions = 0;
    for (const auto& c : g.cycles()) transpositions += c.size() - 1;
    CHECK(transpositions % 2 == 0);
  }
  const Value a = Value::parse("-1+e1"), b = Value::parse("-1+e2"), c = Value::parse("-1+e3"),
              d = Value::parse("-1+e4");
  const TropMatrix m = alt4_column_matrix(a, b, c, d);
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 12);
  const std::vector<Value> v{a, b, c, d};
  for (std::size_t k = 0; k < 12; ++k)
    for (std::size_t i = 0; i < 4; ++i) CHECK(m(i, k) == TropScalar(v[elems[k].inverse()[i]]));
  CHECK_THROWS_AS(alt4_column_matrix(a, b, c, a), DependentEntries);
}

TEST_CASE("finite approximants") {
  const TropMatrix e = mat("0 0\n-inf 0");
  CHECK(finite_approximant(e, 1) == mat("0 0\n-1 0"));
  CHECK(finite_approximant(e, 3) == mat("0 0\n-3 0"));
  const TropMatrix big = construct_idempotent(group(3, {"()"})).matrix;
  for (std::int64_t m = 1; m <= 4; ++m) {
    const TropMatrix f = finite_approximant(e, m);
    const TropMatrix g = finite_approximant(e, m + 1);
    CHECK(is_full_rank(f));
    for (std::size_t j = 0; j < f.cols(); ++j) CHECK(member(f.column(j), g).has_value());
  }
  CHECK(finite_approximant(big, 2) == big);  // already finite
  CHECK_THROWS_AS(finite_approximant(mat("1 0\n0 1"), 1), NotIdempotent);
}
