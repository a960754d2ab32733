#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "tropgroups/errors.hpp"
#include "tropgroups/permgroups.hpp"

using namespace tropgroups;

namespace {

PermGroup group(std::size_t n, std::vector<std::string> gens) { return PermGroup::parse(gens, n); }

const std::vector<std::string> kAlt4On10 = {"(1,3,2)(5,10,7)(6,8,9)", "(1,4)(2,3)(6,10)(7,8)",
                                            "(1,3)(2,4)(5,9)(6,10)"};

}  // namespace

TEST_CASE("cycle notation") {
  const Perm p = Perm::parse("(1,3,2)(5,6)", 6);
  CHECK(p[0] == 2);
  CHECK(p[2] == 1);
  CHECK(p[1] == 0);
  CHECK(p.to_string() == "(1,3,2)(5,6)");
  CHECK(p.order() == 6);
  CHECK(Perm::parse("()", 3).is_identity());
  CHECK(Perm::identity(2).to_string() == "()");
  CHECK((p * p.inverse()).is_identity());
  // apply a then b
  const Perm a = Perm::parse("(1,2)", 3), b = Perm::parse("(2,3)", 3);
  CHECK((a * b)[0] == 2);
  CHECK_THROWS_AS(Perm::parse("(1,2", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1,2,1)", 3), ParseError);
}

TEST_CASE("orders against brute-force closure") {
  const std::vector<std::pair<std::size_t, std::vector<std::string>>> cases = {
      {4, {"(1,2,3,4)", "(1,3)"}},
      {5, {"(1,2,3,4,5)", "(1,2)"}},
      {6, {"(1,2,3)", "(4,5,6)"}},
      {10, kAlt4On10},
  };
  for (const auto& [n, gens] : cases) {
    const PermGroup g = group(n, gens);
    CHECK(group_order(g) == oracle::closure_brute(n, g.generators()).size());
  }
  CHECK_THROWS_AS(group_order(group(6, {"(1,2,3,4,5,6)", "(1,2)"}), 100), OrderCapExceeded);
}

TEST_CASE("orbits and membership") {
  const PermGroup g = group(6, {"(1,2)", "(4,5,6)"});
  CHECK(orbit_labels(6, g.generators()) == std::vector<std::size_t>{0, 0, 1, 2, 2, 2});
  CHECK(contains(g, Perm::parse("(1,2)(4,6,5)", 6)));
  CHECK_FALSE(contains(g, Perm::parse("(1,3)", 6)));
}

TEST_CASE("coloured digraph automorphisms against brute force") {
  std::mt19937 rng(17);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 3 + t % 4;
    std::uniform_int_distribution<std::uint32_t> colour(0, t % 3 == 0 ? 1 : 2);
    ColouredDigraph d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) d.set(i, j, colour(rng));
    // symmetric colourings have more automorphisms
    if (t % 2 == 0)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) d.set(i, j, d.colour(j, i));
    const auto aut = coloured_automorphisms(d);
    CHECK(aut.order == oracle::aut_order_brute(d));
    CHECK(group_order(aut.group) == aut.order);
    for (const auto& p : aut.group.generators())
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) CHECK(d.colour(i, j) == d.colour(p[i], p[j]));
  }
}

TEST_CASE("2-closure against brute force over S_n") {
  const std::vector<std::pair<std::size_t, std::vector<std::string>>> cases = {
      {3, {"(1,2,3)"}},      // C3 regular
      {4, {"(1,2,3)"}},      // C3 with a fixed point
      {4, {"(1,2,3,4)"}},    // C4
      {4, {"(1,2)(3,4)", "(1,3)(2,4)"}},  // Klein four, regular
      {4, {"(1,2,3)", "(2,3,4)"}},        // A4
      {5, {"(1,2,3,4,5)"}},
      {5, {"(1,2,3,4,5)", "(2,5)(3,4)"}},  // D5
      {6, {"(1,2)(3,4)(5,6)", "(1,3,5)(2,4,6)"}},
  };
  for (const auto& [n, gens] : cases) {
    const PermGroup g = group(n, gens);
    const auto c = two_closure(g);
    INFO(n << " " << gens.front());
    CHECK(c.order == oracle::two_closure_order_brute(n, g.generators()));
    CHECK(is_two_closed(g) == (c.order == group_order(g)));
    // closure contains the group and is idempotent
    for (const auto& p : g.generators()) CHECK(contains(c.group, p));
    CHECK(two_closure(c.group).order == c.order);
  }
  CHECK(is_two_closed(group(3, {"(1,2,3)"})));
  CHECK_FALSE(is_two_closed(group(4, {"(1,2,3)", "(2,3,4)"})));
  CHECK(is_two_closed(group(2, {"(1,2)"})));
}

TEST_CASE("Alt(4) on ten points is 2-closed") {
  const PermGroup g = group(10, kAlt4On10);
  CHECK(group_order(g) == 12);
  CHECK(is_two_closed(g));
  CHECK(identify_group(g) == "A4");
}

TEST_CASE("paired groups and paired 2-closure") {
  // S2 acting on both sides of a 2x2 bipartite graph
  const PermGroup g = PermGroup::paired(2, 2, {Perm::parse("(1,2)(3,4)", 4)});
  CHECK(g.omega_size() == 2);
  CHECK(g.gamma_size() == 2);
  CHECK(group_order(g.omega_action()) == 2);
  CHECK(is_paired_two_closed(g));
  CHECK_THROWS(PermGroup::paired(2, 2, {Perm::parse("(1,3)", 4)}));

  // C3 moving only Ω acts trivially, so unfaithfully, on Γ
  const PermGroup nf = PermGroup::paired(3, 3, {Perm::parse("(1,2,3)", 6)});
  CHECK_THROWS_AS(paired_two_closure(nf), NotFaithful);

  // C3 acting regularly on both sides: pair orbits on Ω x Γ pin it down
  const PermGroup c3 = PermGroup::paired(3, 3, {Perm::parse("(1,2,3)(4,5,6)", 6)});
  const auto pc = paired_two_closure(c3);
  CHECK(pc.order == 3);
}

TEST_CASE("paired closure against brute force over S_n x S_m") {
  // the paired closure fixes every orbit of G on Ω x Γ and on the diagonal of each side
  const PermGroup g = PermGroup::paired(3, 2, {Perm::parse("(1,2)(4,5)", 5)});
  const auto elems = oracle::closure_brute(5, g.generators());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> orbit;
  std::size_t next = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 5; ++j) {
      if (orbit.count({i, j})) continue;
      for (const auto& e : elems) orbit[{e[i], e[j]}] = next;
      ++next;
    }
  std::uint64_t brute = 0;
  for (const auto& s : oracle::all_perms(3))
    for (const auto& t : oracle::all_perms(2)) {
      bool ok = true;
      for (const auto& [pr, o] : orbit) ok = ok && orbit.at({s[pr.first], 3 + t[pr.second - 3]}) == o;
      brute += ok;
    }
  CHECK(paired_two_closure(g).order == brute);
}

TEST_CASE("isomorphism testing and names") {
  CHECK(groups_isomorphic(group(4, {"(1,2,3,4)", "(1,3)"}), group(8, {"(1,2,3,4)(5,6,7,8)", "(1,3)(6,8)"})));
  CHECK_FALSE(groups_isomorphic(group(4, {"(1,2,3,4)"}), group(4, {"(1,2)", "(3,4)"})));
  CHECK_FALSE(groups_isomorphic(group(4, {"(1,2,3,4)", "(1,3)"}),
                                group(8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"})));  // D4 vs Q8
  CHECK(identify_group(group(3, {"(1,2,3)"})) == "C3");
  CHECK(identify_group(group(3, {"(1,2,3)", "(1,2)"})) == "S3");
  CHECK(identify_group(group(4, {"(1,2,3,4)", "(1,3)"})) == "D4");
  CHECK(identify_group(group(8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"})) == "Q8");
  CHECK(identify_group(group(2, {"()"})) == "1");
}

TEST_CASE("irreducibility of bipartite digraphs") {
  BipartiteDigraph d(2, 2);
  d.set(0, 0, 0);
  CHECK_FALSE(is_irreducible(d));  // ω2 and θ2 are isolated
  d.set(1, 1, 0);
  CHECK(is_irreducible(d));
  d.set(0, 1, 0);
  d.set(1, 0, 0);
  CHECK_FALSE(is_irreducible(d));  // twins
  d.set(0, 1, 1);
  CHECK(is_irreducible(d));
}
