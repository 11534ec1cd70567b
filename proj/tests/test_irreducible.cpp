#include <unordered_set>  // for unordered_set

#include "doctest.h"

#include "numsg/classify.hpp"
#include "numsg/errors.hpp"
#include "numsg/irreducible.hpp"
#include "support/brute_force.hpp"
#include "support/helpers.hpp"

using namespace numsg;
using test::by_gens;
using test::gens;

TEST_CASE("children of C(11)") {
  auto const edges = irreducible_children(by_gens({6, 7, 8, 9, 10}), 11);
  REQUIRE(edges.size() == 3);
  CHECK(edges[0].x == 6);
  CHECK(gens(edges[0].child) == std::vector<int>{5, 7, 8, 9});
  CHECK(edges[1].x == 7);
  CHECK(gens(edges[1].child) == std::vector<int>{4, 6, 9});
  CHECK(edges[2].x == 8);
  CHECK(gens(edges[2].child) == std::vector<int>{3, 7});
  for (auto const& e : edges) {
    CHECK(e.parent == canonical_C(11));
  }
}

TEST_CASE("leaves and inner nodes of the F = 11 tree") {
  CHECK(irreducible_children(by_gens({3, 7}), 11).empty());
  CHECK(irreducible_children(by_gens({2, 13}), 11).empty());
  CHECK(irreducible_children(by_gens({4, 5}), 11).empty());

  auto const a = irreducible_children(by_gens({5, 7, 8, 9}), 11);
  REQUIRE(a.size() == 1);
  CHECK(a[0].x == 7);
  CHECK(a[0].child == by_gens({4, 5}));

  auto const b = irreducible_children(by_gens({4, 6, 9}), 11);
  REQUIRE(b.size() == 1);
  CHECK(b[0].x == 9);
  CHECK(b[0].child == by_gens({2, 13}));
}

TEST_CASE("edge invariant: child gaps = parent gaps - {F - x} + {x}") {
  for (int f = 1; f <= 20; ++f) {
    for (auto const& e : irreducible_tree(f)) {
      auto g = e.parent.gaps();
      g.erase(std::find(g.begin(), g.end(), f - e.x));
      g.insert(std::lower_bound(g.begin(), g.end(), e.x), e.x);
      CHECK(e.child.gaps() == g);
    }
  }
}

TEST_CASE("enumerate_irreducible examples") {
  auto const i11 = enumerate_irreducible(11);
  CHECK(i11.algorithm == Algorithm::irreducible);
  CHECK(i11.depth == 2);
  std::set<std::vector<int>> expect;
  for (auto const& g : std::vector<std::vector<int>>{
           {6, 7, 8, 9, 10}, {3, 7}, {4, 6, 9}, {5, 7, 8, 9}, {2, 13}, {4, 5}}) {
    expect.insert(by_gens(g).gaps());
  }
  CHECK(test::gap_sets(i11) == expect);

  auto const i1 = enumerate_irreducible(1);
  REQUIRE(i1.size() == 1);
  CHECK(i1.semigroups[0] == by_gens({2, 3}));

  auto const i5 = enumerate_irreducible(5);
  CHECK(test::gap_sets(i5)
        == std::set<std::vector<int>>{by_gens({3, 4}).gaps(),
                                      by_gens({2, 7}).gaps()});
  CHECK_THROWS_AS(enumerate_irreducible(0), invalid_parameters);
}

TEST_CASE("tree never regenerates a node and outputs are irreducible") {
  for (int f = 1; f <= 20; ++f) {
    std::unordered_set<Semigroup> seen{canonical_C(f)};
    for (auto const& e : irreducible_tree(f)) {
      CHECK(seen.count(e.parent) == 1);
      CHECK(seen.insert(e.child).second);
    }
    auto const r = enumerate_irreducible(f);
    CHECK(r.size() == seen.size());
    CHECK(r.duplicates == 0);
    CHECK(std::is_sorted(r.semigroups.begin(), r.semigroups.end()));
    for (auto const& s : r.semigroups) {
      CHECK(s.frobenius() == f);
      CHECK(is_irreducible(s));
    }
  }
}

TEST_CASE("enumerate_irreducible equals the brute-force filter for F <= 14") {
  for (int f = 1; f <= 14; ++f) {
    std::set<std::vector<int>> expect;
    for (auto const& g : brute::all_with_frobenius(f)) {
      auto const pf = brute::pseudo_frobenius(g);
      if (pf == std::vector<int>{f}
          || (f % 2 == 0 && pf == std::vector<int>{f / 2, f})) {
        expect.insert(g);
      }
    }
    CAPTURE(f);
    CHECK(test::gap_sets(enumerate_irreducible(f)) == expect);
  }
}

TEST_CASE("parallel traversal is order independent") {
  test::ReverseExecutor const reverse;
  for (int f : {11, 20, 31}) {
    CHECK(enumerate_irreducible(f, reverse).semigroups
          == enumerate_irreducible(f).semigroups);
  }
}
