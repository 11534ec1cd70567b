// Built against numsg_checked: every internal assertion is live, so these
// runs fail loudly on any broken invariant.
#include "doctest.h"

#include "numsg/ascending.hpp"
#include "numsg/descending.hpp"
#include "numsg/errors.hpp"
#include "numsg/irreducible.hpp"
#include "numsg/oracle.hpp"
#include "support/helpers.hpp"

#ifndef NUMSG_CHECKS
#error "test_checked must be built with NUMSG_CHECKS"
#endif

using namespace numsg;

TEST_CASE("assertions are live") {
  CHECK_THROWS_AS(Semigroup::from_trusted_gaps(std::vector<int>{1, 3, 4}),
                  internal_error);
  CHECK_NOTHROW(Semigroup::from_trusted_gaps(std::vector<int>{1, 2, 4}));
}

TEST_CASE("enumerators under checks for F <= 20") {
  test::ReverseExecutor const reverse;
  for (int f = 1; f <= 20; ++f) {
    CAPTURE(f);
    auto const irr = enumerate_irreducible(f, reverse);
    CHECK(irr.semigroups == enumerate_irreducible(f).semigroups);
    auto const asc = as_all_ascending(f, reverse);
    auto const dsc = as_all_descending(f, reverse);
    CHECK(asc.semigroups == dsc.semigroups);
    for (int t = 1; t <= f; ++t) {
      CHECK_NOTHROW(as_with_type(f, t));
      CHECK_NOTHROW(as_down_to_type(f, t));
    }
    if (f <= 16) {
      CHECK(oracle_as(f).semigroups == asc.semigroups);
    }
  }
}
