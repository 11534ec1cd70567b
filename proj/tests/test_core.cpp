#include <numeric>  // for gcd
#include <random>   // for mt19937

#include "doctest.h"

#include "numsg/bit_table.hpp"
#include "numsg/errors.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/serialize.hpp"
#include "support/brute_force.hpp"
#include "support/helpers.hpp"

using namespace numsg;
using test::range;

namespace {
  BitTable random_table(std::mt19937& rng, std::size_t size, double density) {
    std::bernoulli_distribution bit(density);
    BitTable                    t(size);
    for (std::size_t i = 1; i < size; ++i) {
      if (bit(rng)) {
        t.set(i);
      }
    }
    return t;
  }
}  // namespace

TEST_CASE("BitTable shift predicates agree with naive loops") {
  std::mt19937 rng(12345);
  for (int round = 0; round < 3000; ++round) {
    std::size_t const size  = 1 + rng() % 200;
    auto const        a     = random_table(rng, size, 0.3 + 0.6 * (round % 3) / 2);
    auto const        b     = random_table(rng, size, 0.2);
    std::size_t const shift = rng() % (size + 5);

    bool closed = true;
    for (std::size_t i = shift; i < size; ++i) {
      if (a.test(i) && !a.test(i - shift)) {
        closed = false;
      }
    }
    CHECK(a.closed_under_subtraction(shift) == closed);

    bool meet = false;
    for (std::size_t i = 0; i + shift < size; ++i) {
      if (b.test(i) && a.test(i + shift)) {
        meet = true;
      }
    }
    CHECK(a.intersects_shifted(b, shift) == meet);
  }
}

TEST_CASE("BitTable compare_same_top is lexicographic order") {
  std::mt19937 rng(7);
  for (int round = 0; round < 3000; ++round) {
    std::size_t const size = 2 + rng() % 150;
    auto              a    = random_table(rng, size, 0.5);
    auto              b    = random_table(rng, size, 0.5);
    a.set(size - 1);
    b.set(size - 1);
    CHECK(a.compare_same_top(b) == (a.to_vector() <=> b.to_vector()));
  }
}

TEST_CASE("from_gaps") {
  CHECK(from_gaps(std::vector<int>{}).genus() == 0);
  CHECK(from_gaps(std::vector<int>{}).frobenius() == -1);

  auto const c11 = from_gaps(std::vector<int>{1, 2, 3, 4, 5, 11});
  CHECK(c11.gaps() == std::vector<int>{1, 2, 3, 4, 5, 11});
  // Order and repeats in the input do not matter.
  CHECK(from_gaps(std::vector<int>{11, 3, 1, 2, 5, 4, 3}) == c11);

  try {
    from_gaps(std::vector<int>{2});
    FAIL("expected closure_violation");
  } catch (closure_violation const& e) {
    CHECK(e.a() == 1);
    CHECK(e.b() == 1);
  }
  // {1, 2, 4} is closed (it is <3, 5, 7>); {1, 3, 4} is not: 2 + 2 = 4.
  CHECK(from_gaps(std::vector<int>{1, 2, 4}).frobenius() == 4);
  CHECK_THROWS_AS(from_gaps(std::vector<int>{1, 3, 4}), closure_violation);
  CHECK_THROWS_AS(from_gaps(std::vector<int>{0, 1}), invalid_parameters);
  CHECK_THROWS_AS(from_gaps(std::vector<int>{-3, 1}), invalid_parameters);
}

TEST_CASE("from_gaps acceptance equals the definitional closure test") {
  for (int f = 1; f <= 12; ++f) {
    for (unsigned mask = 0; mask < (1U << (f - 1)); ++mask) {
      std::vector<int> g;
      for (int v = 1; v < f; ++v) {
        if ((mask >> (v - 1)) & 1U) {
          g.push_back(v);
        }
      }
      g.push_back(f);
      bool accepted = true;
      try {
        from_gaps(g);
      } catch (closure_violation const&) {
        accepted = false;
      }
      CHECK(accepted == brute::closed(g));
    }
  }
}

TEST_CASE("from_generators") {
  CHECK(test::by_gens({6, 7, 8, 9, 10}).gaps()
        == std::vector<int>{1, 2, 3, 4, 5, 11});
  CHECK(test::by_gens({1}).genus() == 0);
  CHECK(test::by_gens({3, 7}).gaps() == std::vector<int>{1, 2, 4, 5, 8, 11});
  CHECK_THROWS_AS(test::by_gens({2, 4}), not_numerical);
  CHECK_THROWS_AS(test::by_gens({}), invalid_parameters);
  CHECK_THROWS_AS(test::by_gens({0, 1}), invalid_parameters);
}

TEST_CASE("from_generators round trip over subsets of [1..12]") {
  for (unsigned mask = 1; mask < (1U << 12); ++mask) {
    std::vector<int> g;
    int              d = 0;
    for (int v = 1; v <= 12; ++v) {
      if ((mask >> (v - 1)) & 1U) {
        g.push_back(v);
        d = std::gcd(d, v);
      }
    }
    if (d != 1) {
      CHECK_THROWS_AS(from_generators(g), not_numerical);
      continue;
    }
    auto const s = from_generators(g);
    CHECK(from_gaps(s.gaps()) == s);
    CHECK(brute::closed(s.gaps()));
    for (int x : g) {
      CHECK(s.contains(x));
    }
    // Minimal generators generate the same semigroup.
    CHECK(from_generators(minimal_generators(s)) == s);
  }
}

TEST_CASE("contains") {
  auto const c11 = from_gaps(std::vector<int>{1, 2, 3, 4, 5, 11});
  CHECK(contains(c11, 6));
  CHECK_FALSE(contains(c11, 11));
  CHECK(contains(c11, 0));
  CHECK(contains(c11, 1000));
  CHECK_FALSE(contains(c11, -1));
  CHECK_FALSE(contains(Semigroup(), -1));
  CHECK(contains(Semigroup(), 1));
}

TEST_CASE("compute_stats examples") {
  SUBCASE("C(11)") {
    auto const st = compute_stats(from_gaps(std::vector<int>{1, 2, 3, 4, 5, 11}));
    CHECK(st.frobenius == 11);
    CHECK(st.genus == 6);
    CHECK(st.multiplicity == 6);
    CHECK(st.msg == std::vector<int>{6, 7, 8, 9, 10});
    // Brute-force PF scan: {11}.
    CHECK(st.pf == std::vector<int>{11});
    CHECK(st.type == 1);
  }
  SUBCASE("M(5)") {
    auto const st = compute_stats(from_gaps(range(1, 5)));
    CHECK(st.pf == range(1, 5));
    CHECK(st.type == 5);
    CHECK(st.msg == range(6, 11));
  }
  SUBCASE("C(11) without 6 and 7") {
    auto gaps = range(1, 7);
    gaps.push_back(11);
    auto const st = compute_stats(from_gaps(gaps));
    CHECK(st.frobenius == 11);
    CHECK(st.genus == 8);
    CHECK(st.gaps_first == std::vector<int>{1, 2, 3, 11});
    CHECK(st.gaps_second == std::vector<int>{4, 5, 6, 7});
    CHECK(st.pf == std::vector<int>{4, 5, 6, 7, 11});
    CHECK(st.type == 5);
  }
  SUBCASE("N") {
    auto const st = compute_stats(Semigroup());
    CHECK(st.frobenius == -1);
    CHECK(st.genus == 0);
    CHECK(st.multiplicity == 1);
    CHECK(st.msg == std::vector<int>{1});
    CHECK(st.pf.empty());
    CHECK(st.type == 0);
  }
}

TEST_CASE("Stats invariants on every semigroup with F <= 12") {
  for (int f = 1; f <= 12; ++f) {
    for (auto const& g : brute::all_with_frobenius(f)) {
      auto const s  = from_gaps(g);
      auto const st = compute_stats(s);
      CAPTURE(g);
      CHECK(st.frobenius == f);
      // Generator-based PF equals the definitional scan.
      CHECK(st.pf == brute::pseudo_frobenius(g));
      CHECK(st.msg == brute::minimal_generators(g));
      CHECK(st.pf.back() == f);
      CHECK(std::includes(g.begin(), g.end(), st.pf.begin(), st.pf.end()));

      std::vector<int> both;
      std::merge(st.gaps_first.begin(), st.gaps_first.end(),
                 st.gaps_second.begin(), st.gaps_second.end(),
                 std::back_inserter(both));
      CHECK(both == g);

      CHECK(2 * static_cast<int>(st.genus) >= st.frobenius + st.type);
      CHECK(st.multiplicity >= st.type + 1);

      // msg minimality: dropping any generator changes the semigroup.
      for (std::size_t i = 0; i < st.msg.size(); ++i) {
        auto fewer = st.msg;
        fewer.erase(fewer.begin() + static_cast<long>(i));
        if (fewer.empty()) {
          continue;
        }
        bool same = false;
        try {
          same = from_generators(fewer) == s;
        } catch (not_numerical const&) {
        }
        CHECK_FALSE(same);
      }
    }
  }
}

TEST_CASE("JSON line has fixed field order") {
  CHECK(to_json_line(from_generators(std::vector<int>{6, 7, 8, 9, 10}))
        == R"({"gaps":[1,2,3,4,5,11],"msg":[6,7,8,9,10],"pf":[11],)"
           R"("frobenius":11,"genus":6,"type":1,"multiplicity":6})");
  CHECK(to_json_line(Semigroup())
        == R"({"gaps":[],"msg":[1],"pf":[],"frobenius":-1,"genus":0,)"
           R"("type":0,"multiplicity":1})");
}

TEST_CASE("canonical order is lexicographic on gaps across Frobenius numbers") {
  std::vector<Semigroup> v;
  for (int f = 1; f <= 7; ++f) {
    for (auto const& g : brute::all_with_frobenius(f)) {
      v.push_back(from_gaps(g));
    }
  }
  for (auto const& a : v) {
    for (auto const& b : v) {
      CHECK((a <=> b) == (a.gaps() <=> b.gaps()));
    }
  }
}
