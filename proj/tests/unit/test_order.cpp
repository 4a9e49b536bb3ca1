#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "../support/oracles.hpp"
#include "ultra/error.hpp"
#include "ultra/gen.hpp"
#include "ultra/order.hpp"

using namespace ultra;
using namespace ultra::testing;

TEST_SUITE_BEGIN("order");

TEST_CASE("insertion procedure worked examples") {
  const auto e1 = example_e1();
  const std::vector<std::size_t> abc{0, 1, 2};
  CHECK(admissible_order(e1, abc).points == std::vector<std::size_t>{2, 1, 0});  // c, b, a

  CHECK(admissible_order(one_point()).points == std::vector<std::size_t>{0});

  const auto pq = two_point(Rational(3));
  const std::vector<std::size_t> insert_pq{0, 1};
  CHECK(admissible_order(pq, insert_pq).points == std::vector<std::size_t>{1, 0});  // q, p
}

TEST_CASE("default insertion sequence is label order") {
  const auto space = UltrametricSpace::create(
      {"zz", "aa", "mm"}, {{Rational(0), Rational(1), Rational(2)},
                           {Rational(1), Rational(0), Rational(2)},
                           {Rational(2), Rational(2), Rational(0)}});
  // Label order inserts aa, zz, mm; the trace mirrors the (a,b,c) example.
  const auto ord = admissible_order(space);
  CHECK(ord.points == std::vector<std::size_t>{2, 0, 1});  // mm, zz, aa
}

TEST_CASE("admissibility check and first violating triple") {
  const auto e1 = example_e1();
  CHECK(is_admissible(e1, Ordering{{1, 0, 2}}));  // b, a, c
  const auto violation = admissibility_violation(e1, Ordering{{0, 2, 1}});  // a, c, b
  REQUIRE(violation.has_value());
  CHECK(*violation == std::array<std::size_t, 3>{0, 1, 2});
  CHECK(is_admissible(two_point(Rational(1)), Ordering{{0, 1}}));
  CHECK(is_admissible(one_point(), Ordering{{0}}));
}

TEST_CASE("ordering inputs are validated") {
  const auto e1 = example_e1();
  CHECK_THROWS_AS(admissible_order(e1, std::vector<std::size_t>{0, 1}), Error);
  CHECK_THROWS_AS(admissible_order(e1, std::vector<std::size_t>{0, 1, 1}), Error);
  CHECK_THROWS_AS(admissible_order(e1, std::vector<std::size_t>{0, 1, 7}), Error);
  CHECK_THROWS_AS(is_admissible(e1, Ordering{{0, 1}}), Error);
  CHECK_THROWS_AS(ordering_from_labels(e1, std::vector<std::string>{"a", "b", "x"}), Error);
}

TEST_CASE("contiguity worked examples") {
  const auto e1 = example_e1();
  CHECK(contiguity_violations(e1, Ordering{{2, 1, 0}}).count() == 0);

  const auto report = contiguity_violations(e1, Ordering{{0, 2, 1}});  // a, c, b
  REQUIRE(report.count() == 1);
  CHECK(report.violations[0].block == std::vector<std::size_t>{0, 1});  // {a, b}
  CHECK(report.violations[0].intruder == 2);                            // c
  CHECK(report.violations[0].level == Rational(1));

  CHECK(contiguity_violations(one_point(), Ordering{{0}}).count() == 0);
}

TEST_CASE("construction always yields an admissible order") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenConfig cfg;
    cfg.n = 1 + seed % 32;
    cfg.height_set = {Rational(1), Rational(2), Rational(3), Rational(13, 2)};
    cfg.seed = seed ^ 0x5eed;
    const auto space = random_space(cfg);
    CHECK(is_admissible(space, admissible_order(space)));
  }
}

TEST_CASE("all insertion sequences work on small spaces") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig cfg;
    cfg.n = 2 + seed % 4;  // up to 5
    cfg.height_set = {Rational(1), Rational(2), Rational(4)};
    cfg.seed = seed;
    const auto space = random_space(cfg);
    std::vector<std::size_t> seq(space.size());
    std::iota(seq.begin(), seq.end(), 0);
    do {
      CHECK(is_admissible(space, admissible_order(space, seq)));
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
}

TEST_CASE("admissible iff zero contiguity violations") {
  std::size_t admissible_count = 0, crossing_count = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    GenConfig cfg;
    cfg.n = 1 + seed % 8;
    cfg.height_set = {Rational(1), Rational(2), Rational(3)};
    cfg.seed = seed * 13;
    const auto space = random_space(cfg);

    std::vector<std::size_t> points(space.size());
    std::iota(points.begin(), points.end(), 0);
    SeededRng rng(seed);
    rng.shuffle(points);
    const Ordering ord{points};

    const bool admissible = is_admissible(space, ord);
    CHECK(admissible == (contiguity_violations(space, ord).count() == 0));
    (admissible ? admissible_count : crossing_count)++;
  }
  CHECK(admissible_count > 0);
  CHECK(crossing_count > 0);
}

TEST_CASE("reversal stays admissible on two-point and equilateral spaces") {
  auto reversed = [](Ordering ord) {
    std::reverse(ord.points.begin(), ord.points.end());
    return ord;
  };
  const auto pq = two_point(Rational(5));
  CHECK(is_admissible(pq, reversed(admissible_order(pq))));
  const auto eq = equilateral(5, Rational(3));
  CHECK(is_admissible(eq, reversed(admissible_order(eq))));
}

TEST_SUITE_END();
