#include <doctest.h>

#include "../support/oracles.hpp"
#include "ultra/dendrogram.hpp"
#include "ultra/error.hpp"
#include "ultra/gen.hpp"

using namespace ultra;
using namespace ultra::testing;

namespace {

Dendrogram e1_tree() {
  return Dendrogram::merge(
      Rational(2),
      {Dendrogram::merge(Rational(1), {Dendrogram::leaf("a"), Dendrogram::leaf("b")}),
       Dendrogram::leaf("c")});
}

}  // namespace

TEST_SUITE_BEGIN("dendrogram");

TEST_CASE("merge tree of the worked example") {
  CHECK(structurally_equal(dendrogram_of(example_e1()), e1_tree()));
}

TEST_CASE("one point gives a single leaf") {
  const auto d = dendrogram_of(one_point("a"));
  CHECK(d.node_count() == 1);
  CHECK(d.leaf_count() == 1);
  CHECK(d.root_height() == Rational(0));
}

TEST_CASE("simultaneous merges form one k-ary node") {
  const auto d = dendrogram_of(equilateral(3, Rational(1)));
  CHECK(d.node_count() == 4);
  CHECK(d.node(d.root()).children.size() == 3);
  CHECK(structurally_equal(
      d, Dendrogram::merge(Rational(1), {Dendrogram::leaf("e0"), Dendrogram::leaf("e1"),
                                         Dendrogram::leaf("e2")})));
}

TEST_CASE("distances are lowest-common-ancestor heights") {
  const auto space = ultrametric_of(e1_tree());
  CHECK(label_wise_equal(space, example_e1()));

  CHECK(ultrametric_of(Dendrogram::leaf("z")).size() == 1);

  const auto ternary = ultrametric_of(Dendrogram::merge(
      Rational(1), {Dendrogram::leaf("a"), Dendrogram::leaf("b"), Dendrogram::leaf("c")}));
  CHECK(ternary.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(ternary.dist(i, j) == Rational(1));
}

TEST_CASE("round trips on random instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenConfig cfg;
    cfg.n = 1 + seed % 32;
    cfg.height_set = {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(9, 2)};
    cfg.seed = seed;
    cfg.max_arity = 2 + seed % 3;

    const auto tree = random_dendrogram(cfg);
    const auto space = ultrametric_of(tree);
    CHECK(label_wise_equal(ultrametric_of(dendrogram_of(space)), space));
    CHECK(structurally_equal(dendrogram_of(ultrametric_of(tree)), tree));
  }
}

TEST_CASE("construction rejects malformed trees") {
  CHECK_THROWS_AS(Dendrogram::merge(Rational(1), {}), Error);
  CHECK_THROWS_AS(Dendrogram::merge(Rational(1), {Dendrogram::leaf("a")}), Error);
  CHECK_THROWS_AS(
      Dendrogram::merge(Rational(1),
                        {Dendrogram::merge(Rational(1), {Dendrogram::leaf("a"),
                                                         Dendrogram::leaf("b")}),
                         Dendrogram::leaf("c")}),
      Error);  // equal heights on a chain
  CHECK_THROWS_AS(Dendrogram::merge(Rational(2), {Dendrogram::leaf("a"), Dendrogram::leaf("a")}),
                  Error);  // duplicate labels

  using Node = Dendrogram::Node;
  CHECK_THROWS_AS(Dendrogram::from_nodes({Node{Rational(0), "a", {}}}, 3), Error);
  CHECK_THROWS_AS(Dendrogram::from_nodes({Node{Rational(0), "a", {}},
                                          Node{Rational(0), "b", {}},
                                          Node{Rational(1), "", {0, 1}},
                                          Node{Rational(0), "orphan", {}}},
                                         2),
                  Error);  // unreachable node
  CHECK_THROWS_AS(Dendrogram::from_nodes({Node{Rational(0), "a", {}},
                                          Node{Rational(1), "", {0, 0}}},
                                         1),
                  Error);  // shared child
}

TEST_SUITE_END();
