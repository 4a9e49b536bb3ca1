#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "../support/oracles.hpp"
#include "ultra/dendrogram.hpp"
#include "ultra/embed.hpp"
#include "ultra/error.hpp"
#include "ultra/gen.hpp"
#include "ultra/io.hpp"
#include "ultra/render.hpp"

using namespace ultra;
using namespace ultra::testing;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::parse_error;
}

// Linkage rows of a merge tree: internal nodes in ascending height order,
// k-ary nodes unfolded into chains of equal-height binary merges.
std::vector<LinkageRow> linkage_rows_of(const Dendrogram& tree,
                                        std::vector<std::string>& labels_out) {
  const auto leaves = tree.leaves_under(tree.root());
  std::map<std::size_t, std::size_t> cluster_of;  // node index -> linkage id
  labels_out.clear();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    cluster_of[leaves[i]] = i;
    labels_out.push_back(tree.node(leaves[i]).label);
  }

  std::vector<std::size_t> internal;
  for (std::size_t v = 0; v < tree.node_count(); ++v)
    if (!tree.node(v).is_leaf()) internal.push_back(v);
  std::stable_sort(internal.begin(), internal.end(), [&](std::size_t a, std::size_t b) {
    return tree.node(a).height < tree.node(b).height;
  });

  std::vector<LinkageRow> rows;
  std::size_t next_id = leaves.size();
  for (std::size_t v : internal) {
    const auto& node = tree.node(v);
    std::size_t current = cluster_of.at(node.children[0]);
    std::size_t size = tree.leaves_under(node.children[0]).size();
    for (std::size_t c = 1; c < node.children.size(); ++c) {
      size += tree.leaves_under(node.children[c]).size();
      rows.push_back(LinkageRow{current, cluster_of.at(node.children[c]), node.height, size});
      current = next_id++;
    }
    cluster_of[v] = current;
  }
  return rows;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("space documents round trip") {
  const std::string doc = write_space(example_e1());
  CHECK(write_space(parse_space(doc)) == doc);

  const auto space =
      parse_space(R"({"points":["a","b"],"distances":[["0","0.5"],["0.5",0]]})");
  CHECK(space.dist(0, 1) == Rational(1, 2));
  CHECK(write_space(space).find("\"1/2\"") != std::string::npos);
}

TEST_CASE("space document errors") {
  CHECK(code_of([] { parse_space("not json"); }) == errc::parse_error);
  CHECK(code_of([] { parse_space(R"({"points":["a"]})"); }) == errc::parse_error);
  CHECK(code_of([] {
          parse_space(R"({"points":["a","b"],"distances":[["0","1"]]})");
        }) == errc::parse_error);  // not square
  CHECK(code_of([] {
          parse_space(R"({"points":["a","b"],"distances":[["0",0.5],[0.5,"0"]]})");
        }) == errc::parse_error);  // float entry
  CHECK(code_of([] {
          parse_space(R"({"points":["a","b"],"distances":[["0",-1],[-1,"0"]]})");
        }) == errc::parse_error);
  CHECK(code_of([] {
          parse_space(R"({"points":["a","b"],"distances":[["0","3"],["2","0"]]})");
        }) == errc::non_symmetric);
}

TEST_CASE("family documents round trip") {
  const auto e1 = example_e1();
  const Ordering ord{{2, 1, 0}};
  const auto family = embed_finite(e1, ord);
  const auto source = subspace(e1, ord.points);
  const std::string doc = write_family(source, family);

  const ParsedFamily parsed = parse_family(doc);
  CHECK(parsed.source == source);
  REQUIRE(parsed.family.size() == 3);
  CHECK(parsed.family.source_labels == family.source_labels);
  for (std::size_t i = 0; i < 3; ++i) CHECK(parsed.family.images[i] == family.images[i]);
  CHECK(write_family(parsed.source, parsed.family) == doc);

  CHECK(code_of([] { parse_family(R"({"source":{}})"); }) == errc::parse_error);
  CHECK(code_of([&] {
          auto broken = family;
          broken.images.pop_back();
          write_family(source, broken);
        }) == errc::mismatched_input);
}

TEST_CASE("linkage worked examples") {
  const std::vector<LinkageRow> rows{{0, 1, Rational(1), 2}, {3, 2, Rational(2), 3}};
  const auto tree = parse_linkage(rows, {"a", "b", "c"});
  CHECK(structurally_equal(
      tree, Dendrogram::merge(Rational(2),
                              {Dendrogram::merge(Rational(1), {Dendrogram::leaf("a"),
                                                               Dendrogram::leaf("b")}),
                               Dendrogram::leaf("c")})));
  CHECK(label_wise_equal(ultrametric_of(tree), example_e1()));

  // Equal heights on a chain coalesce into one ternary node.
  const std::vector<LinkageRow> chained{{0, 1, Rational(1), 2}, {3, 2, Rational(1), 3}};
  const auto coalesced = parse_linkage(chained, {"a", "b", "c"});
  CHECK(structurally_equal(
      coalesced, Dendrogram::merge(Rational(1), {Dendrogram::leaf("a"), Dendrogram::leaf("b"),
                                                 Dendrogram::leaf("c")})));

  const auto single = parse_linkage({}, {"only"});
  CHECK(single.leaf_count() == 1);
}

TEST_CASE("linkage error cases") {
  CHECK(code_of([] {
          parse_linkage(std::vector<LinkageRow>{{0, 1, Rational(0), 2}}, {"a", "b"});
        }) == errc::non_monotone_heights);  // zero height
  CHECK(code_of([] {
          parse_linkage(std::vector<LinkageRow>{{0, 1, Rational(2), 2}, {3, 2, Rational(1), 3}},
                        {"a", "b", "c"});
        }) == errc::non_monotone_heights);
  CHECK(code_of([] {
          parse_linkage(std::vector<LinkageRow>{{0, 0, Rational(1), 2}}, {"a", "b"});
        }) == errc::bad_ids);  // child reused
  CHECK(code_of([] {
          parse_linkage(std::vector<LinkageRow>{{0, 5, Rational(1), 2}}, {"a", "b"});
        }) == errc::bad_ids);  // forward reference
  CHECK(code_of([] {
          parse_linkage(std::vector<LinkageRow>{{0, 1, Rational(1), 2}}, {"a", "b", "c"});
        }) == errc::mismatched_input);  // wrong label count
}

TEST_CASE("linkage text formats") {
  const auto csv = parse_linkage_csv("# comment\n0, 1, 1.0, 2\n\n3, 2, 2.0, 3\n");
  REQUIRE(csv.size() == 2);
  CHECK(csv[0].height == Rational(1));
  CHECK(csv[1].height == Rational(2));
  CHECK(csv[1].left == 3);

  const auto js = parse_linkage_json(R"([[0, 1, "1", 2], [3, 2, "2.0", 3]])");
  REQUIRE(js.size() == 2);
  CHECK(js[1].height == Rational(2));

  CHECK(parse_linkage_text(" [[0,1,\"1\",2]]").size() == 1);
  CHECK(parse_linkage_text("0,1,1,2\n").size() == 1);

  CHECK(code_of([] { parse_linkage_csv("0,1\n"); }) == errc::parse_error);
  CHECK(code_of([] { parse_linkage_csv("a,1,1,2\n"); }) == errc::bad_ids);
  CHECK(code_of([] { parse_linkage_json(R"([[0,1,0.5,2]])"); }) == errc::parse_error);
}

TEST_CASE("cophenetic distances survive the linkage round trip") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenConfig cfg;
    cfg.n = 1 + seed % 10;
    cfg.height_set = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    cfg.seed = seed * 17 + 5;
    cfg.max_arity = 2 + seed % 3;
    const auto tree = random_dendrogram(cfg);

    std::vector<std::string> labels;
    const auto rows = linkage_rows_of(tree, labels);
    const auto rebuilt = parse_linkage(rows, labels);
    CHECK(structurally_equal(rebuilt, tree));
    CHECK(label_wise_equal(ultrametric_of(rebuilt), ultrametric_of(tree)));
  }
}

TEST_CASE("ascii rendering goldens") {
  const auto e1 = example_e1();
  CHECK(render(e1, Ordering{{2, 1, 0}}, RenderFormat::ascii) ==
        "# crossings: 0\n"
        "+-----+\n"
        "|     |\n"
        "|   +---+\n"
        "|   |   |\n"
        "c   b   a\n");
  CHECK(render(e1, Ordering{{0, 2, 1}}, RenderFormat::ascii) ==
        "# crossings: 1\n"
        "    +\n"
        "    |\n"
        "+---+---+\n"
        "|   |   |\n"
        "a   c   b\n");
  CHECK(render(one_point(), Ordering{{0}}, RenderFormat::ascii) ==
        "# crossings: 0\n"
        "|\n"
        "z\n");
}

TEST_CASE("svg rendering golden") {
  const std::string svg = render(example_e1(), Ordering{{2, 1, 0}}, RenderFormat::svg);
  CHECK(svg ==
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"120\" height=\"140\" "
        "viewBox=\"0 0 120 140\">\n"
        "<!-- crossings: 0 -->\n"
        "<!-- geometry: leaf-spacing 40px, height-scale 40px/unit, margin 20px -->\n"
        "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n"
        "<line x1=\"60\" y1=\"60\" x2=\"100\" y2=\"60\"/>\n"
        "<line x1=\"60\" y1=\"60\" x2=\"60\" y2=\"100\"/>\n"
        "<line x1=\"100\" y1=\"60\" x2=\"100\" y2=\"100\"/>\n"
        "<line x1=\"20\" y1=\"20\" x2=\"80\" y2=\"20\"/>\n"
        "<line x1=\"20\" y1=\"20\" x2=\"20\" y2=\"100\"/>\n"
        "<line x1=\"80\" y1=\"20\" x2=\"80\" y2=\"60\"/>\n"
        "</g>\n"
        "<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n"
        "<text x=\"20\" y=\"116\">c</text>\n"
        "<text x=\"60\" y=\"116\">b</text>\n"
        "<text x=\"100\" y=\"116\">a</text>\n"
        "</g>\n</svg>\n");
  // byte-stable across runs
  CHECK(render(example_e1(), Ordering{{2, 1, 0}}, RenderFormat::svg) == svg);

  const std::string crossing = render(example_e1(), Ordering{{0, 2, 1}}, RenderFormat::svg);
  CHECK(crossing.find("<!-- crossings: 1 -->") != std::string::npos);
}

TEST_CASE("layout invariant: admissible order means zero crossings") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenConfig cfg;
    cfg.n = 2 + seed % 8;
    cfg.height_set = {Rational(1), Rational(2), Rational(4)};
    cfg.seed = seed * 7;
    const auto space = random_space(cfg);
    const auto ord = admissible_order(space);
    std::vector<std::string> leaf_order;
    for (std::size_t p : ord.points) leaf_order.push_back(space.label(p));
    CHECK(compute_layout(dendrogram_of(space), leaf_order).crossings == 0);
  }
}

TEST_CASE("render rejects unknown leaves and malformed orders") {
  CHECK(code_of([] {
          render(dendrogram_of(example_e1()), {"a", "b", "x"}, RenderFormat::ascii);
        }) == errc::unknown_leaf);
  CHECK(code_of([] {
          render(dendrogram_of(example_e1()), {"a", "b"}, RenderFormat::ascii);
        }) == errc::mismatched_input);
  CHECK(code_of([] { render(example_e1(), Ordering{{0, 1}}, RenderFormat::ascii); }) ==
        errc::invalid_sequence);
  CHECK(code_of([] { render(example_e1(), Ordering{{0, 1, 9}}, RenderFormat::ascii); }) ==
        errc::invalid_sequence);
}

TEST_SUITE_END();
