#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "wddt/multiplex.hpp"

using doctest::Approx;
using wddt::MultiplexDataset;
using wddt::MultiplexOptions;

namespace {

MultiplexDataset parse(const std::string& text,
                       const MultiplexOptions& options = {}) {
  std::istringstream in(text);
  return wddt::parse_multiplex_edgelist(in, options);
}

// Three layers on six nodes; layer z has a single edge and therefore no
// two-paths, which makes it degenerate for the test statistic.
const char* kThreeLayer =
    "#nodes: a b c d e f\n"
    "#layers: x y z\n"
    "a b x\n"
    "b c x\n"
    "a c x\n"
    "c d x\n"
    "a b y\n"
    "a c y\n"
    "a d y\n"
    "b d y\n"
    "e f z\n";

}  // namespace

TEST_CASE("the canonical dedup example") {
  const MultiplexDataset ds = parse("a b 1\nb a 1\na a 1\n");
  CHECK(ds.layer_names == std::vector<std::string>{"1"});
  CHECK(ds.node_names == std::vector<std::string>{"a", "b"});
  CHECK(ds.graph.edges(0) == std::vector<wddt::Edge>{{0, 1}});
  REQUIRE(ds.warnings.size() == 2);
  CHECK(ds.warnings[0].find("duplicate edge") != std::string::npos);
  CHECK(ds.warnings[0].find("line 2") != std::string::npos);
  CHECK(ds.warnings[1].find("self-loop") != std::string::npos);
  CHECK(ds.warnings[1].find("line 3") != std::string::npos);
}

TEST_CASE("first-seen ordering, comma separation, extra fields") {
  const MultiplexDataset ds =
      parse("v2,v7,friend,0.5\nv7 v1 work\nv1,v2,friend\n");
  CHECK(ds.node_names == std::vector<std::string>{"v2", "v7", "v1"});
  CHECK(ds.layer_names == std::vector<std::string>{"friend", "work"});
  CHECK(ds.graph.num_nodes() == 3);
  CHECK(ds.graph.edges(0).size() == 2);
  CHECK(ds.graph.edges(1).size() == 1);
  REQUIRE(ds.warnings.size() == 1);
  CHECK(ds.warnings[0] == "line 1: extra fields ignored");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse(""), "zero layers in input", wddt::Error);
  CHECK_THROWS_WITH_AS(parse("# only comments\n\n"), "zero layers in input",
                       wddt::Error);
  CHECK_THROWS_WITH_AS(parse("a b\n"),
                       "line 1: expected node, node, layer; got 2 field(s)",
                       wddt::Error);
  // A layer roster alone gives layers but no nodes.
  CHECK_THROWS_WITH_AS(parse("#layers: x y\n"), "zero nodes in input",
                       wddt::Error);

  MultiplexOptions options;
  options.node_roster = std::vector<std::string>{"a", "b"};
  CHECK_THROWS_WITH_AS(parse("a c 1\n", options), "line 1: unknown node 'c'",
                       wddt::Error);
  options.node_roster = std::vector<std::string>{"a", "a"};
  CHECK_THROWS_WITH_AS(parse("a b 1\n", options),
                       "duplicate node 'a' in roster", wddt::Error);
}

TEST_CASE("rosters pin order and admit isolated nodes") {
  const MultiplexDataset ds = parse(kThreeLayer);
  CHECK(ds.node_names == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  CHECK(ds.layer_names == std::vector<std::string>{"x", "y", "z"});
  CHECK(ds.warnings.empty());

  // Without the rosters, first-seen order takes over.
  const MultiplexDataset loose = parse("e f z\na b x\n");
  CHECK(loose.node_names == std::vector<std::string>{"e", "f", "a", "b"});
  CHECK(loose.layer_names == std::vector<std::string>{"z", "x"});

  // In-stream roster tokens must cover every referenced identifier.
  CHECK_THROWS_WITH_AS(parse("#layers: x\na b q\n"),
                       "line 2: unknown layer 'q'", wddt::Error);
  CHECK_THROWS_WITH_AS(parse("#nodes: a\n#nodes: b\na a 1\n"),
                       "line 2: duplicate node roster", wddt::Error);

  // Roster-only nodes stay as isolated vertices.
  const MultiplexDataset iso = parse("#nodes: a b ghost\na b 1\n");
  CHECK(iso.graph.num_nodes() == 3);
  CHECK(iso.graph.degrees(0) == std::vector<std::uint32_t>{1, 1, 0});
}

TEST_CASE("explicit options override in-stream rosters") {
  MultiplexOptions options;
  options.node_roster = std::vector<std::string>{"b", "a", "zz"};
  options.layer_map =
      std::vector<std::pair<std::string, std::string>>{{"1", "lunch"}};
  const MultiplexDataset ds = parse("#nodes: a b\n#layers: 1\na b 1\n", options);
  CHECK(ds.node_names == std::vector<std::string>{"b", "a", "zz"});
  CHECK(ds.layer_names == std::vector<std::string>{"lunch"});
  CHECK(ds.graph.edges(0) == std::vector<wddt::Edge>{{0, 1}});

  // Tokens outside the layer map are rejected.
  CHECK_THROWS_WITH_AS(parse("a b 2\n", options), "line 1: unknown layer '2'",
                       wddt::Error);
}

TEST_CASE("serialization round-trips exactly") {
  for (const char* text :
       {kThreeLayer, "a b 1\nb a 1\na a 1\n", "v2,v7,q\nv7 v1 w\n"}) {
    const MultiplexDataset ds = parse(text);
    const std::string canon = wddt::serialize_multiplex(ds);
    const MultiplexDataset back = parse(canon);
    CHECK(wddt::same_dataset(ds, back));
    CHECK(back.warnings.empty());
    CHECK(wddt::serialize_multiplex(back) == canon);
  }
}

TEST_CASE("line order cannot move the statistic") {
  const MultiplexDataset a = parse(
      "a b x\nc d x\na c x\nb d y\na c y\nc d y\na d y\n");
  const MultiplexDataset b = parse(
      "c d x\na c x\na b x\na d y\nc d y\na c y\nb d y\n");
  // Different internal indices...
  CHECK(a.node_names != b.node_names);
  // ...same test result.
  CHECK(wddt::compute_wddt(b.graph).statistic ==
        Approx(wddt::compute_wddt(a.graph).statistic).epsilon(1e-12));
}

TEST_CASE("auxiliary file readers") {
  std::istringstream roster("# staff\na\nb\n\nc\n");
  CHECK(wddt::read_name_list(roster) ==
        std::vector<std::string>{"a", "b", "c"});
  std::istringstream bad_roster("a b\n");
  CHECK_THROWS_WITH_AS(wddt::read_name_list(bad_roster),
                       "line 1: expected a single identifier", wddt::Error);

  std::istringstream map("# map\n1 lunch\n2 facebook\n");
  const auto pairs = wddt::read_layer_map(map);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<std::string, std::string>{"1", "lunch"});
  CHECK(pairs[1] == std::pair<std::string, std::string>{"2", "facebook"});
  std::istringstream bad_map("1 lunch extra\n");
  CHECK_THROWS_WITH_AS(wddt::read_layer_map(bad_map),
                       "line 1: expected layer token and name", wddt::Error);
}

TEST_CASE("layer selection by name and by index") {
  const MultiplexDataset ds = parse(kThreeLayer);
  const std::vector<std::string> names{"y", "x"};
  const wddt::MultilayerGraph g = wddt::select_layers(ds, names);
  CHECK(g.num_layers() == 2);
  CHECK(g.edges(0) == ds.graph.edges(1));
  CHECK(g.edges(1) == ds.graph.edges(0));

  // Numeric selectors are 1-based positions.
  const std::vector<std::string> numeric{"2", "1"};
  CHECK(wddt::select_layers(ds, numeric) == g);

  // A layer whose name is itself a number wins over the position.
  const MultiplexDataset tricky = parse("a b 2\nb c 2\na c 2\na b q\nb c q\n");
  REQUIRE(tricky.layer_names == std::vector<std::string>{"2", "q"});
  const std::vector<std::string> sel{"2", "q"};
  CHECK(wddt::select_layers(tricky, sel).edges(0) == tricky.graph.edges(0));

  const std::vector<std::string> unknown{"x", "w"};
  CHECK_THROWS_WITH_AS(wddt::select_layers(ds, unknown), "unknown layer 'w'",
                       wddt::Error);
  const std::vector<std::string> dup{"x", "1"};
  CHECK_THROWS_WITH_AS(wddt::select_layers(ds, dup), "duplicate layer '1'",
                       wddt::Error);
  const std::vector<std::string> single{"x"};
  CHECK_THROWS_WITH_AS(wddt::select_layers(ds, single),
                       "need at least two layers", wddt::Error);
}

TEST_CASE("swapping a pair of layers is a symmetry of the test") {
  const MultiplexDataset ds = parse(kThreeLayer);
  const std::vector<std::string> xy{"x", "y"};
  const std::vector<std::string> yx{"y", "x"};
  const double a = wddt::compute_wddt(wddt::select_layers(ds, xy)).statistic;
  const double b = wddt::compute_wddt(wddt::select_layers(ds, yx)).statistic;
  CHECK(a == Approx(b).epsilon(1e-12));
}

TEST_CASE("subset analysis enumerates sizes ascending, lexicographic") {
  const MultiplexDataset ds = parse(kThreeLayer);
  const wddt::SubsetReport report = wddt::subset_analysis(ds, 2, 3, 0.05);
  REQUIRE(report.rows.size() == 4);  // C(3,2) + C(3,3)
  CHECK(report.alpha == 0.05);
  CHECK(report.rows[0].layers == std::vector<std::size_t>{0, 1});
  CHECK(report.rows[1].layers == std::vector<std::size_t>{0, 2});
  CHECK(report.rows[2].layers == std::vector<std::size_t>{1, 2});
  CHECK(report.rows[3].layers == std::vector<std::size_t>{0, 1, 2});

  // Only subsets touching the single-edge layer z are degenerate, and the
  // flag names the original layer index.
  CHECK_FALSE(report.rows[0].degenerate);
  CHECK(report.rows[1].degenerate);
  CHECK(report.rows[1].degenerate_layer == 2);
  CHECK(report.rows[2].degenerate);
  CHECK(report.rows[3].degenerate);

  // The non-degenerate row agrees with a direct computation.
  const double direct =
      wddt::compute_wddt(ds.graph.layer_subset({0, 1})).statistic;
  CHECK(report.rows[0].result.statistic == direct);
  CHECK(report.rows[0].reject ==
        (report.rows[0].result.p_value < report.alpha));
}

TEST_CASE("subset count follows the binomial formula") {
  // Five layers, each a triangle on different nodes: 10 + 10 + 5 + 1 rows.
  std::string text;
  for (int l = 0; l < 5; ++l) {
    const std::string layer = "L" + std::to_string(l);
    for (const auto& [u, v] :
         std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}}) {
      text += "n" + std::to_string(u + 3 * l) + " n" +
              std::to_string(v + 3 * l) + " " + layer + "\n";
    }
  }
  const MultiplexDataset ds = parse(text);
  CHECK(wddt::subset_analysis(ds, 2, 5, 0.05).rows.size() == 26);
  CHECK(wddt::subset_analysis(ds, 2, 2, 0.05).rows.size() == 10);
  CHECK(wddt::subset_analysis(ds, 5, 5, 0.05).rows.size() == 1);

  CHECK_THROWS_WITH_AS(wddt::subset_analysis(ds, 1, 5, 0.05),
                       "subset sizes must satisfy 2 <= min <= max <= layer "
                       "count",
                       wddt::Error);
  CHECK_THROWS_WITH_AS(wddt::subset_analysis(ds, 3, 2, 0.05),
                       "subset sizes must satisfy 2 <= min <= max <= layer "
                       "count",
                       wddt::Error);
  CHECK_THROWS_WITH_AS(wddt::subset_analysis(ds, 2, 6, 0.05),
                       "subset sizes must satisfy 2 <= min <= max <= layer "
                       "count",
                       wddt::Error);
  CHECK_THROWS_WITH_AS(wddt::subset_analysis(ds, 2, 5, 0.0),
                       "alpha must lie strictly in (0, 1)", wddt::Error);
}

TEST_CASE("subset analysis is identical for any thread count") {
  const MultiplexDataset ds = parse(kThreeLayer);
  const wddt::SubsetReport serial = wddt::subset_analysis(ds, 2, 3, 0.05, 1);
  const wddt::SubsetReport threaded = wddt::subset_analysis(ds, 2, 3, 0.05, 4);
  REQUIRE(serial.rows.size() == threaded.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].layers == threaded.rows[i].layers);
    CHECK(serial.rows[i].degenerate == threaded.rows[i].degenerate);
    if (!serial.rows[i].degenerate)
      CHECK(serial.rows[i].result.statistic ==
            threaded.rows[i].result.statistic);
  }
}

TEST_CASE("subset report rendering") {
  const MultiplexDataset ds = parse(kThreeLayer);
  const wddt::SubsetReport report = wddt::subset_analysis(ds, 2, 3, 0.05);
  const std::string csv = wddt::subset_csv(report, ds.layer_names);

  std::istringstream lines(csv);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "layers,statistic,p_value,decision");
  REQUIRE(std::getline(lines, line));
  CHECK(line.rfind("x|y,", 0) == 0);
  CHECK((line.find("Reject H0") != std::string::npos ||
         line.find("Not Reject H0") != std::string::npos));
  REQUIRE(std::getline(lines, line));
  CHECK(line == "x|z,nan,nan,Degenerate");
  REQUIRE(std::getline(lines, line));
  CHECK(line == "y|z,nan,nan,Degenerate");
  REQUIRE(std::getline(lines, line));
  CHECK(line == "x|y|z,nan,nan,Degenerate");

  const std::string table = wddt::subset_table(report, ds.layer_names);
  CHECK(table.rfind("layers", 0) == 0);
  CHECK(table.find("statistic") != std::string::npos);
  CHECK(table.find("x|y|z") != std::string::npos);
  CHECK(table.find("Degenerate") != std::string::npos);
}
