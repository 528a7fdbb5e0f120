#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wddt/multilayer_graph.hpp"
#include "wddt/statistic.hpp"

namespace wddt {

// A parsed multiplex edge list: the graph plus the original node and
// layer identifiers (both in index order) and any parse warnings.
struct MultiplexDataset {
  MultilayerGraph graph;
  std::vector<std::string> node_names;
  std::vector<std::string> layer_names;
  std::vector<std::string> warnings;
};

// Equality of the data proper; warnings are diagnostics and ignored.
bool same_dataset(const MultiplexDataset& a, const MultiplexDataset& b);

struct MultiplexOptions {
  // Fixes the node universe and its order; endpoints outside it are
  // errors. Overrides any roster found in the stream itself.
  std::optional<std::vector<std::string>> node_roster;
  // (file token, display name) pairs fixing layer order and names;
  // layer tokens outside it are errors. Overrides any in-stream roster.
  std::optional<std::vector<std::pair<std::string, std::string>>> layer_map;
};

// Parse "node node layer" lines (whitespace- or comma-separated; extra
// fields ignored with a warning). Lines starting with '#' are comments,
// except "#nodes:" and "#layers:" which pin the node / layer universe
// and its order. Self-loops are dropped and duplicate edges collapsed,
// each with a warning. Without a roster, nodes and layers are indexed
// in first-seen order.
MultiplexDataset parse_multiplex_edgelist(std::istream& in,
                                          const MultiplexOptions& options = {});

// Canonical text form of a dataset: "#nodes:" and "#layers:" rosters
// followed by one "u v layer" line per edge. Feeding the result back to
// parse_multiplex_edgelist reproduces the dataset exactly.
std::string serialize_multiplex(const MultiplexDataset& ds);

// One identifier per line; '#' comments and blank lines skipped.
std::vector<std::string> read_name_list(std::istream& in);

// "token name" pairs, one per line; '#' comments and blank lines skipped.
std::vector<std::pair<std::string, std::string>> read_layer_map(
    std::istream& in);

// Map layer selectors (display names, or 1-based indices for all-digit
// tokens) to layer indices. Errors on unknown names, duplicates, or
// fewer than two selectors.
std::vector<std::size_t> resolve_layers(std::span<const std::string> names,
                                        std::span<const std::string> order);

// Reassemble the chosen layers into a graph whose reference layer is the
// first entry of `order`.
MultilayerGraph select_layers(const MultiplexDataset& ds,
                              std::span<const std::string> order);

struct SubsetRow {
  std::vector<std::size_t> layers;  // original indices, ascending
  WddtResult result;                // valid only when !degenerate
  bool degenerate = false;
  std::size_t degenerate_layer = 0;  // original index of the bad layer
  bool reject = false;
};

struct SubsetReport {
  double alpha = 0.0;
  std::vector<SubsetRow> rows;
};

// Test every layer subset of size min_size..max_size (2 <= min <= max
// <= L), the lowest index acting as the reference layer. Rows are
// ordered by size, then lexicographically by index set. A subset with a
// degenerate layer is flagged and the analysis continues.
SubsetReport subset_analysis(const MultiplexDataset& ds, std::size_t min_size,
                             std::size_t max_size, double alpha,
                             unsigned threads = 1);

// CSV with the fixed header layers,statistic,p_value,decision; layer
// names joined by '|', values to three decimals, decisions rendered as
// "Reject H0" / "Not Reject H0" (or "Degenerate").
std::string subset_csv(const SubsetReport& report,
                       std::span<const std::string> layer_names);

// The same report as an aligned human-readable table.
std::string subset_table(const SubsetReport& report,
                         std::span<const std::string> layer_names);

}  // namespace wddt
