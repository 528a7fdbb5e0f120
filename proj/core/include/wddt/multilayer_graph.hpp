#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wddt/errors.hpp"

namespace wddt {

// Undirected edge; canonical storage keeps first < second.
using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Per-layer quantities consumed by the test statistic.
struct LayerSummary {
  std::uint64_t total_degree = 0;  // sum of all degrees (= 2x edge count)
  std::uint64_t two_paths = 0;     // ordered paths of length two
  std::uint64_t edge_count = 0;

  friend bool operator==(const LayerSummary&, const LayerSummary&) = default;
};

// L undirected simple graphs sharing the node set {0, .., n-1}.
// Immutable after construction; every member function is const and safe to
// call concurrently.
class MultilayerGraph {
 public:
  // layer_edges[l] lists undirected node pairs. Duplicates (either
  // orientation) collapse to a single edge; self-loops are rejected.
  MultilayerGraph(std::size_t num_nodes,
                  std::vector<std::vector<Edge>> layer_edges);

  std::size_t num_nodes() const noexcept { return n_; }
  std::size_t num_layers() const noexcept { return edges_.size(); }

  // Sorted canonical edge list of one layer.
  const std::vector<Edge>& edges(std::size_t layer) const;

  // Degree of every node in one layer.
  const std::vector<std::uint32_t>& degrees(std::size_t layer) const;

  // Sum of all degrees in one layer (twice the edge count).
  std::uint64_t total_degree(std::size_t layer) const;

  // Ordered paths of length two, computed as sum_i d_i (d_i - 1).
  std::uint64_t two_paths(std::size_t layer) const;

  // Literal triple loop over distinct (i, j, k); oracle for two_paths.
  // Guarded to n <= 200 against cubic blowup.
  std::uint64_t two_paths_bruteforce(std::size_t layer) const;

  // Edge count over n(n-1)/2; requires n >= 2.
  double edge_density(std::size_t layer) const;

  LayerSummary summarize(std::size_t layer) const;

  // Graph with node i renamed to perm[i] in every layer; perm must be a
  // permutation of {0, .., n-1}.
  MultilayerGraph relabeled(const std::vector<std::uint32_t>& perm) const;

  // Graph keeping the given layers in the given order (0-based, distinct,
  // nonempty). The first entry becomes the new reference layer.
  MultilayerGraph layer_subset(const std::vector<std::size_t>& layers) const;

  friend bool operator==(const MultilayerGraph&,
                         const MultilayerGraph&) = default;

 private:
  void check_layer(std::size_t layer) const;

  std::size_t n_ = 0;
  std::vector<std::vector<Edge>> edges_;             // per layer, sorted unique
  std::vector<std::vector<std::uint32_t>> degrees_;  // per layer, cached
};

}  // namespace wddt
