#include "wddt/multilayer_graph.hpp"

#include <algorithm>
#include <limits>

namespace wddt {

MultilayerGraph::MultilayerGraph(std::size_t num_nodes,
                                 std::vector<std::vector<Edge>> layer_edges)
    : n_(num_nodes), edges_(std::move(layer_edges)) {
  if (n_ == 0) throw Error("graph needs at least one node");
  if (n_ > std::numeric_limits<std::uint32_t>::max())
    throw Error("node count too large");
  if (edges_.empty()) throw Error("graph needs at least one layer");

  degrees_.reserve(edges_.size());
  for (auto& layer : edges_) {
    for (auto& [u, v] : layer) {
      if (u >= n_ || v >= n_) throw Error("edge endpoint out of range");
      if (u == v) throw Error("self-loop not allowed");
      if (u > v) std::swap(u, v);
    }
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());

    auto& deg = degrees_.emplace_back(n_, 0);
    for (const auto& [u, v] : layer) {
      ++deg[u];
      ++deg[v];
    }
  }
}

void MultilayerGraph::check_layer(std::size_t layer) const {
  if (layer >= edges_.size()) throw Error("layer index out of range");
}

const std::vector<Edge>& MultilayerGraph::edges(std::size_t layer) const {
  check_layer(layer);
  return edges_[layer];
}

const std::vector<std::uint32_t>& MultilayerGraph::degrees(
    std::size_t layer) const {
  check_layer(layer);
  return degrees_[layer];
}

std::uint64_t MultilayerGraph::total_degree(std::size_t layer) const {
  check_layer(layer);
  return 2 * static_cast<std::uint64_t>(edges_[layer].size());
}

std::uint64_t MultilayerGraph::two_paths(std::size_t layer) const {
  check_layer(layer);
  std::uint64_t count = 0;
  // d*(d-1) is 0 for d == 0 even with unsigned wraparound (0 times anything)
  for (std::uint64_t d : degrees_[layer]) count += d * (d - 1);
  return count;
}

std::uint64_t MultilayerGraph::two_paths_bruteforce(std::size_t layer) const {
  if (n_ > 200) throw Error("brute-force two-path count is limited to n <= 200");
  const auto& layer_edges = edges(layer);
  std::vector<char> adj(n_ * n_, 0);
  for (const auto& [u, v] : layer_edges) {
    adj[u * n_ + v] = 1;
    adj[v * n_ + u] = 1;
  }
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (i != j && j != k && i != k)
          count += static_cast<std::uint64_t>(adj[i * n_ + j] & adj[j * n_ + k]);
  return count;
}

double MultilayerGraph::edge_density(std::size_t layer) const {
  check_layer(layer);
  if (n_ < 2) throw Error("edge density needs at least two nodes");
  const double pairs = 0.5 * static_cast<double>(n_) * static_cast<double>(n_ - 1);
  return static_cast<double>(edges_[layer].size()) / pairs;
}

LayerSummary MultilayerGraph::summarize(std::size_t layer) const {
  check_layer(layer);
  return LayerSummary{total_degree(layer), two_paths(layer),
                      static_cast<std::uint64_t>(edges_[layer].size())};
}

MultilayerGraph MultilayerGraph::relabeled(
    const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != n_) throw Error("permutation length mismatch");
  std::vector<char> seen(n_, 0);
  for (std::uint32_t p : perm) {
    if (p >= n_ || seen[p]) throw Error("not a permutation");
    seen[p] = 1;
  }
  std::vector<std::vector<Edge>> mapped(edges_.size());
  for (std::size_t l = 0; l < edges_.size(); ++l) {
    mapped[l].reserve(edges_[l].size());
    for (const auto& [u, v] : edges_[l]) mapped[l].emplace_back(perm[u], perm[v]);
  }
  return MultilayerGraph(n_, std::move(mapped));
}

MultilayerGraph MultilayerGraph::layer_subset(
    const std::vector<std::size_t>& layers) const {
  if (layers.empty()) throw Error("layer subset must not be empty");
  std::vector<char> used(edges_.size(), 0);
  std::vector<std::vector<Edge>> chosen;
  chosen.reserve(layers.size());
  for (std::size_t l : layers) {
    check_layer(l);
    if (used[l]) throw Error("duplicate layer in subset");
    used[l] = 1;
    chosen.push_back(edges_[l]);
  }
  return MultilayerGraph(n_, std::move(chosen));
}

}  // namespace wddt
