#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wddt/multilayer_graph.hpp"
#include "wddt/weights.hpp"

namespace wddt {

// A random multilayer graph model: layer l contains edge {i, j} (i != j)
// independently with probability rho[l] * w[l][i] * w[l][j].
class ModelSpec {
 public:
  ModelSpec(std::vector<double> rho, std::vector<WeightVector> weights);

  std::size_t num_nodes() const { return weights_.front().size(); }
  std::size_t num_layers() const { return rho_.size(); }
  double rho(std::size_t layer) const { return rho_.at(layer); }
  const WeightVector& weights(std::size_t layer) const {
    return weights_.at(layer);
  }

 private:
  std::vector<double> rho_;
  std::vector<WeightVector> weights_;
};

// Sparsity scales rho_l = n^{tau_l}.
std::vector<double> rho_from_tau(std::size_t n, std::span<const double> tau);

// Draw one multilayer graph from the model. A fixed seed yields a fixed
// graph on every platform: the generator is a mt19937_64 consumed in a
// canonical order (layers outermost, then node pairs (i, j) with i < j in
// lexicographic order, exactly one variate per pair).
MultilayerGraph sample_rmhg(const ModelSpec& spec, std::uint64_t seed);

// Population-level scale of the test statistic's normalisation: the
// analogue of sigma_n with each two-path count replaced by its leading
// term (rho_l * ||W_l||_1)^2. Requires at least two layers and strictly
// positive scales.
double theoretical_rn(const ModelSpec& spec);

}  // namespace wddt
