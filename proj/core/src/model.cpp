#include "wddt/model.hpp"

#include <cmath>
#include <random>
#include <string>

#include "wddt/errors.hpp"

namespace wddt {

ModelSpec::ModelSpec(std::vector<double> rho, std::vector<WeightVector> weights)
    : rho_(std::move(rho)), weights_(std::move(weights)) {
  if (rho_.empty()) throw Error("model needs at least one layer");
  if (rho_.size() != weights_.size())
    throw Error("length mismatch: rho and weights");
  const std::size_t n = weights_.front().size();
  for (const auto& w : weights_)
    if (w.size() != n) throw Error("length mismatch: weight vectors");
  for (std::size_t l = 0; l < rho_.size(); ++l) {
    if (!std::isfinite(rho_[l]) || rho_[l] < 0.0)
      throw Error("rho must be nonnegative");
    // The largest edge probability in layer l pairs the two largest
    // weights; it must not exceed 1 (up to roundoff in the weights).
    const double peak = (rho_[l] * weights_[l].largest()) *
                        weights_[l].second_largest();
    if (peak > 1.0 + 1e-9)
      throw ModelInfeasible("edge probability " + std::to_string(peak) +
                            " exceeds 1 in layer " + std::to_string(l));
  }
}

std::vector<double> rho_from_tau(std::size_t n, std::span<const double> tau) {
  std::vector<double> rho(tau.size());
  for (std::size_t l = 0; l < tau.size(); ++l)
    rho[l] = std::pow(static_cast<double>(n), tau[l]);
  return rho;
}

MultilayerGraph sample_rmhg(const ModelSpec& spec, std::uint64_t seed) {
  const std::size_t n = spec.num_nodes();
  const std::size_t L = spec.num_layers();
  std::mt19937_64 eng(seed);
  // Top 53 bits of each word give a uniform double in [0, 1). Using the
  // raw engine keeps draws identical across standard libraries, which
  // std::uniform_real_distribution does not guarantee.
  auto uniform = [&eng]() {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
  };
  std::vector<std::vector<Edge>> layers(L);
  for (std::size_t l = 0; l < L; ++l) {
    const WeightVector& w = spec.weights(l);
    const double rho = spec.rho(l);
    auto& edges = layers[l];
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      const double wi_rho = rho * w[i];
      for (std::uint32_t j = i + 1; j < n; ++j) {
        // One variate per pair unconditionally, so the stream position
        // of every pair is independent of earlier outcomes.
        const double u = uniform();
        if (u < wi_rho * w[j]) edges.emplace_back(i, j);
      }
    }
  }
  return MultilayerGraph(n, std::move(layers));
}

double theoretical_rn(const ModelSpec& spec) {
  const std::size_t L = spec.num_layers();
  if (L < 2) throw NeedTwoLayers();
  std::vector<double> scale(L);
  for (std::size_t l = 0; l < L; ++l) {
    scale[l] = spec.rho(l) * spec.weights(l).l1_norm();
    if (!(scale[l] > 0.0))
      throw Error("theoretical_rn needs rho * ||W||_1 > 0 in every layer");
  }
  const double Lm1 = static_cast<double>(L - 1);
  double total = 2.0 * Lm1 * Lm1 / (scale[0] * scale[0]);
  for (std::size_t l = 1; l < L; ++l)
    total += 2.0 / (scale[l] * scale[l]) + 4.0 / (scale[0] * scale[l]);
  return std::sqrt(total);
}

}  // namespace wddt
