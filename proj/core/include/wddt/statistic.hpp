#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wddt/multilayer_graph.hpp"

namespace wddt {

struct WddtResult {
  double statistic = 0.0;
  double sigma_sq = 0.0;
  double p_value = 1.0;
  std::size_t reference_layer = 0;
  std::vector<LayerSummary> layers;
};

struct Decision {
  bool reject = false;
  double alpha = 0.0;
  double critical_value = 0.0;
};

// Variance proxy sigma_n^2 built from the per-layer two-path counts,
// first entry acting as the reference layer. Throws DegenerateLayer if
// any count is zero and NeedTwoLayers for fewer than two entries.
double sigma_squared(std::span<const std::uint64_t> two_paths);

// The degree-difference statistic contrasting every layer against the
// first. The layer terms are accumulated in a canonical order, so any
// permutation of the non-reference layers yields the exact same double.
WddtResult compute_wddt(const MultilayerGraph& g);

// Two-sided tail probability of |N(0,1)| exceeding |d|.
double two_sided_p_value(double d);

// Largest threshold x such that two_sided_p_value(x) >= alpha: for every
// representable statistic, |D| > critical_value(alpha) is equivalent to
// two_sided_p_value(D) < alpha.
double critical_value(double alpha);

Decision decide(const WddtResult& result, double alpha);

}  // namespace wddt
