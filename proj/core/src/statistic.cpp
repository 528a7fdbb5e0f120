#include "wddt/statistic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wddt/errors.hpp"
#include "wddt/normal.hpp"

namespace wddt {

double sigma_squared(std::span<const std::uint64_t> two_paths) {
  const std::size_t L = two_paths.size();
  if (L < 2) throw NeedTwoLayers();
  for (std::size_t l = 0; l < L; ++l)
    if (two_paths[l] == 0) throw DegenerateLayer(l);
  const double p1 = static_cast<double>(two_paths[0]);
  // Summing the tail contributions in sorted order makes the result a
  // function of the multiset of counts, not of the layer ordering.
  std::vector<double> tail(two_paths.begin() + 1, two_paths.end());
  std::sort(tail.begin(), tail.end());
  const double Lm1 = static_cast<double>(L - 1);
  double acc = 2.0 * Lm1 * Lm1 / p1;
  for (double pl : tail) acc += 2.0 / pl + 4.0 / std::sqrt(p1 * pl);
  return acc;
}

WddtResult compute_wddt(const MultilayerGraph& g) {
  const std::size_t n = g.num_nodes();
  const std::size_t L = g.num_layers();
  if (L < 2) throw NeedTwoLayers();

  WddtResult out;
  out.reference_layer = 0;
  out.layers.reserve(L);
  std::vector<std::uint64_t> two_paths(L);
  for (std::size_t l = 0; l < L; ++l) {
    out.layers.push_back(g.summarize(l));
    two_paths[l] = out.layers[l].two_paths;
    if (two_paths[l] == 0) throw DegenerateLayer(l);
  }
  out.sigma_sq = sigma_squared(two_paths);

  const auto& d1 = g.degrees(0);
  const double p1 = static_cast<double>(two_paths[0]);
  const double inv_root_p1 = 1.0 / std::sqrt(p1);
  const double deg1 = static_cast<double>(out.layers[0].total_degree);

  // One bracket per comparison layer: the squared scaled-degree gap with
  // its own expectation under the null removed.
  std::vector<std::pair<double, double>> terms;
  terms.reserve(L - 1);
  for (std::size_t l = 1; l < L; ++l) {
    const auto& dl = g.degrees(l);
    const double pl = static_cast<double>(two_paths[l]);
    const double inv_root_pl = 1.0 / std::sqrt(pl);
    double gap_sq = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double diff = static_cast<double>(d1[i]) * inv_root_p1 -
                          static_cast<double>(dl[i]) * inv_root_pl;
      gap_sq += diff * diff;
    }
    const double degl = static_cast<double>(out.layers[l].total_degree);
    terms.emplace_back(pl, gap_sq - deg1 / p1 - degl / pl);
  }
  // Canonical accumulation order, as in sigma_squared: reordering the
  // comparison layers must reproduce the statistic bit for bit.
  std::sort(terms.begin(), terms.end());
  double total = 0;
  for (const auto& [pl, bracket] : terms) total += bracket;

  out.statistic = total / std::sqrt(out.sigma_sq);
  out.p_value = two_sided_p_value(out.statistic);
  return out;
}

double two_sided_p_value(double d) {
  if (std::isnan(d)) throw Error("p-value of a non-numeric statistic");
  // P(|N(0,1)| > |d|) = erfc(|d| / sqrt(2)); the direct erfc form stays
  // accurate far into the tail where 2 * (1 - Phi) would round to 0.
  return std::erfc(std::fabs(d) * M_SQRT1_2);
}

double critical_value(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw Error("alpha must lie strictly in (0, 1)");
  double z = normal_quantile(1.0 - alpha / 2.0);
  // Align the threshold with the p-value rule exactly: nudge by ulps so
  // that |d| > z holds precisely when two_sided_p_value(d) < alpha.
  while (two_sided_p_value(z) < alpha)
    z = std::nextafter(z, -HUGE_VAL);
  while (two_sided_p_value(std::nextafter(z, HUGE_VAL)) >= alpha)
    z = std::nextafter(z, HUGE_VAL);
  return z;
}

Decision decide(const WddtResult& result, double alpha) {
  Decision d;
  d.alpha = alpha;
  d.critical_value = critical_value(alpha);
  d.reject = std::fabs(result.statistic) > d.critical_value;
  return d;
}

}  // namespace wddt
