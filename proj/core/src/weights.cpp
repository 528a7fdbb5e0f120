#include "wddt/weights.hpp"

#include <algorithm>
#include <cmath>

namespace wddt {

WeightVector::WeightVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error("weight vector must not be empty");
  double sq = 0;
  for (double w : entries_) {
    if (!std::isfinite(w) || w < 0.0 || w > 1.0 + 1e-12)
      throw Error("weight entries must lie in [0, 1]");
    l1_ += w;
    sq += w * w;
    if (w > top1_) {
      top2_ = top1_;
      top1_ = w;
    } else if (w > top2_) {
      top2_ = w;
    }
  }
  l2_ = std::sqrt(sq);
}

double dot(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw Error("length mismatch: weight vectors");
  double acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

WeightVector two_block_weights(std::size_t n, double r, double lambda) {
  if (n == 0) throw Error("weight vector must not be empty");
  if (!(r > 1.0)) throw Error("r must exceed 1");
  if (!(lambda > 0.0) || lambda > 1.0) throw Error("lambda must lie in (0, 1]");
  // Head block of floor(n/r) nodes (the nudge keeps an integral n/r from
  // landing just below a whole number); the 2-norm is exactly 1 when r
  // divides n and within O(1/n) of 1 otherwise.
  const double split = static_cast<double>(n) / r;
  const auto head_count =
      static_cast<std::size_t>(std::floor(split + 1e-9));
  if (head_count == 0) throw Error("n must be at least r nodes");
  const double root_n = std::sqrt(static_cast<double>(n));
  const double head = lambda * std::sqrt(r) / root_n;
  const double tail = std::sqrt(r / (r - 1.0) * (1.0 - lambda * lambda)) / root_n;
  std::vector<double> w(n);
  std::fill(w.begin(), w.begin() + head_count, head);
  std::fill(w.begin() + head_count, w.end(), tail);
  return WeightVector(std::move(w));
}

double two_block_overlap(double lambda1, double lambda2) {
  return lambda1 * lambda2 +
         std::sqrt((1.0 - lambda1 * lambda1) * (1.0 - lambda2 * lambda2));
}

double faulhaber_sum(std::size_t n, double m) {
  if (n == 0) throw Error("faulhaber_sum needs n >= 1");
  if (!(m >= 0.0)) throw Error("faulhaber_sum needs m >= 0");
  double acc = 0;
  for (std::size_t i = 1; i <= n; ++i)
    acc += std::pow(static_cast<double>(i), m);
  return acc;
}

WeightVector power_law_weights(std::size_t n, double beta) {
  if (n == 0) throw Error("weight vector must not be empty");
  if (!(beta >= 0.0)) throw Error("beta must be nonnegative");
  const double norm = std::sqrt(faulhaber_sum(n, 2.0 * beta));
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = std::pow(static_cast<double>(i + 1), beta) / norm;
  return WeightVector(std::move(w));
}

double power_law_overlap_limit(double beta1, double beta2) {
  return std::sqrt((2.0 * beta1 + 1.0) * (2.0 * beta2 + 1.0)) /
         (beta1 + beta2 + 1.0);
}

}  // namespace wddt
