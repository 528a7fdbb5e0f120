#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wddt/errors.hpp"

namespace wddt {

// Nonnegative node-weight vector for the random-graph model.
// Entries must lie in [0, 1]; the named constructors below additionally
// normalize to unit 2-norm (exactly for power_law_weights, up to the
// block rounding noted at two_block_weights).
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> entries);

  std::span<const double> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

  double l1_norm() const noexcept { return l1_; }
  double l2_norm() const noexcept { return l2_; }

  // Two largest entries; their product bounds every pairwise product.
  // second_largest() is 0 for a single-entry vector.
  double largest() const noexcept { return top1_; }
  double second_largest() const noexcept { return top2_; }

 private:
  std::vector<double> entries_;
  double l1_ = 0;
  double l2_ = 0;
  double top1_ = 0;
  double top2_ = 0;
};

// Inner product <a, b>; for unit-norm nonnegative vectors it lies in [0, 1]
// and equals 1 exactly when a == b.
double dot(const WeightVector& a, const WeightVector& b);

// Two-level weight vector: the first floor(n/r) entries equal
// lambda*sqrt(r)/sqrt(n), the remaining entries absorb the complementary
// mass. The 2-norm is exactly 1 when r divides n and within O(1/n) of 1
// otherwise. Requires r > 1, lambda in (0, 1], and n >= r.
WeightVector two_block_weights(std::size_t n, double r, double lambda);

// Inner product of two same-shape two-level vectors (any shared n and r):
// l1*l2 + sqrt((1 - l1^2)(1 - l2^2)).
double two_block_overlap(double lambda1, double lambda2);

// sum_{i=1}^{n} i^m for real m >= 0, by direct summation (supports the
// non-integer exponents the power-law weights need).
double faulhaber_sum(std::size_t n, double m);

// Power-law weight vector: entry i proportional to i^beta (1-based i),
// normalized to unit 2-norm. Requires beta >= 0.
WeightVector power_law_weights(std::size_t n, double beta);

// Large-n limit of the inner product of two power-law weight vectors:
// sqrt((2 b1 + 1)(2 b2 + 1)) / (b1 + b2 + 1).
double power_law_overlap_limit(double beta1, double beta2);

}  // namespace wddt
