#pragma once

namespace wddt {

// Standard normal CDF, accurate to well under 1e-10 absolute error.
double normal_cdf(double x);

// Inverse of normal_cdf for p in (0, 1); throws wddt::Error otherwise.
// Rational initial guess refined by one Halley step; absolute error in
// the reproduced probability is below 1e-10 across the open interval.
double normal_quantile(double p);

}  // namespace wddt
