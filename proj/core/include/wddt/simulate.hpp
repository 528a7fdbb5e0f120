#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wddt/model.hpp"

namespace wddt {

enum class WeightFamily { TwoBlock, PowerLaw };

const char* family_name(WeightFamily family);

// One Monte Carlo cell: a model family with its parameters, a
// replication count, a test level and a master seed.
struct SimConfig {
  std::string name;
  std::size_t n = 0;
  std::size_t layers = 0;
  std::vector<double> tau;
  WeightFamily family = WeightFamily::TwoBlock;
  double r = 0.0;                // two-block: block-size ratio n / n1
  std::vector<double> lambda;    // two-block: one loading per layer
  std::vector<double> beta;      // power-law: one exponent per layer
  std::size_t replications = 1000;
  double alpha = 0.05;
  std::uint64_t seed = 1;

  // Throws wddt::Error on structural problems (sizes, ranges, parameters
  // from the wrong family). Does not sample anything.
  void validate() const;
};

// Materialise the layer probabilities and weight vectors for a cell.
ModelSpec build_model(const SimConfig& config);

// Derive the seed for one replication from the master seed. A fixed
// (master, index) pair maps to a fixed value on every platform, and
// distinct indices give well-spread streams.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

// All replication statistics for a cell, one entry per replication in
// index order; a replication whose sampled graph has a degenerate layer
// is recorded as NaN. The result is identical for every thread count.
std::vector<double> simulate_statistics(const SimConfig& config,
                                        unsigned threads = 1);

struct SimResult {
  SimConfig config;
  std::size_t rejections = 0;
  std::size_t degenerate = 0;
  double rejection_rate = 0.0;
  double mean_statistic = 0.0;
  double var_statistic = 0.0;
  std::vector<double> statistics;
};

// Run one cell and summarise it. Degenerate replications are excluded
// from the rate and the moments; if every replication is degenerate,
// throws AllDegenerate.
SimResult run_cell(const SimConfig& config, unsigned threads = 1);

struct GridOutcome {
  SimConfig config;
  SimResult result;      // meaningful only when error is empty
  std::string error;     // empty on success
};

using GridProgress =
    std::function<void(std::size_t index, std::size_t total,
                       const SimConfig& config)>;

// Run a batch of cells, capturing per-cell failures as messages instead
// of aborting the batch. `progress` (if set) is invoked before each cell.
std::vector<GridOutcome> run_grid(std::span<const SimConfig> configs,
                                  unsigned threads = 1,
                                  const GridProgress& progress = {});

// Parse a grid description: one `[name]` section per cell followed by
// `key = value` lines. Keys: n, L, tau, family, r, lambda, beta, reps,
// alpha, seed; vector values are comma separated; `#` starts a comment.
// L may be omitted when tau is given. Unknown or repeated keys, bad
// values and infeasible cells raise ParseError with the line number.
std::vector<SimConfig> parse_grid_file(std::istream& in);

// Render grid outcomes as CSV with the header
// n,L,family,parameters,rejection_rate,degenerate_count,reps,seed,error.
std::string results_csv(std::span<const GridOutcome> outcomes);

}  // namespace wddt
