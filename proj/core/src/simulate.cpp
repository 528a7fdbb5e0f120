#include "wddt/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <set>
#include <string>
#include <string_view>

#include "wddt/errors.hpp"
#include "wddt/parallel.hpp"
#include "wddt/statistic.hpp"

namespace wddt {

const char* family_name(WeightFamily family) {
  switch (family) {
    case WeightFamily::TwoBlock:
      return "two-block";
    case WeightFamily::PowerLaw:
      return "power-law";
  }
  throw Error("unknown weight family");
}

void SimConfig::validate() const {
  if (n < 2) throw Error("n must be at least 2");
  if (layers < 2) throw NeedTwoLayers();
  if (tau.size() != layers)
    throw Error("length mismatch: tau needs one entry per layer");
  if (family == WeightFamily::TwoBlock) {
    if (lambda.size() != layers)
      throw Error("length mismatch: lambda needs one entry per layer");
    if (!beta.empty()) throw Error("beta is not a two-block parameter");
    if (!std::isfinite(r) || !(r > 1.0)) throw Error("r must exceed 1");
  } else {
    if (beta.size() != layers)
      throw Error("length mismatch: beta needs one entry per layer");
    if (!lambda.empty()) throw Error("lambda is not a power-law parameter");
    if (r != 0.0) throw Error("r is not a power-law parameter");
  }
  if (replications < 1) throw Error("replications must be at least 1");
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw Error("alpha must lie strictly in (0, 1)");
}

ModelSpec build_model(const SimConfig& config) {
  config.validate();
  std::vector<double> rho = rho_from_tau(config.n, config.tau);
  std::vector<WeightVector> weights;
  weights.reserve(config.layers);
  for (std::size_t l = 0; l < config.layers; ++l) {
    if (config.family == WeightFamily::TwoBlock)
      weights.push_back(two_block_weights(config.n, config.r, config.lambda[l]));
    else
      weights.push_back(power_law_weights(config.n, config.beta[l]));
  }
  return ModelSpec(std::move(rho), std::move(weights));
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  // SplitMix64 step seeded at master with stride index + 1: the full
  // avalanche makes nearby indices produce unrelated generator seeds.
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> simulate_statistics(const SimConfig& config,
                                        unsigned threads) {
  const ModelSpec spec = build_model(config);
  std::vector<double> stats(config.replications);
  parallel_for(config.replications, threads, [&](std::size_t i) {
    const MultilayerGraph g = sample_rmhg(spec, mix_seed(config.seed, i));
    try {
      stats[i] = compute_wddt(g).statistic;
    } catch (const DegenerateLayer&) {
      stats[i] = std::numeric_limits<double>::quiet_NaN();
    }
  });
  return stats;
}

SimResult run_cell(const SimConfig& config, unsigned threads) {
  SimResult res;
  res.config = config;
  res.statistics = simulate_statistics(config, threads);
  const double crit = critical_value(config.alpha);

  std::size_t kept = 0;
  double mean = 0;
  for (double s : res.statistics) {
    if (std::isnan(s)) {
      ++res.degenerate;
      continue;
    }
    ++kept;
    mean += s;
    const bool by_stat = std::fabs(s) > crit;
    const bool by_p = two_sided_p_value(s) < config.alpha;
    if (by_stat != by_p) throw Error("internal: rejection rules disagree");
    if (by_stat) ++res.rejections;
  }
  if (kept == 0) throw AllDegenerate();
  mean /= static_cast<double>(kept);

  double ss = 0;
  for (double s : res.statistics) {
    if (std::isnan(s)) continue;
    ss += (s - mean) * (s - mean);
  }
  res.rejection_rate =
      static_cast<double>(res.rejections) / static_cast<double>(kept);
  res.mean_statistic = mean;
  res.var_statistic = kept > 1 ? ss / static_cast<double>(kept - 1) : 0.0;
  return res;
}

std::vector<GridOutcome> run_grid(std::span<const SimConfig> configs,
                                  unsigned threads,
                                  const GridProgress& progress) {
  std::vector<GridOutcome> out;
  out.reserve(configs.size());
  for (std::size_t k = 0; k < configs.size(); ++k) {
    if (progress) progress(k, configs.size(), configs[k]);
    GridOutcome o;
    o.config = configs[k];
    try {
      o.result = run_cell(configs[k], threads);
    } catch (const Error& e) {
      o.error = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& token, std::size_t line,
                    const std::string& key) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size() || !std::isfinite(v))
      throw Error("bad number");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "invalid number '" + token + "' for key '" + key +
                               "'");
  }
}

std::vector<double> parse_list(const std::string& value, std::size_t line,
                               const std::string& key) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    const std::string item =
        trim(comma == std::string::npos ? value.substr(start)
                                        : value.substr(start, comma - start));
    if (item.empty())
      throw ParseError(line, "empty element in list for key '" + key + "'");
    out.push_back(parse_number(item, line, key));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t parse_count(const std::string& token, std::size_t line,
                          const std::string& key) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(token, &pos);
    if (pos != token.size() ||
        token.find_first_of("-+. ") != std::string::npos)
      throw Error("bad count");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "invalid integer '" + token + "' for key '" + key +
                               "'");
  }
}

struct PendingCell {
  SimConfig config;
  std::size_t start_line = 0;
  std::size_t explicit_layers = 0;
  bool has_layers = false;
  std::set<std::string> seen;
};

void finish_cell(PendingCell& cell, std::vector<SimConfig>& out) {
  for (const char* key : {"n", "tau", "family"})
    if (!cell.seen.count(key))
      throw ParseError(cell.start_line, "cell '" + cell.config.name +
                                            "' is missing key '" + key + "'");
  cell.config.layers =
      cell.has_layers ? cell.explicit_layers : cell.config.tau.size();
  try {
    // Validate the cell now, including model feasibility, so a bad grid
    // file fails before any simulation starts.
    build_model(cell.config);
  } catch (const Error& e) {
    throw ParseError(cell.start_line,
                     "cell '" + cell.config.name + "': " + e.what());
  }
  out.push_back(std::move(cell.config));
}

}  // namespace

std::vector<SimConfig> parse_grid_file(std::istream& in) {
  std::vector<SimConfig> out;
  PendingCell cell;
  bool in_cell = false;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']')
        throw ParseError(line_no, "malformed section header '" + text + "'");
      const std::string name = trim(text.substr(1, text.size() - 2));
      if (name.empty()) throw ParseError(line_no, "empty cell name");
      if (in_cell) finish_cell(cell, out);
      cell = PendingCell{};
      cell.config.name = name;
      cell.start_line = line_no;
      in_cell = true;
      continue;
    }

    if (!in_cell)
      throw ParseError(line_no, "key outside a cell section");
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected key = value, got '" + text + "'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (value.empty())
      throw ParseError(line_no, "empty value for key '" + key + "'");
    if (!cell.seen.insert(key).second)
      throw ParseError(line_no, "duplicate key '" + key + "'");

    if (key == "n") {
      cell.config.n = parse_count(value, line_no, key);
    } else if (key == "L") {
      cell.explicit_layers = parse_count(value, line_no, key);
      cell.has_layers = true;
    } else if (key == "tau") {
      cell.config.tau = parse_list(value, line_no, key);
    } else if (key == "family") {
      if (value == "two-block") {
        cell.config.family = WeightFamily::TwoBlock;
      } else if (value == "power-law") {
        cell.config.family = WeightFamily::PowerLaw;
      } else {
        throw ParseError(line_no, "unknown family '" + value + "'");
      }
    } else if (key == "r") {
      cell.config.r = parse_number(value, line_no, key);
    } else if (key == "lambda") {
      cell.config.lambda = parse_list(value, line_no, key);
    } else if (key == "beta") {
      cell.config.beta = parse_list(value, line_no, key);
    } else if (key == "reps") {
      cell.config.replications = parse_count(value, line_no, key);
    } else if (key == "alpha") {
      cell.config.alpha = parse_number(value, line_no, key);
    } else if (key == "seed") {
      cell.config.seed = parse_count(value, line_no, key);
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }

  if (in_cell) finish_cell(cell, out);
  if (out.empty()) throw ParseError(0, "grid file defines no cells");
  return out;
}

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string join_values(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += '|';
    out += format_value(values[i]);
  }
  return out;
}

std::string parameter_field(const SimConfig& c) {
  std::string out = "tau=" + join_values(c.tau);
  if (c.family == WeightFamily::TwoBlock) {
    out += ";r=" + format_value(c.r);
    out += ";lambda=" + join_values(c.lambda);
  } else {
    out += ";beta=" + join_values(c.beta);
  }
  out += ";alpha=" + format_value(c.alpha);
  return out;
}

std::string csv_safe(std::string text) {
  for (char& ch : text)
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
  return text;
}

}  // namespace

std::string results_csv(std::span<const GridOutcome> outcomes) {
  if (outcomes.empty()) throw Error("no results to render");
  std::string out =
      "n,L,family,parameters,rejection_rate,degenerate_count,reps,seed,"
      "error\n";
  char buf[64];
  for (const auto& o : outcomes) {
    const SimConfig& c = o.config;
    out += std::to_string(c.n);
    out += ',';
    out += std::to_string(c.layers);
    out += ',';
    out += family_name(c.family);
    out += ',';
    out += parameter_field(c);
    out += ',';
    if (o.error.empty()) {
      std::snprintf(buf, sizeof buf, "%.3f", o.result.rejection_rate);
      out += buf;
      out += ',';
      out += std::to_string(o.result.degenerate);
    } else {
      out += "nan,";
      out += std::to_string(c.replications);
    }
    out += ',';
    out += std::to_string(c.replications);
    out += ',';
    out += std::to_string(c.seed);
    out += ',';
    out += csv_safe(o.error);
    out += '\n';
  }
  return out;
}

}  // namespace wddt
