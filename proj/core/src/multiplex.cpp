#include "wddt/multiplex.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <map>
#include <numeric>
#include <set>

#include "wddt/errors.hpp"
#include "wddt/parallel.hpp"

namespace wddt {

bool same_dataset(const MultiplexDataset& a, const MultiplexDataset& b) {
  return a.node_names == b.node_names && a.layer_names == b.layer_names &&
         a.graph == b.graph;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
      if (!cur.empty()) {
        out.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string_view ltrim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

bool strip_prefix(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

// A registry of identifiers in a fixed or first-seen order.
class NameTable {
 public:
  void fix(const std::vector<std::string>& names, const char* kind) {
    for (const auto& name : names) {
      if (!index_.emplace(name, names_.size()).second)
        throw Error(std::string("duplicate ") + kind + " '" + name +
                    "' in roster");
      names_.push_back(name);
    }
    fixed_ = true;
  }

  std::size_t resolve(const std::string& name, std::size_t line,
                      const char* kind) {
    const auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (fixed_)
      throw ParseError(line,
                       std::string("unknown ") + kind + " '" + name + "'");
    const std::size_t id = names_.size();
    index_.emplace(name, id);
    names_.push_back(name);
    return id;
  }

  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  bool fixed_ = false;
};

}  // namespace

MultiplexDataset parse_multiplex_edgelist(std::istream& in,
                                          const MultiplexOptions& options) {
  struct RawEdge {
    std::size_t line;
    std::string u, v, layer;
  };
  std::vector<RawEdge> raw;
  std::optional<std::vector<std::string>> stream_nodes;
  std::optional<std::vector<std::string>> stream_layers;
  std::vector<std::string> warnings;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = ltrim(line);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) continue;
    if (text.front() == '#') {
      text.remove_prefix(1);
      std::string_view body = ltrim(text);
      if (strip_prefix(body, "nodes:")) {
        if (stream_nodes)
          throw ParseError(line_no, "duplicate node roster");
        stream_nodes = tokenize(body);
      } else if (strip_prefix(body, "layers:")) {
        if (stream_layers)
          throw ParseError(line_no, "duplicate layer roster");
        stream_layers = tokenize(body);
      }
      continue;  // plain comment
    }
    std::vector<std::string> fields = tokenize(text);
    if (fields.size() < 3)
      throw ParseError(line_no, "expected node, node, layer; got " +
                                    std::to_string(fields.size()) +
                                    " field(s)");
    if (fields.size() > 3)
      warnings.push_back("line " + std::to_string(line_no) +
                         ": extra fields ignored");
    raw.push_back({line_no, std::move(fields[0]), std::move(fields[1]),
                   std::move(fields[2])});
  }

  NameTable nodes;
  if (options.node_roster) {
    nodes.fix(*options.node_roster, "node");
  } else if (stream_nodes) {
    nodes.fix(*stream_nodes, "node");
  }

  NameTable layer_tokens;
  std::vector<std::string> layer_names;
  if (options.layer_map) {
    std::vector<std::string> tokens;
    std::set<std::string> seen_names;
    for (const auto& [token, name] : *options.layer_map) {
      tokens.push_back(token);
      if (!seen_names.insert(name).second)
        throw Error("duplicate layer '" + name + "' in roster");
      layer_names.push_back(name);
    }
    layer_tokens.fix(tokens, "layer");
  } else if (stream_layers) {
    layer_tokens.fix(*stream_layers, "layer");
    layer_names = *stream_layers;
  }

  std::vector<std::vector<Edge>> edges(layer_names.size());
  std::vector<std::set<Edge>> seen(layer_names.size());
  for (const RawEdge& e : raw) {
    const std::size_t layer = layer_tokens.resolve(e.layer, e.line, "layer");
    if (layer >= edges.size()) {
      edges.resize(layer + 1);
      seen.resize(layer + 1);
      layer_names.push_back(e.layer);
    }
    const std::size_t u = nodes.resolve(e.u, e.line, "node");
    const std::size_t v = nodes.resolve(e.v, e.line, "node");
    if (u == v) {
      warnings.push_back("line " + std::to_string(e.line) + ": self-loop '" +
                         e.u + "' dropped");
      continue;
    }
    const Edge edge{static_cast<std::uint32_t>(std::min(u, v)),
                    static_cast<std::uint32_t>(std::max(u, v))};
    if (!seen[layer].insert(edge).second) {
      warnings.push_back("line " + std::to_string(e.line) +
                         ": duplicate edge '" + e.u + "'-'" + e.v +
                         "' collapsed");
      continue;
    }
    edges[layer].push_back(edge);
  }

  if (layer_names.empty()) throw Error("zero layers in input");
  if (nodes.names().empty()) throw Error("zero nodes in input");

  MultiplexDataset ds{
      MultilayerGraph(nodes.names().size(), std::move(edges)),
      nodes.names(), std::move(layer_names), std::move(warnings)};
  return ds;
}

std::string serialize_multiplex(const MultiplexDataset& ds) {
  std::string out = "#nodes:";
  for (const auto& name : ds.node_names) {
    out += ' ';
    out += name;
  }
  out += "\n#layers:";
  for (const auto& name : ds.layer_names) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (std::size_t l = 0; l < ds.layer_names.size(); ++l) {
    for (const Edge& e : ds.graph.edges(l)) {
      out += ds.node_names[e.first];
      out += ' ';
      out += ds.node_names[e.second];
      out += ' ';
      out += ds.layer_names[l];
      out += '\n';
    }
  }
  return out;
}

std::vector<std::string> read_name_list(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = ltrim(line);
    if (text.empty() || text.front() == '#') continue;
    std::vector<std::string> fields = tokenize(text);
    if (fields.empty()) continue;
    if (fields.size() != 1)
      throw ParseError(line_no, "expected a single identifier");
    out.push_back(std::move(fields[0]));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_layer_map(
    std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = ltrim(line);
    if (text.empty() || text.front() == '#') continue;
    std::vector<std::string> fields = tokenize(text);
    if (fields.empty()) continue;
    if (fields.size() != 2)
      throw ParseError(line_no, "expected layer token and name");
    out.emplace_back(std::move(fields[0]), std::move(fields[1]));
  }
  return out;
}

std::vector<std::size_t> resolve_layers(std::span<const std::string> names,
                                        std::span<const std::string> order) {
  if (order.size() < 2) throw NeedTwoLayers();
  std::vector<std::size_t> out;
  std::set<std::size_t> used;
  out.reserve(order.size());
  for (const std::string& sel : order) {
    std::size_t idx = names.size();
    const auto it = std::find(names.begin(), names.end(), sel);
    if (it != names.end()) {
      idx = static_cast<std::size_t>(it - names.begin());
    } else if (!sel.empty() &&
               std::all_of(sel.begin(), sel.end(),
                           [](unsigned char c) { return std::isdigit(c); })) {
      // Purely numeric selectors are 1-based layer positions.
      const unsigned long long k = std::stoull(sel);
      if (k >= 1 && k <= names.size()) idx = static_cast<std::size_t>(k - 1);
    }
    if (idx >= names.size()) throw Error("unknown layer '" + sel + "'");
    if (!used.insert(idx).second)
      throw Error("duplicate layer '" + sel + "'");
    out.push_back(idx);
  }
  return out;
}

MultilayerGraph select_layers(const MultiplexDataset& ds,
                              std::span<const std::string> order) {
  return ds.graph.layer_subset(resolve_layers(ds.layer_names, order));
}

namespace {

std::vector<std::vector<std::size_t>> enumerate_subsets(std::size_t L,
                                                        std::size_t min_size,
                                                        std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = min_size; k <= max_size; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      out.push_back(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == L - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

SubsetReport subset_analysis(const MultiplexDataset& ds, std::size_t min_size,
                             std::size_t max_size, double alpha,
                             unsigned threads) {
  const std::size_t L = ds.layer_names.size();
  if (min_size < 2 || min_size > max_size || max_size > L)
    throw Error("subset sizes must satisfy 2 <= min <= max <= layer count");
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw Error("alpha must lie strictly in (0, 1)");

  const auto combos = enumerate_subsets(L, min_size, max_size);
  SubsetReport report;
  report.alpha = alpha;
  report.rows.resize(combos.size());
  parallel_for(combos.size(), threads, [&](std::size_t i) {
    SubsetRow& row = report.rows[i];
    row.layers = combos[i];
    try {
      row.result = compute_wddt(ds.graph.layer_subset(combos[i]));
      row.reject = row.result.p_value < alpha;
    } catch (const DegenerateLayer& e) {
      row.degenerate = true;
      row.degenerate_layer = combos[i][e.layer];
    }
  });
  return report;
}

namespace {

std::string subset_label(const SubsetRow& row,
                         std::span<const std::string> layer_names) {
  std::string out;
  for (std::size_t i = 0; i < row.layers.size(); ++i) {
    if (i) out += '|';
    out += layer_names[row.layers[i]];
  }
  return out;
}

const char* subset_decision(const SubsetRow& row) {
  if (row.degenerate) return "Degenerate";
  return row.reject ? "Reject H0" : "Not Reject H0";
}

}  // namespace

std::string subset_csv(const SubsetReport& report,
                       std::span<const std::string> layer_names) {
  std::string out = "layers,statistic,p_value,decision\n";
  char buf[64];
  for (const SubsetRow& row : report.rows) {
    out += subset_label(row, layer_names);
    if (row.degenerate) {
      out += ",nan,nan,";
    } else {
      std::snprintf(buf, sizeof buf, ",%.3f,%.3f,", row.result.statistic,
                    row.result.p_value);
      out += buf;
    }
    out += subset_decision(row);
    out += '\n';
  }
  return out;
}

std::string subset_table(const SubsetReport& report,
                         std::span<const std::string> layer_names) {
  std::vector<std::string> labels;
  labels.reserve(report.rows.size());
  std::size_t width = 6;  // at least the "layers" heading
  for (const SubsetRow& row : report.rows) {
    labels.push_back(subset_label(row, layer_names));
    width = std::max(width, labels.back().size());
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-*s  %9s  %7s  %s\n",
                static_cast<int>(width), "layers", "statistic", "p_value",
                "decision");
  std::string out = buf;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const SubsetRow& row = report.rows[i];
    if (row.degenerate) {
      std::snprintf(buf, sizeof buf, "%-*s  %9s  %7s  %s\n",
                    static_cast<int>(width), labels[i].c_str(), "nan", "nan",
                    subset_decision(row));
    } else {
      std::snprintf(buf, sizeof buf, "%-*s  %9.3f  %7.3f  %s\n",
                    static_cast<int>(width), labels[i].c_str(),
                    row.result.statistic, row.result.p_value,
                    subset_decision(row));
    }
    out += buf;
  }
  return out;
}

}  // namespace wddt
