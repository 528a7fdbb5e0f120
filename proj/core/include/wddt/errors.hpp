#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wddt {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model parameters assign some node pair an edge probability above 1.
struct ModelInfeasible : Error {
  using Error::Error;
};

// A layer has no paths of length two (no node of degree >= 2), so the
// test statistic is undefined. `layer` is the 0-based index in the order
// the caller supplied the layers.
struct DegenerateLayer : Error {
  std::size_t layer;

  explicit DegenerateLayer(std::size_t layer_index)
      : Error("layer " + std::to_string(layer_index) +
              " is degenerate: no paths of length two"),
        layer(layer_index) {}
};

// The test statistic compares layers, so it needs at least two of them.
struct NeedTwoLayers : Error {
  NeedTwoLayers() : Error("need at least two layers") {}
};

// Every Monte Carlo replication hit a degenerate layer.
struct AllDegenerate : Error {
  AllDegenerate() : Error("all replications degenerate") {}
};

// Malformed text input. `line` is 1-based; 0 means the error is not tied
// to a specific line.
struct ParseError : Error {
  std::size_t line;

  ParseError(std::size_t line_number, const std::string& message)
      : Error(line_number != 0
                  ? "line " + std::to_string(line_number) + ": " + message
                  : message),
        line(line_number) {}
};

}  // namespace wddt
