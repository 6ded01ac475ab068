#pragma once

// Line-oriented netlist format:
//
//   nodes: a b c
//   inputs: a a
//   outputs: c
//   R a b 2
//   L b c 3
//   C a c 1/2
//   Z a b (s^2+1)/(s+2)
//   W a b
//
// `#` starts a comment. W merges two nodes; it is not an edge.

#include <string>
#include <string_view>
#include <vector>

#include "cbox/circuit.hpp"

namespace cbox {

struct NetlistOptions {
  /// Accept Z lines whose impedance passes the sampled positivity check.
  bool allow_raw_z = false;
  std::vector<Rat> sample_points{default_sample_points().begin(), default_sample_points().end()};
};

/// Throws ParseError, NonPositiveImpedance or UnknownNode.
Circuit parse_netlist(std::string_view text, const NetlistOptions& options = {});

/// R, L and C lines where the impedance has that shape, Z lines otherwise.
std::string print_netlist(const Circuit& g);

/// Comma-separated rationals, e.g. `1/2,1,3`. Throws SyntaxError.
std::vector<Rat> parse_sample_points(std::string_view text);

}  // namespace cbox
