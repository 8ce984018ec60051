#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "isat/graph.hpp"

namespace isat {

/// Raised on malformed graph6 input.
class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 encoding without header or trailing newline.
std::string encode_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace. Padding
/// bits must be zero.
Graph decode_graph6(std::string_view text);

/// {"vertices": n, "edges": m, "adjacency": [[neighbours of 0], ...]}
nlohmann::json adjacency_json(const Graph& g);

}  // namespace isat
