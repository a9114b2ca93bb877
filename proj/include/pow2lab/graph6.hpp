#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pow2lab/graph.hpp"

namespace pow2lab {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decodes one graph6 line (no trailing newline). Accepts the long order
// forms '~' and '~~'; rejects characters outside 63..126, truncated bodies,
// and nonzero padding bits.
Graph parse_graph6(const std::string& line);

// Canonical short-form encoding; defined for order <= 62 (the long forms are
// read-only).
std::string write_graph6(const Graph& g);

// Reads a newline-delimited graph6 stream, skipping an optional
// ">>graph6<<" header and blank lines. Throws Graph6Error with the
// 1-based line number on malformed input.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace pow2lab
