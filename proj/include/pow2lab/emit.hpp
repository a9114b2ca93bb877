#pragma once

#include <iosfwd>
#include <string>

#include "pow2lab/admissibility.hpp"
#include "pow2lab/search.hpp"

namespace pow2lab {

// One newline-delimited JSON verdict record:
// {"graph6", "admissible", "labels"?, "families_count", "branches", "millis"}.
// Labels are decimal strings so values of any size survive a round trip;
// millis is wall-clock and excluded from reproducibility comparisons.
std::string verdict_json(const Graph& g, const Verdict& v, long millis);

// Reads the labels out of a verdict record; empty when absent.
Labeling labels_from_json(const std::string& line);

// Undirected DOT with the integer label inside each vertex.
std::string to_dot(const Graph& g, const Labeling* labels = nullptr);

// MFS persistence: graph6 lines plus a JSON sidecar carrying order, edge
// count, and discovery stratum per entry.
void write_mfs_files(const MfsSet& set, const std::string& graph6_path,
                     const std::string& sidecar_path);
MfsSet read_mfs_file(const std::string& graph6_path);

std::string gtable_json(const GRecord& rec);

}  // namespace pow2lab
