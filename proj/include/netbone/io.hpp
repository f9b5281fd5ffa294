#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "netbone/graph.hpp"

namespace netbone {

enum class GraphFormat { EdgeList, Json, Dot };

// Parses the edge-list format: line 1 is `directed` or `undirected`, every
// following non-empty, non-`#` line is `<src> <dst> <weight>` separated by
// single spaces. Duplicate edge lines are an error; an undirected input that
// lists both orientations of an edge collapses them when the weights agree
// and is rejected otherwise. Errors name the offending 1-based line.
DistanceGraph parse_graph(std::string_view text);

// Serializes a graph. The edge-list output is canonical (undirected edges
// oriented label-low first, all edges sorted by label pair) and round-trips
// through parse_graph; two structurally equal graphs serialize identically.
std::string serialize_graph(const DistanceGraph& g,
                            GraphFormat format = GraphFormat::EdgeList);

GraphFormat parse_format_name(std::string_view name);

// Reads and parses a file, prefixing parse errors with the path.
DistanceGraph load_graph_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace netbone
