#pragma once

#include <string>

#include <json.hpp>

#include "reconf/graph.hpp"
#include "reconf/reconfig.hpp"

namespace reconf {

// Text formats for plain graphs.
enum class GraphFormat { Graph6, EdgeList };

// "graph6" or "edgelist"; anything else throws Error(ParseError).
GraphFormat format_from_name(const std::string& name);
const char* format_name(GraphFormat format);

// graph6 short form (up to 62 vertices): one byte n+63, then the upper
// triangle of the adjacency matrix read column by column, packed into 6-bit
// groups (high bit first) and offset by 63.  The parser is strict: wrong
// length, bytes outside '?'..'~', or non-zero padding bits throw
// Error(ParseError) carrying the byte offset of the problem.
Graph from_graph6(const std::string& text);
std::string to_graph6(const Graph& g);  // throws Error(UnsupportedCase) past 62 vertices

// Edge list: whitespace-separated integers "n m u1 v1 ... um vm".  Loops,
// out-of-range endpoints, malformed numbers, and trailing junk throw
// Error(ParseError) with the byte offset.  Repeated edges are allowed.
Graph from_edgelist(const std::string& text);
std::string to_edgelist(const Graph& g);

// Dispatch helpers; both trim surrounding whitespace before parsing.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

// Graphviz "graph" block listing every vertex and edge.
std::string to_dot(const Graph& g, const std::string& name = "G");

// JSON shape: {"kind": ..., "params": {"k": ...}, "n": ..., "edges":
// [[i,j], ...], "labels": [...]} with labels omitted for stripped graphs.
// Colour labels are per-vertex colour arrays; token labels are sorted vertex
// sets.
nlohmann::json reconfig_to_json(const ReconfigGraph& r, bool include_labels = true);
ReconfigGraph reconfig_from_json(const nlohmann::json& j);
ReconfigGraph parse_reconfig_json(const std::string& text);

// Reads a whole file; throws Error(ParseError) when the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// 64-bit FNV-1a of the raw bytes, as 16 lowercase hex digits.  Used to tie
// reports to their exact input.
std::string input_hash_hex(const std::string& bytes);

}  // namespace reconf
