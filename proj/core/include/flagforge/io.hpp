#pragma once

#include <string>

#include "flagforge/complex.hpp"
#include "flagforge/construct.hpp"
#include "flagforge/verify.hpp"

namespace flagforge {

// Graph files: JSON {"colors": [...], "edges": [[u,v], ...]} with u < v,
// or the plain-text alternative "#colors c0 c1 ..." header plus "u v" lines.
std::string graph_to_json(const VertexColoredGraph& g);
VertexColoredGraph graph_from_json(const std::string& text);
std::string graph_to_edgelist(const VertexColoredGraph& g);
VertexColoredGraph graph_from_edgelist(const std::string& text);

// Sniffs the format from the leading character.
VertexColoredGraph load_graph_file(const std::string& path);

std::string plan_to_json(const ConstructionPlan& plan);
ConstructionPlan plan_from_json(const std::string& text);

std::string search_report_to_json(const SearchReport& rep);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace flagforge
