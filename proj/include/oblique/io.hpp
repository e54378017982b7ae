#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "oblique/graph.hpp"
#include "oblique/switching.hpp"

#include <json.hpp>

namespace oblique {

/// Malformed input text; the message starts with "line N: " when a line is at fault.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge lists: "n m" then m sorted lines "u v" with u < v. "#" comments may
// precede the header only. Bipartite files use the header "bipartite l r m"
// and lines "i j" (left i, right j).
std::string write_edge_list(const Graph& g);
std::string write_edge_list(const BipartiteGraph& b);
Graph parse_edge_list(std::string_view text);
BipartiteGraph parse_bipartite_edge_list(std::string_view text);
/// Either kind, chosen by the header.
std::variant<Graph, BipartiteGraph> parse_any_edge_list(std::string_view text);

/// One type per line; a blank line is the empty type. Input order is free.
TypeSequence parse_type_sequence(std::string_view text);
std::string write_type_sequence(const TypeSequence& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

nlohmann::json to_json(const SwitchMove& m);
nlohmann::json to_json(const SwitchPath& path);
nlohmann::json to_json(const VertexType& t);

}  // namespace oblique
