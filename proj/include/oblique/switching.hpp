#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oblique/graph.hpp"

namespace oblique {

/// Replace edges v0w0, v1w1 by v0w1, v1w0.
struct SwitchMove {
  Vertex v0 = 0;
  Vertex w0 = 0;
  Vertex v1 = 0;
  Vertex w1 = 0;

  /// The move that undoes this one in the switched graph.
  SwitchMove inverse() const { return {v0, w1, v1, w0}; }
  std::string to_string() const;

  friend bool operator==(const SwitchMove&, const SwitchMove&) = default;
};

using SwitchPath = std::vector<SwitchMove>;

/// Empty optional when the move is valid in g, otherwise the reason it is not.
std::optional<std::string> switch_violation(const Graph& g, const SwitchMove& m);

Graph apply_switch(const Graph& g, const SwitchMove& m);
Graph apply_path(const Graph& g, const SwitchPath& path);

/// Bipartite switch: v0, v1 on the left, w0, w1 on the right.
std::optional<std::string> switch_violation(const BipartiteGraph& b, const SwitchMove& m);
BipartiteGraph apply_switch(const BipartiteGraph& b, const SwitchMove& m);

/// (d, d') for a restricted switch; nullopt for an unrestricted one.
std::optional<std::pair<int, int>> classify_switch(const Graph& g, const SwitchMove& m);

/// Every valid restricted switch of g (small graphs only; O(n^4)).
std::vector<SwitchMove> restricted_switches(const Graph& g);

/// Walks the neighbourhoods of the degree-d class until an induced 2K2 between
/// the degree-d and degree-(n-1-d) classes appears. Requires a dually
/// vertex-oblique g and d != (n-1)/2.
SwitchMove find_induced_2K2_cross(const Graph& g, int d);

/// A graph with g's type sequence that is isomorphic to neither g nor its complement.
Graph companion(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

struct CanonicalForm {
  Graph graph;
  SwitchPath path;
};

struct BipartiteCanonicalForm {
  BipartiteGraph graph;
  SwitchPath path;
};

/// Switches g into the labeled graph determined by its labeled degrees alone.
CanonicalForm canonicalize_labeled(const Graph& g);
/// Bipartition-respecting variant; moves are (left, right, left, right).
BipartiteCanonicalForm canonicalize_labeled(const BipartiteGraph& b);

/// Restricted switches turning h into g; both must carry identical per-vertex types.
SwitchPath restricted_switch_path(const Graph& g, const Graph& h);

enum class Uniqueness { unique, inconclusive };

std::string to_string(Uniqueness u);

bool has_induced_2K2(const Graph& g);
bool has_induced_2K2(const BipartiteGraph& b);

/// Edges ab, cd with ad, cb non-edges: an induced 2K2, P4 or C4 on four vertices.
bool has_switch(const Graph& g);

/// Sufficient test for a unique type sequence: no degree class admits a switch
/// and no cross-degree bipartite subgraph contains an induced 2K2.
Uniqueness unique_typeseq_sufficient(const Graph& g);

}  // namespace oblique
