#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "oblique/graph.hpp"

namespace oblique {

struct SearchOptions {
  /// Stop after this many results; output is then no longer guaranteed to be
  /// the canonically smallest results.
  std::optional<std::size_t> limit;
  int jobs = 1;
  /// Abort after this wall time; partial results are marked non-exhaustive.
  std::optional<std::chrono::seconds> budget;
  /// Called with a one-line progress message; calls never overlap.
  std::function<void(const std::string&)> progress;
};

template <typename G>
struct SearchResult {
  std::vector<G> graphs;
  /// False when the search stopped early (limit reached or budget exceeded).
  bool exhaustive = true;
  std::size_t nodes = 0;
};

/// Relabels a vertex-oblique graph so vertices appear in decreasing type order.
Graph canonical_oblique_form(const Graph& g);
/// Relabels both parts so types decrease left to right (types must be distinct per part).
BipartiteGraph canonical_semi_form(const BipartiteGraph& b);

/// Degree sequences that pass every degree-level necessary condition for a
/// dually vertex-oblique graph of order n.
std::vector<DegreeSequence> dvo_degree_sequences(int n);

/// All dually vertex-oblique graphs of order n (n <= 12), one per isomorphism
/// class, in canonical form and sorted by edge list.
SearchResult<Graph> enumerate_dvo(int n, const SearchOptions& options = {});

/// Dually semi-vertex-oblique bipartite graphs with parts of size 2k, k in {3, 4},
/// one per side-preserving isomorphism class, canonical and sorted.
SearchResult<BipartiteGraph> search_semi_dvo(int k, const SearchOptions& options = {});

/// Every labeled graph in which vertex i has degree |t_i| and whose type
/// sequence equals t. Intended for small orders.
std::vector<Graph> labeled_realizations(const TypeSequence& t);

/// Realizations of t grouped into isomorphism classes (one representative each).
std::vector<Graph> realization_classes(const TypeSequence& t);

struct DeletionRow {
  Vertex vertex = 0;
  bool vertex_oblique = false;
  bool equal_types = false;
};

struct DeletionProbe {
  int k = 0;
  std::vector<DeletionRow> rows;
  /// Every row lacks equal types (a), is not vertex-oblique (b), or both.
  bool every_row_a_or_b = false;
  bool every_row_a = false;
  bool every_row_b = false;
};

DeletionProbe probe_vertex_deletion(const Graph& g);

int vertex_connectivity(const Graph& g);

}  // namespace oblique
