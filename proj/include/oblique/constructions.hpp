#pragma once

#include <span>
#include <utility>

#include "oblique/graph.hpp"

namespace oblique {

/// Pinned dually vertex-oblique graph on 8 vertices (first result of enumerate_dvo(8)).
Graph base8();

/// Pinned dually semi-vertex-oblique bipartite graph with parts of size 2k, k in {3, 4}.
BipartiteGraph semi_base(int k);

/// Edge lists behind the pinned fixtures, as committed under fixtures/.
std::span<const std::pair<int, int>> base8_edges();
std::span<const std::pair<int, int>> semi_base_edges(int k);

/// Grows a dually vertex-oblique graph of order 4k by four vertices, appended
/// as v2, w2, v2bar, w2bar (labels n..n+3). x is vertex 0, xbar its dual partner.
Graph extend_plus4(const Graph& g);

/// Order 4k to 4k+1: a new vertex (label n) joined to the 2k vertices of degree >= 2k.
Graph add_apex(const Graph& g);

/// Parts grow from 2k to 2k+4. New left labels 2k..2k+3 are L2, L2', L2~, L2~';
/// the right side follows the same pattern.
BipartiteGraph semi_extend_plus8(const BipartiteGraph& b);

/// Left part becomes vertices 0..2k-1, right part 2k..4k-1, and the right part
/// is completed to a clique.
Graph split_completion(const BipartiteGraph& b);

/// A dually vertex-oblique graph of order n. Throws ContractError naming the
/// violated condition when none exists (or when the split route cannot reach n).
Graph construct(int n, bool split = false);

}  // namespace oblique
