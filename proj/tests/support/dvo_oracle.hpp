// Slow reference enumerators for dually vertex-oblique graphs and dually
// semi-vertex-oblique bipartite graphs. Canonical forms order vertices by
// decreasing type, so two results are isomorphic iff their edge lists agree.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "oblique/graph.hpp"
#include "support/oracles.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline bool type_greater(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

/// Relabels so vertex 0 has the greatest type; types must be pairwise distinct.
inline EdgeList type_order_edges(const oblique::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> types;
  for (int v = 0; v < n; ++v) types.push_back(type_of(g, v));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return type_greater(types[a], types[b]); });
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[order[i]] = i;
  EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
  std::sort(out.begin(), out.end());
  return out;
}

/// Calls f on every labeled graph where vertex i has degree d[i].
template <typename F>
void for_each_labeled_realization(const std::vector<int>& d, F&& f) {
  const int n = static_cast<int>(d.size());
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<int> need = d;
  // Pairs at index >= i that still touch each vertex.
  std::vector<std::vector<int>> left_after(pairs.size() + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = pairs.size(); i-- > 0;) {
    left_after[i] = left_after[i + 1];
    ++left_after[i][pairs[i].first];
    ++left_after[i][pairs[i].second];
  }
  oblique::Graph g(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    for (int v = 0; v < n; ++v)
      if (need[v] < 0 || need[v] > left_after[i][v]) return;
    if (i == pairs.size()) {
      f(g);
      return;
    }
    const auto [u, v] = pairs[i];
    self(self, i + 1);
    --need[u];
    --need[v];
    g.add_edge(u, v);
    self(self, i + 1);
    g.remove_edge(u, v);
    ++need[u];
    ++need[v];
  };
  rec(rec, 0);
}

/// Every dually vertex-oblique graph of order n, one per isomorphism class.
/// Only degree vectors that are symmetric (d_i + d_{n-1-i} = n - 1) can occur.
inline std::set<EdgeList> dvo_classes(int n) {
  std::set<EdgeList> out;
  std::vector<int> d(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, int bound) -> void {
    if (2 * i >= n) {
      if (n % 2 == 1 && d[n / 2] * 2 != n - 1) return;
      for_each_labeled_realization(d, [&](const oblique::Graph& g) {
        if (dually_oblique(g)) out.insert(type_order_edges(g));
      });
      return;
    }
    for (int x = bound; 2 * x >= n - 1; --x) {
      d[i] = x;
      d[n - 1 - i] = n - 1 - x;
      self(self, i + 1, x);
    }
  };
  rec(rec, 0, n - 1);
  return out;
}

inline std::vector<int> left_type_of(const oblique::BipartiteGraph& b, int l) {
  std::vector<int> t;
  for (int r = 0; r < b.right_size(); ++r)
    if (b.has_edge(l, r)) t.push_back(b.right_degree(r));
  std::sort(t.rbegin(), t.rend());
  return t;
}

inline std::vector<int> right_type_of(const oblique::BipartiteGraph& b, int r) {
  std::vector<int> t;
  for (int l = 0; l < b.left_size(); ++l)
    if (b.has_edge(l, r)) t.push_back(b.left_degree(l));
  std::sort(t.rbegin(), t.rend());
  return t;
}

inline bool semi_oblique(const oblique::BipartiteGraph& b) {
  const int m = b.left_size();
  std::vector<std::vector<int>> left, right, comp;
  oblique::BipartiteGraph c(m, b.right_size());
  for (int l = 0; l < m; ++l)
    for (int r = 0; r < b.right_size(); ++r)
      if (!b.has_edge(l, r)) c.add_edge(l, r);
  for (int l = 0; l < m; ++l) left.push_back(left_type_of(b, l));
  for (int r = 0; r < b.right_size(); ++r) right.push_back(right_type_of(b, r));
  for (int l = 0; l < m; ++l) comp.push_back(left_type_of(c, l));
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  std::sort(comp.begin(), comp.end());
  return std::adjacent_find(left.begin(), left.end()) == left.end() && left == right && left == comp;
}

inline EdgeList semi_type_order_edges(const oblique::BipartiteGraph& b) {
  auto ranks = [](std::vector<std::vector<int>> types) {
    const int n = static_cast<int>(types.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int c) { return type_greater(types[a], types[c]); });
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    return rank;
  };
  std::vector<std::vector<int>> lt, rt;
  for (int l = 0; l < b.left_size(); ++l) lt.push_back(left_type_of(b, l));
  for (int r = 0; r < b.right_size(); ++r) rt.push_back(right_type_of(b, r));
  const auto lr = ranks(lt), rr = ranks(rt);
  EdgeList out;
  for (auto [l, r] : b.edges()) out.emplace_back(lr[l], rr[r]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Dually semi-vertex-oblique graphs with parts of size 6, by exhaustive
/// choice of six distinct left rows (left types are distinct, so rows are too).
inline std::set<EdgeList> semi_classes_k3() {
  std::set<EdgeList> out;
  int rows[6];
  auto check = [&] {
    int col[6] = {0, 0, 0, 0, 0, 0};
    int lhist[7] = {0}, rhist[7] = {0};
    for (int i = 0; i < 6; ++i) {
      ++lhist[__builtin_popcount(static_cast<unsigned>(rows[i]))];
      for (int j = 0; j < 6; ++j) col[j] += (rows[i] >> j) & 1;
    }
    for (int j = 0; j < 6; ++j) ++rhist[col[j]];
    for (int d = 0; d <= 6; ++d) {
      if (lhist[d] != rhist[d] || lhist[d] != lhist[6 - d]) return;
    }
    oblique::BipartiteGraph b(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if ((rows[i] >> j) & 1) b.add_edge(i, j);
    if (semi_oblique(b)) out.insert(semi_type_order_edges(b));
  };
  for (rows[0] = 0; rows[0] < 64; ++rows[0])
    for (rows[1] = rows[0] + 1; rows[1] < 64; ++rows[1])
      for (rows[2] = rows[1] + 1; rows[2] < 64; ++rows[2])
        for (rows[3] = rows[2] + 1; rows[3] < 64; ++rows[3])
          for (rows[4] = rows[3] + 1; rows[4] < 64; ++rows[4])
            for (rows[5] = rows[4] + 1; rows[5] < 64; ++rows[5]) check();
  return out;
}

}  // namespace oracle
