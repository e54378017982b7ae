#include "oblique/constructions.hpp"

#include <array>
#include <string>
#include <vector>

#include "oblique/oblique.hpp"

namespace oblique {

namespace {

constexpr std::array<std::pair<int, int>, 14> kBase8 = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 2}, {1, 4},
    {1, 5}, {1, 7}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {5, 7},
}};

// Biadjacency edges (left, right).
constexpr std::array<std::pair<int, int>, 18> kSemi12 = {{
    {0, 0}, {0, 1}, {0, 2}, {0, 4}, {1, 0}, {1, 2}, {1, 3}, {1, 5}, {2, 0},
    {2, 1}, {2, 2}, {3, 1}, {3, 3}, {3, 4}, {4, 0}, {4, 3}, {5, 1}, {5, 5},
}};

constexpr std::array<std::pair<int, int>, 32> kSemi16 = {{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 0}, {1, 1},
    {1, 2}, {1, 4}, {1, 5}, {1, 7}, {2, 0}, {2, 1}, {2, 2}, {2, 3},
    {2, 4}, {3, 0}, {3, 2}, {3, 3}, {3, 5}, {3, 6}, {4, 0}, {4, 1},
    {4, 2}, {5, 1}, {5, 3}, {5, 7}, {6, 0}, {6, 3}, {7, 1}, {7, 5},
}};

void require_dvo(const Graph& g, const char* op) {
  if (!is_dually_vertex_oblique(g))
    throw ContractError(std::string(op) + ": input is not dually vertex-oblique");
  if (g.order() % 4 != 0)
    throw ContractError(std::string(op) + ": order " + std::to_string(g.order()) +
                        " is not a multiple of 4");
}

void require_semi(const BipartiteGraph& b, const char* op) {
  if (!is_dually_semi_vertex_oblique(b))
    throw ContractError(std::string(op) + ": input is not dually semi-vertex-oblique");
}

Graph grow(const Graph& g, int extra) {
  Graph out(g.order() + extra);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

}  // namespace

std::span<const std::pair<int, int>> base8_edges() { return kBase8; }

std::span<const std::pair<int, int>> semi_base_edges(int k) {
  if (k == 3) return kSemi12;
  if (k == 4) return kSemi16;
  throw ContractError("semi_base: k must be 3 or 4, got " + std::to_string(k));
}

Graph base8() { return Graph::from_edges(8, kBase8); }

BipartiteGraph semi_base(int k) {
  const auto edges = semi_base_edges(k);
  return BipartiteGraph::from_edges(2 * k, 2 * k, edges);
}

Graph extend_plus4(const Graph& g) {
  require_dvo(g, "extend_plus4");
  const int n = g.order();
  const Vertex x = 0;
  const Vertex xbar = dual_partner(g, x);
  const Vertex v2 = n, w2 = n + 1, vbar2 = n + 2, wbar2 = n + 3;

  Graph out = grow(g, 4);
  out.add_edge(v2, vbar2);
  out.add_edge(v2, x);
  out.add_edge(w2, wbar2);
  out.add_edge(w2, xbar);
  out.add_edge(vbar2, wbar2);
  for (Vertex u = 0; u < n; ++u) {
    if (u != x) out.add_edge(vbar2, u);
    if (u != xbar) out.add_edge(wbar2, u);
  }
  return out;
}

Graph add_apex(const Graph& g) {
  require_dvo(g, "add_apex");
  const int n = g.order();
  const int k = n / 4;
  Graph out = grow(g, 1);
  int joined = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) >= 2 * k) {
      out.add_edge(n, u);
      ++joined;
    }
  }
  if (joined != 2 * k)
    throw std::logic_error("add_apex: expected " + std::to_string(2 * k) +
                           " vertices of degree >= 2k, found " + std::to_string(joined));
  return out;
}

BipartiteGraph semi_extend_plus8(const BipartiteGraph& b) {
  require_semi(b, "semi_extend_plus8");
  const int m = b.left_size();
  const auto left = left_types(b);
  const auto right = right_types(b);
  const auto right_tilde = right_types(bipartite_complement(b));

  // Lowest r with a partner rt != r whose complement type is t(r).
  int r = -1, rt = -1;
  for (int i = 0; i < m && r < 0; ++i)
    for (int j = 0; j < m; ++j)
      if (j != i && right_tilde[j] == right[i]) {
        r = i;
        rt = j;
        break;
      }
  if (r < 0) throw std::logic_error("semi_extend_plus8: no pair of right vertices r != r~ found");

  auto left_with = [&](const VertexType& t) {
    for (int i = 0; i < m; ++i)
      if (left[i] == t) return i;
    throw std::logic_error("semi_extend_plus8: no left vertex of type " + t.to_string());
  };
  const int ell = left_with(right[r]);
  const int ell_t = left_with(right[rt]);

  const int L2 = m, L2p = m + 1, L2t = m + 2, L2tp = m + 3;
  const int R2 = m, R2p = m + 1, R2t = m + 2, R2tp = m + 3;

  BipartiteGraph out(m + 4, m + 4);
  for (auto [l, rr] : b.edges()) out.add_edge(l, rr);

  out.add_edge(L2, R2t);
  out.add_edge(L2, r);
  out.add_edge(L2p, R2tp);
  out.add_edge(L2p, rt);
  for (int j : {R2, R2t, R2tp}) out.add_edge(L2t, j);
  for (int j : {R2p, R2t, R2tp}) out.add_edge(L2tp, j);
  for (int j = 0; j < m; ++j) {
    if (j != r) out.add_edge(L2t, j);
    if (j != rt) out.add_edge(L2tp, j);
  }

  out.add_edge(ell_t, R2);
  out.add_edge(ell, R2p);
  for (int i = 0; i < m; ++i) {
    if (i != ell_t) out.add_edge(i, R2t);
    if (i != ell) out.add_edge(i, R2tp);
  }
  return out;
}

Graph split_completion(const BipartiteGraph& b) {
  require_semi(b, "split_completion");
  const int m = b.left_size();
  Graph out(2 * m);
  for (auto [l, r] : b.edges()) out.add_edge(l, m + r);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out.add_edge(m + i, m + j);
  return out;
}

Graph construct(int n, bool split) {
  const int rem = ((n % 4) + 4) % 4;
  if (rem == 2 || rem == 3)
    throw ContractError("no dually vertex-oblique graph of order " + std::to_string(n) + ": n ≡ " +
                        std::to_string(rem) + " (mod 4)");
  if (n < 8)
    throw ContractError("no dually vertex-oblique graph of order " + std::to_string(n) +
                        ": n < 8");
  if (split && n < 12)
    throw ContractError("split route needs n >= 12, got n = " + std::to_string(n));

  const int even = n - (n % 4 == 1 ? 1 : 0);
  Graph g;
  if (split) {
    BipartiteGraph b = semi_base(even % 8 == 4 ? 3 : 4);
    while (2 * b.left_size() < even) b = semi_extend_plus8(b);
    g = split_completion(b);
  } else {
    g = base8();
    while (g.order() < even) g = extend_plus4(g);
  }
  if (n % 4 == 1) g = add_apex(g);
  return g;
}

}  // namespace oblique
