#include "oblique/switching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "oblique/oblique.hpp"

namespace oblique {

std::string SwitchMove::to_string() const {
  return "(v0=" + std::to_string(v0) + ", w0=" + std::to_string(w0) + ", v1=" +
         std::to_string(v1) + ", w1=" + std::to_string(w1) + ")";
}

std::optional<std::string> switch_violation(const Graph& g, const SwitchMove& m) {
  for (Vertex v : {m.v0, m.w0, m.v1, m.w1}) {
    if (v < 0 || v >= g.order()) return "vertex " + std::to_string(v) + " out of range";
  }
  std::set<Vertex> distinct{m.v0, m.w0, m.v1, m.w1};
  if (distinct.size() != 4) return "switch vertices must be distinct: " + m.to_string();
  auto pair = [](Vertex a, Vertex b) { return std::to_string(a) + std::to_string(b); };
  if (!g.has_edge(m.v0, m.w0)) return "v0w0 = " + pair(m.v0, m.w0) + " is not an edge";
  if (!g.has_edge(m.v1, m.w1)) return "v1w1 = " + pair(m.v1, m.w1) + " is not an edge";
  if (g.has_edge(m.v0, m.w1)) return "v0w1 = " + pair(m.v0, m.w1) + " is already an edge";
  if (g.has_edge(m.v1, m.w0)) return "v1w0 = " + pair(m.v1, m.w0) + " is already an edge";
  return std::nullopt;
}

Graph apply_switch(const Graph& g, const SwitchMove& m) {
  if (auto why = switch_violation(g, m)) throw ContractError("invalid switch: " + *why);
  Graph out = g;
  out.remove_edge(m.v0, m.w0);
  out.remove_edge(m.v1, m.w1);
  out.add_edge(m.v0, m.w1);
  out.add_edge(m.v1, m.w0);
  return out;
}

Graph apply_path(const Graph& g, const SwitchPath& path) {
  Graph out = g;
  for (const auto& m : path) out = apply_switch(out, m);
  return out;
}

std::optional<std::string> switch_violation(const BipartiteGraph& b, const SwitchMove& m) {
  if (m.v0 < 0 || m.v1 < 0 || m.v0 >= b.left_size() || m.v1 >= b.left_size())
    return "left vertex out of range in " + m.to_string();
  if (m.w0 < 0 || m.w1 < 0 || m.w0 >= b.right_size() || m.w1 >= b.right_size())
    return "right vertex out of range in " + m.to_string();
  if (m.v0 == m.v1 || m.w0 == m.w1) return "switch vertices must be distinct: " + m.to_string();
  if (!b.has_edge(m.v0, m.w0) || !b.has_edge(m.v1, m.w1))
    return "v0w0 and v1w1 must be edges: " + m.to_string();
  if (b.has_edge(m.v0, m.w1) || b.has_edge(m.v1, m.w0))
    return "v0w1 and v1w0 must be non-edges: " + m.to_string();
  return std::nullopt;
}

BipartiteGraph apply_switch(const BipartiteGraph& b, const SwitchMove& m) {
  if (auto why = switch_violation(b, m)) throw ContractError("invalid switch: " + *why);
  BipartiteGraph out = b;
  out.remove_edge(m.v0, m.w0);
  out.remove_edge(m.v1, m.w1);
  out.add_edge(m.v0, m.w1);
  out.add_edge(m.v1, m.w0);
  return out;
}

std::optional<std::pair<int, int>> classify_switch(const Graph& g, const SwitchMove& m) {
  if (auto why = switch_violation(g, m)) throw ContractError("invalid switch: " + *why);
  const int d = g.degree(m.v0);
  const int dp = g.degree(m.w0);
  if (g.degree(m.v1) == d && g.degree(m.w1) == dp) return std::pair{d, dp};
  return std::nullopt;
}

std::vector<SwitchMove> restricted_switches(const Graph& g) {
  std::vector<SwitchMove> out;
  const auto deg = g.degrees();
  const auto edges = g.edges();
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (auto [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const SwitchMove m{arcs[i].first, arcs[i].second, arcs[j].first, arcs[j].second};
      if (deg[m.v0] != deg[m.v1] || deg[m.w0] != deg[m.w1]) continue;
      // (v0, w0, v1, w1), (v1, w1, v0, w0), (w0, v0, w1, v1) and (w1, v1, w0, v0) are one switch.
      if (m.v0 > m.w0 || m.v0 > m.v1 || m.v0 > m.w1) continue;
      if (switch_violation(g, m)) continue;
      out.push_back(m);
    }
  }
  return out;
}

SwitchMove find_induced_2K2_cross(const Graph& g, int d) {
  const int n = g.order();
  if (2 * d == n - 1) {
    throw ContractError("degree " + std::to_string(d) + " is its own complement (n = " +
                        std::to_string(n) + ")");
  }
  if (!is_dually_vertex_oblique(g)) {
    throw ContractError("find_induced_2K2_cross requires a dually vertex-oblique graph");
  }
  const int dbar = n - 1 - d;
  std::vector<Vertex> low;
  std::vector<Vertex> high;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == d) low.push_back(v);
    if (g.degree(v) == dbar) high.push_back(v);
  }
  if (low.empty() || high.empty()) {
    throw ContractError("no vertices of degree " + std::to_string(d) + " and " +
                        std::to_string(dbar));
  }

  Vertex x = low.front();
  // Each step strictly shrinks the non-neighbourhood of x in `high`.
  for (std::size_t step = 0; step <= high.size(); ++step) {
    std::vector<Vertex> nbrs;
    std::vector<Vertex> non;
    for (Vertex y : high) (g.has_edge(x, y) ? nbrs : non).push_back(y);
    if (nbrs.empty() || non.empty()) {
      throw std::logic_error("vertex " + std::to_string(x) +
                             " sees all or none of the complementary degree class");
    }
    const Vertex y = non.front();
    auto next = std::find_if(low.begin(), low.end(), [&](Vertex c) { return g.has_edge(c, y); });
    if (next == low.end()) {
      throw std::logic_error("vertex " + std::to_string(y) + " has no neighbour of degree " +
                             std::to_string(d));
    }
    const Vertex x_next = *next;
    auto missing =
        std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex c) { return !g.has_edge(x_next, c); });
    if (missing != nbrs.end()) return SwitchMove{x, *missing, x_next, y};
    x = x_next;
  }
  throw std::logic_error("induced 2K2 walk did not terminate");
}

Graph companion(const Graph& g) {
  if (!is_dually_vertex_oblique(g)) {
    throw ContractError("companion requires a dually vertex-oblique graph");
  }
  const int n = g.order();
  const auto ds = degree_sequence(g);
  std::set<int> present(ds.degrees.begin(), ds.degrees.end());
  for (int d : present) {
    if (2 * d == n - 1 || !present.contains(n - 1 - d)) continue;
    return apply_switch(g, find_induced_2K2_cross(g, d));
  }
  throw std::logic_error("no complementary pair of degree classes");
}

namespace {

// Colour refinement run on both graphs at once so colours are comparable.
std::vector<int> refine_colours(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(2 * n));
  for (Vertex v = 0; v < n; ++v) {
    colour[v] = g.degree(v);
    colour[n + v] = h.degree(v);
  }
  std::size_t classes = std::set<int>(colour.begin(), colour.end()).size();
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(colour.size());
    for (int side = 0; side < 2; ++side) {
      const Graph& x = side == 0 ? g : h;
      for (Vertex v = 0; v < n; ++v) {
        auto& s = sig[side * n + v];
        s.push_back(colour[side * n + v]);
        std::vector<int> nb;
        for (Vertex w : x.neighbors(v)) nb.push_back(colour[side * n + w]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        ids.emplace(s, 0);
      }
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t i = 0; i < colour.size(); ++i) colour[i] = ids[sig[i]];
    if (ids.size() == classes) return colour;
    classes = ids.size();
  }
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (h.order() != n || g.size() != h.size()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  const auto colour = refine_colours(g, h);

  std::map<int, int> balance;
  for (Vertex v = 0; v < n; ++v) {
    ++balance[colour[v]];
    --balance[colour[n + v]];
  }
  if (std::any_of(balance.begin(), balance.end(), [](auto& kv) { return kv.second != 0; }))
    return false;

  std::map<int, int> class_size;
  for (Vertex v = 0; v < n; ++v) ++class_size[colour[v]];
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return class_size[colour[a]] < class_size[colour[b]];
  });

  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> extend = [&](int depth) {
    if (depth == n) return true;
    const Vertex u = order[depth];
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || colour[n + v] != colour[u]) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        const Vertex a = order[k];
        ok = g.has_edge(u, a) == h.has_edge(v, image[a]);
      }
      if (!ok) continue;
      image[u] = v;
      used[v] = true;
      if (extend(depth + 1)) return true;
      used[v] = false;
      image[u] = -1;
    }
    return false;
  };
  return extend(0);
}

CanonicalForm canonicalize_labeled(const Graph& g) {
  const int n = g.order();
  CanonicalForm out{g, {}};
  Graph& cur = out.graph;
  std::vector<bool> alive(static_cast<std::size_t>(n), true);

  auto residual = [&](Vertex v) {
    int r = 0;
    for (Vertex w : cur.neighbors(v)) r += alive[w];
    return r;
  };

  for (int round = 0; round < n; ++round) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v]) rest.push_back(v);
    std::vector<int> res(static_cast<std::size_t>(n), 0);
    for (Vertex v : rest) res[v] = residual(v);
    std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return res[a] > res[b]; });
    const Vertex u = rest.front();
    const std::vector<Vertex> target(rest.begin() + 1, rest.begin() + 1 + res[u]);
    std::vector<bool> in_target(static_cast<std::size_t>(n), false);
    for (Vertex s : target) in_target[s] = true;

    for (Vertex s : target) {
      if (cur.has_edge(u, s)) continue;
      // u has a neighbour w outside the target; s outranks w, so some x sees s but not w.
      Vertex w = -1;
      for (Vertex c : rest)
        if (c != u && !in_target[c] && cur.has_edge(u, c)) {
          w = c;
          break;
        }
      Vertex x = -1;
      for (Vertex c : rest)
        if (c != u && c != w && cur.has_edge(c, s) && !cur.has_edge(c, w)) {
          x = c;
          break;
        }
      if (w < 0 || x < 0) throw std::logic_error("canonicalize_labeled: no switch available");
      const SwitchMove m{u, w, x, s};
      cur = apply_switch(cur, m);
      out.path.push_back(m);
    }
    alive[u] = false;
  }
  return out;
}

BipartiteCanonicalForm canonicalize_labeled(const BipartiteGraph& b) {
  const int nl = b.left_size();
  const int nr = b.right_size();
  BipartiteCanonicalForm out{b, {}};
  BipartiteGraph& cur = out.graph;
  std::vector<bool> alive(static_cast<std::size_t>(nl), true);

  std::vector<int> rows(static_cast<std::size_t>(nl));
  std::iota(rows.begin(), rows.end(), 0);
  const auto ldeg = b.left_degrees();
  std::stable_sort(rows.begin(), rows.end(), [&](int a, int c) { return ldeg[a] > ldeg[c]; });

  for (int u : rows) {
    std::vector<int> res(static_cast<std::size_t>(nr), 0);
    for (int l = 0; l < nl; ++l)
      if (alive[l])
        for (int r = 0; r < nr; ++r) res[r] += cur.has_edge(l, r);
    std::vector<int> cols(static_cast<std::size_t>(nr));
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](int a, int c) { return res[a] > res[c]; });
    std::vector<bool> in_target(static_cast<std::size_t>(nr), false);
    for (int i = 0; i < ldeg[u]; ++i) in_target[cols[i]] = true;

    for (int i = 0; i < ldeg[u]; ++i) {
      const int s = cols[i];
      if (cur.has_edge(u, s)) continue;
      int w = -1;
      for (int c : cols)
        if (!in_target[c] && cur.has_edge(u, c)) {
          w = c;
          break;
        }
      int x = -1;
      for (int l = 0; l < nl; ++l)
        if (alive[l] && l != u && cur.has_edge(l, s) && !cur.has_edge(l, w)) {
          x = l;
          break;
        }
      if (w < 0 || x < 0) throw std::logic_error("canonicalize_labeled: no bipartite switch available");
      const SwitchMove m{u, w, x, s};
      cur = apply_switch(cur, m);
      out.path.push_back(m);
    }
    alive[u] = false;
  }
  return out;
}

namespace {

using Edge = std::pair<Vertex, Vertex>;

Edge edge(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

struct EdgeChange {
  std::set<Edge> removed;
  std::set<Edge> added;
};

EdgeChange switch_edges(const SwitchMove& m) {
  return {{edge(m.v0, m.w0), edge(m.v1, m.w1)}, {edge(m.v0, m.w1), edge(m.v1, m.w0)}};
}

}  // namespace

SwitchPath restricted_switch_path(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) {
    throw ContractError("graphs have different orders (" + std::to_string(g.order()) + " vs " +
                        std::to_string(h.order()) + ")");
  }
  const auto tg = vertex_types(g);
  const auto th = vertex_types(h);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (tg[v] != th[v]) {
      throw ContractError("vertex " + std::to_string(v) + " has type " + tg[v].to_string() +
                          " in the target but " + th[v].to_string() + " in the source");
    }
  }

  SwitchPath path;
  // A move followed by its own undo cancels, so identical halves vanish.
  auto push = [&path](const SwitchMove& m) {
    if (!path.empty() && switch_edges(m).removed == switch_edges(path.back()).added &&
        switch_edges(m).added == switch_edges(path.back()).removed) {
      path.pop_back();
    } else {
      path.push_back(m);
    }
  };
  auto splice = [&push](const SwitchPath& down, const SwitchPath& up, auto&& relabel) {
    for (const auto& m : down) push(relabel(m));
    for (auto it = up.rbegin(); it != up.rend(); ++it) push(relabel(it->inverse()));
  };

  const auto ds = degree_sequence(g);
  std::set<int> degrees(ds.degrees.begin(), ds.degrees.end());
  for (int d : degrees) {
    const auto sg = degree_subgraph(g, d);
    const auto sh = degree_subgraph(h, d);
    const auto cg = canonicalize_labeled(sg.graph);
    const auto ch = canonicalize_labeled(sh.graph);
    if (!(cg.graph == ch.graph)) throw std::logic_error("degree class canonical forms differ");
    const auto& lab = sg.labels;
    splice(ch.path, cg.path, [&](const SwitchMove& m) {
      return SwitchMove{lab[m.v0], lab[m.w0], lab[m.v1], lab[m.w1]};
    });
  }
  for (auto p = degrees.rbegin(); p != degrees.rend(); ++p) {
    for (auto q = std::next(p); q != degrees.rend(); ++q) {
      const auto bg = cross_degree_subgraph(g, *p, *q);
      const auto bh = cross_degree_subgraph(h, *p, *q);
      const auto cg = canonicalize_labeled(bg.graph);
      const auto ch = canonicalize_labeled(bh.graph);
      if (!(cg.graph == ch.graph)) throw std::logic_error("cross class canonical forms differ");
      splice(ch.path, cg.path, [&](const SwitchMove& m) {
        return SwitchMove{bg.left_labels[m.v0], bg.right_labels[m.w0], bg.left_labels[m.v1],
                          bg.right_labels[m.w1]};
      });
    }
  }
  return path;
}

std::string to_string(Uniqueness u) { return u == Uniqueness::unique ? "unique" : "inconclusive"; }

bool has_induced_2K2(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (!g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d))
        return true;
    }
  }
  return false;
}

bool has_switch(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if ((!g.has_edge(a, d) && !g.has_edge(b, c)) || (!g.has_edge(a, c) && !g.has_edge(b, d))) return true;
    }
  }
  return false;
}

bool has_induced_2K2(const BipartiteGraph& b) {
  const auto edges = b.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, x] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, y] = edges[j];
      if (a == c || x == y) continue;
      if (!b.has_edge(a, y) && !b.has_edge(c, x)) return true;
    }
  }
  return false;
}

Uniqueness unique_typeseq_sufficient(const Graph& g) {
  const auto ds = degree_sequence(g);
  std::set<int> degrees(ds.degrees.begin(), ds.degrees.end());
  for (int d : degrees)
    if (has_switch(degree_subgraph(g, d).graph)) return Uniqueness::inconclusive;
  for (auto p = degrees.begin(); p != degrees.end(); ++p)
    for (auto q = std::next(p); q != degrees.end(); ++q)
      if (has_induced_2K2(cross_degree_subgraph(g, *q, *p).graph)) return Uniqueness::inconclusive;
  return Uniqueness::unique;
}

}  // namespace oblique
