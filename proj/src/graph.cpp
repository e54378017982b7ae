#include "oblique/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace oblique {

namespace {

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw ContractError("graph order must be non-negative");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw ContractError("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(n_) + ")");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
  mutable_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  mutable_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  mutable_row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  mutable_row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::size() const {
  int total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total / 2;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (auto w = r[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

BipartiteGraph::BipartiteGraph(int left_size, int right_size)
    : left_(left_size), right_(right_size) {
  if (left_size < 0 || right_size < 0) throw ContractError("part sizes must be non-negative");
  adj_.assign(static_cast<std::size_t>(left_size) * static_cast<std::size_t>(right_size), 0);
}

BipartiteGraph BipartiteGraph::from_edges(int left_size, int right_size,
                                          std::span<const std::pair<int, int>> edges) {
  BipartiteGraph b(left_size, right_size);
  for (auto [l, r] : edges) b.add_edge(l, r);
  return b;
}

std::size_t BipartiteGraph::index(int l, int r) const {
  if (l < 0 || l >= left_ || r < 0 || r >= right_) {
    throw ContractError("bipartite edge (" + std::to_string(l) + ", " + std::to_string(r) +
                        ") out of range");
  }
  return static_cast<std::size_t>(l) * static_cast<std::size_t>(right_) +
         static_cast<std::size_t>(r);
}

int BipartiteGraph::size() const {
  return static_cast<int>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1}));
}

void BipartiteGraph::add_edge(int l, int r) { adj_[index(l, r)] = 1; }
void BipartiteGraph::remove_edge(int l, int r) { adj_[index(l, r)] = 0; }

int BipartiteGraph::left_degree(int l) const {
  int d = 0;
  for (int r = 0; r < right_; ++r) d += has_edge(l, r);
  return d;
}

int BipartiteGraph::right_degree(int r) const {
  int d = 0;
  for (int l = 0; l < left_; ++l) d += has_edge(l, r);
  return d;
}

std::vector<int> BipartiteGraph::left_degrees() const {
  std::vector<int> out(static_cast<std::size_t>(left_));
  for (int l = 0; l < left_; ++l) out[l] = left_degree(l);
  return out;
}

std::vector<int> BipartiteGraph::right_degrees() const {
  std::vector<int> out(static_cast<std::size_t>(right_));
  for (int r = 0; r < right_; ++r) out[r] = right_degree(r);
  return out;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l < left_; ++l)
    for (int r = 0; r < right_; ++r)
      if (has_edge(l, r)) out.emplace_back(l, r);
  return out;
}

std::strong_ordering compare_types(const VertexType& a, const VertexType& b) {
  if (auto c = a.entries.size() <=> b.entries.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries.begin(), a.entries.end(),
                                                b.entries.begin(), b.entries.end());
}

std::strong_ordering operator<=>(const VertexType& a, const VertexType& b) {
  return compare_types(a, b);
}

std::string VertexType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

VertexType make_type(std::vector<int> entries) {
  std::sort(entries.begin(), entries.end(), std::greater<>());
  return VertexType{std::move(entries)};
}

TypeSequence make_type_sequence(std::vector<VertexType> types) {
  std::sort(types.begin(), types.end(), std::greater<>());
  return TypeSequence{std::move(types)};
}

bool DegreeSequence::is_non_increasing() const {
  return std::is_sorted(degrees.begin(), degrees.end(), std::greater<>());
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

VertexType vertex_type(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<int> entries;
  for (Vertex w : g.neighbors(v)) entries.push_back(g.degree(w));
  return make_type(std::move(entries));
}

VertexType complement_vertex_type(const Graph& g, Vertex v) {
  g.check_vertex(v);
  const int n = g.order();
  std::vector<int> entries;
  for (Vertex w = 0; w < n; ++w)
    if (w != v && !g.has_edge(v, w)) entries.push_back(n - 1 - g.degree(w));
  return make_type(std::move(entries));
}

std::vector<VertexType> vertex_types(const Graph& g) {
  const auto deg = g.degrees();
  std::vector<VertexType> out;
  out.reserve(deg.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> entries;
    for (Vertex w : g.neighbors(v)) entries.push_back(deg[w]);
    out.push_back(make_type(std::move(entries)));
  }
  return out;
}

std::vector<VertexType> complement_vertex_types(const Graph& g) {
  const int n = g.order();
  const auto deg = g.degrees();
  std::vector<VertexType> out;
  out.reserve(deg.size());
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> entries;
    for (Vertex w = 0; w < n; ++w)
      if (w != v && !g.has_edge(v, w)) entries.push_back(n - 1 - deg[w]);
    out.push_back(make_type(std::move(entries)));
  }
  return out;
}

TypeSequence type_sequence(const Graph& g) { return make_type_sequence(vertex_types(g)); }

DegreeSequence degree_sequence(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return DegreeSequence{std::move(d)};
}

LabeledSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  LabeledSubgraph out{Graph(static_cast<int>(vertices.size())),
                      std::vector<Vertex>(vertices.begin(), vertices.end())};
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j]))
        out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

LabeledSubgraph degree_subgraph(const Graph& g, int d) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == d) keep.push_back(v);
  return induced_subgraph(g, keep);
}

LabeledBipartite cross_degree_subgraph(const Graph& g, int p, int q) {
  if (p == q) throw ContractError("cross_degree_subgraph requires p != q");
  LabeledBipartite out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == p) out.left_labels.push_back(v);
    if (d == q) out.right_labels.push_back(v);
  }
  out.graph = BipartiteGraph(static_cast<int>(out.left_labels.size()),
                             static_cast<int>(out.right_labels.size()));
  for (std::size_t i = 0; i < out.left_labels.size(); ++i)
    for (std::size_t j = 0; j < out.right_labels.size(); ++j)
      if (g.has_edge(out.left_labels[i], out.right_labels[j]))
        out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

BipartiteGraph bipartite_complement(const BipartiteGraph& b) {
  BipartiteGraph out(b.left_size(), b.right_size());
  for (int l = 0; l < b.left_size(); ++l)
    for (int r = 0; r < b.right_size(); ++r)
      if (!b.has_edge(l, r)) out.add_edge(l, r);
  return out;
}

VertexType left_type(const BipartiteGraph& b, int l) {
  std::vector<int> entries;
  for (int r = 0; r < b.right_size(); ++r)
    if (b.has_edge(l, r)) entries.push_back(b.right_degree(r));
  return make_type(std::move(entries));
}

VertexType right_type(const BipartiteGraph& b, int r) {
  std::vector<int> entries;
  for (int l = 0; l < b.left_size(); ++l)
    if (b.has_edge(l, r)) entries.push_back(b.left_degree(l));
  return make_type(std::move(entries));
}

std::vector<VertexType> left_types(const BipartiteGraph& b) {
  std::vector<VertexType> out;
  for (int l = 0; l < b.left_size(); ++l) out.push_back(left_type(b, l));
  return out;
}

std::vector<VertexType> right_types(const BipartiteGraph& b) {
  std::vector<VertexType> out;
  for (int r = 0; r < b.right_size(); ++r) out.push_back(right_type(b, r));
  return out;
}

// Greedy clique prefix over vertices sorted by degree (ties by label), then
// verify that the remainder is independent.
std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.order();
  const auto deg = g.degrees();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });

  SplitPartition part;
  std::size_t i = 0;
  for (; i < order.size(); ++i) {
    const Vertex v = order[i];
    bool joins = std::all_of(part.clique.begin(), part.clique.end(),
                             [&](Vertex c) { return g.has_edge(v, c); });
    if (!joins) break;
    part.clique.push_back(v);
  }
  for (; i < order.size(); ++i) part.independent.push_back(order[i]);

  for (std::size_t a = 0; a < part.independent.size(); ++a)
    for (std::size_t b = a + 1; b < part.independent.size(); ++b)
      if (g.has_edge(part.independent[a], part.independent[b])) return std::nullopt;
  std::sort(part.clique.begin(), part.clique.end());
  std::sort(part.independent.begin(), part.independent.end());
  return part;
}

}  // namespace oblique
