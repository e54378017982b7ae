#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oblique {

using Vertex = int;

/// Raised when an operation's precondition does not hold for its arguments.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 stored as one bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return n_; }
  int size() const;

  bool has_edge(Vertex u, Vertex v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1U;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const;
  std::vector<int> degrees() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Raw bitset row of v; bit w is set iff vw is an edge.
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::span<std::uint64_t> mutable_row(Vertex v) {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Bipartite graph with explicit parts; left vertex i and right vertex j are
/// adjacent iff the biadjacency bit (i, j) is set.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left_size, int right_size);

  static BipartiteGraph from_edges(int left_size, int right_size,
                                   std::span<const std::pair<int, int>> edges);

  int left_size() const { return left_; }
  int right_size() const { return right_; }
  int size() const;

  bool has_edge(int l, int r) const { return adj_[index(l, r)] != 0; }
  void add_edge(int l, int r);
  void remove_edge(int l, int r);

  int left_degree(int l) const;
  int right_degree(int r) const;
  std::vector<int> left_degrees() const;
  std::vector<int> right_degrees() const;
  /// Edges (left, right) in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::size_t index(int l, int r) const;

  int left_ = 0;
  int right_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Non-increasing list of neighbour degrees. Ordered so that a longer type is
/// greater, and types of equal length compare lexicographically.
struct VertexType {
  std::vector<int> entries;

  std::size_t length() const { return entries.size(); }
  std::string to_string() const;

  friend bool operator==(const VertexType&, const VertexType&) = default;
  friend std::strong_ordering operator<=>(const VertexType& a, const VertexType& b);
};

std::strong_ordering compare_types(const VertexType& a, const VertexType& b);

/// Builds a type from arbitrary-order entries.
VertexType make_type(std::vector<int> entries);

/// Vertex types sorted non-increasing.
struct TypeSequence {
  std::vector<VertexType> types;

  std::size_t size() const { return types.size(); }
  friend bool operator==(const TypeSequence&, const TypeSequence&) = default;
};

/// Sorts arbitrary types into a TypeSequence.
TypeSequence make_type_sequence(std::vector<VertexType> types);

struct DegreeSequence {
  std::vector<int> degrees;

  std::size_t size() const { return degrees.size(); }
  bool is_non_increasing() const;
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// Induced subgraph together with the original label of each of its vertices.
struct LabeledSubgraph {
  Graph graph;
  std::vector<Vertex> labels;
};

/// Bipartite subgraph together with original labels of left and right vertices.
struct LabeledBipartite {
  BipartiteGraph graph;
  std::vector<Vertex> left_labels;
  std::vector<Vertex> right_labels;
};

struct SplitPartition {
  std::vector<Vertex> independent;
  std::vector<Vertex> clique;
};

Graph complement(const Graph& g);
VertexType vertex_type(const Graph& g, Vertex v);
VertexType complement_vertex_type(const Graph& g, Vertex v);
std::vector<VertexType> vertex_types(const Graph& g);
std::vector<VertexType> complement_vertex_types(const Graph& g);
TypeSequence type_sequence(const Graph& g);
DegreeSequence degree_sequence(const Graph& g);

LabeledSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
LabeledSubgraph degree_subgraph(const Graph& g, int d);
LabeledBipartite cross_degree_subgraph(const Graph& g, int p, int q);

BipartiteGraph bipartite_complement(const BipartiteGraph& b);
VertexType left_type(const BipartiteGraph& b, int l);
VertexType right_type(const BipartiteGraph& b, int r);
std::vector<VertexType> left_types(const BipartiteGraph& b);
std::vector<VertexType> right_types(const BipartiteGraph& b);

std::optional<SplitPartition> split_partition(const Graph& g);

}  // namespace oblique
