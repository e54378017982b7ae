#include <doctest.h>

#include <random>

#include "oblique/constructions.hpp"
#include "oblique/graph.hpp"
#include "support/oracles.hpp"

using namespace oblique;

namespace {

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

VertexType T(std::vector<int> e) { return VertexType{std::move(e)}; }

}  // namespace

TEST_CASE("graph basics") {
  Graph g(5);
  g.add_edge(0, 3);
  g.add_edge(3, 1);
  CHECK(g.has_edge(3, 0));
  CHECK(g.size() == 2);
  CHECK(g.degree(3) == 2);
  CHECK(g.neighbors(3) == std::vector<Vertex>{0, 1});
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {1, 3}});
  g.remove_edge(0, 3);
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK_THROWS_AS(g.add_edge(2, 2), ContractError);
  CHECK_THROWS_AS(g.add_edge(0, 5), ContractError);
  CHECK_THROWS_AS(g.degree(-1), ContractError);
}

TEST_CASE("graphs wider than one word") {
  Graph g = Graph::cycle(130);
  CHECK(g.size() == 130);
  CHECK(g.has_edge(129, 0));
  CHECK(g.degree(64) == 2);
  CHECK(complement(complement(g)) == g);
  CHECK(complement(g).size() == 130 * 129 / 2 - 130);
}

TEST_CASE("complement examples") {
  CHECK(complement(Graph::complete(4)) == Graph(4));
  CHECK(oracle::isomorphic(complement(Graph::cycle(5)), Graph::cycle(5)));
  CHECK(oracle::isomorphic(complement(Graph::path(4)), Graph::path(4)));
}

TEST_CASE("vertex types") {
  const auto s = star(3);
  CHECK(vertex_type(s, 0) == T({1, 1, 1}));
  for (int v = 1; v <= 3; ++v) CHECK(vertex_type(s, v) == T({3}));
  CHECK(vertex_type(Graph::cycle(5), 2) == T({2, 2}));
  const auto p3 = Graph::path(3);
  CHECK(vertex_type(p3, 1) == T({1, 1}));
  CHECK(vertex_type(p3, 0) == T({2}));
  CHECK_THROWS_AS(vertex_type(p3, 3), ContractError);
}

TEST_CASE("complement vertex types") {
  CHECK(complement_vertex_type(Graph::cycle(5), 0) == T({2, 2}));
  CHECK(complement_vertex_type(Graph::complete(4), 1) == T({}));
  const auto p4 = Graph::path(4);
  for (int v = 0; v < 4; ++v) CHECK(complement_vertex_type(p4, v) == vertex_type(complement(p4), v));
  CHECK_THROWS_AS(complement_vertex_type(p4, 4), ContractError);
}

TEST_CASE("type order") {
  CHECK(T({3, 1}) > T({4}));
  CHECK(T({3, 2}) > T({3, 1}));
  CHECK(T({2, 2}) == T({2, 2}));
  CHECK(compare_types(T({2, 2}), T({2, 2})) == std::strong_ordering::equal);
  CHECK(T({}) < T({0}));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 4), val(0, 5);
  auto random_type = [&] {
    std::vector<int> e(static_cast<std::size_t>(len(rng)));
    for (auto& x : e) x = val(rng);
    return make_type(e);
  };
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_type(), b = random_type(), c = random_type();
    CHECK((a < b) != (b < a || a == b));
    if (a <= b && b <= c) CHECK(a <= c);
    if (a <= b && b <= a) CHECK(a == b);
    const bool longer = a.length() > b.length();
    const bool lex = a.length() == b.length() && a.entries > b.entries;
    CHECK((a > b) == (longer || lex));
  }
}

TEST_CASE("type and degree sequences") {
  CHECK(type_sequence(Graph::cycle(4)).types == std::vector<VertexType>(4, T({2, 2})));
  CHECK(type_sequence(star(3)).types == std::vector<VertexType>{T({1, 1, 1}), T({3}), T({3}), T({3})});
  CHECK(degree_sequence(Graph::complete(4)).degrees == std::vector<int>{3, 3, 3, 3});
  CHECK(degree_sequence(Graph::path(4)).degrees == std::vector<int>{2, 2, 1, 1});

  const auto b8 = base8();
  const auto ts = type_sequence(b8);
  CHECK(ts.size() == 8);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) CHECK(ts.types[i] > ts.types[i + 1]);
  const auto ds = degree_sequence(b8).degrees;
  for (int i = 0; i < 8; ++i) CHECK(ds[i] + ds[7 - i] == 7);
}

TEST_CASE("degree subgraphs") {
  auto k4 = degree_subgraph(Graph::complete(4), 3);
  CHECK(k4.graph == Graph::complete(4));
  CHECK(k4.labels == std::vector<Vertex>{0, 1, 2, 3});
  auto leaves = degree_subgraph(star(3), 1);
  CHECK(leaves.graph == Graph(3));
  CHECK(leaves.labels == std::vector<Vertex>{1, 2, 3});
  auto mid = degree_subgraph(Graph::path(4), 2);
  CHECK(mid.graph.size() == 1);
  CHECK(mid.labels == std::vector<Vertex>{1, 2});
  CHECK(degree_subgraph(Graph::path(4), 3).graph.order() == 0);
}

TEST_CASE("cross degree subgraphs") {
  auto s = cross_degree_subgraph(star(3), 3, 1);
  CHECK(s.graph.left_size() == 1);
  CHECK(s.graph.size() == 3);
  auto p = cross_degree_subgraph(Graph::path(4), 2, 1);
  CHECK(p.graph.size() == 2);
  CHECK(oracle::has_induced_2K2(p.graph));
  CHECK_THROWS_AS(cross_degree_subgraph(Graph::path(4), 2, 2), ContractError);

  const auto b8 = base8();
  const auto ds = degree_sequence(b8).degrees;
  const int d = ds.back();
  auto cross = cross_degree_subgraph(b8, d, 7 - d).graph;
  for (int l = 0; l < cross.left_size(); ++l) {
    CHECK(cross.left_degree(l) >= 1);
    CHECK(cross.left_degree(l) <= cross.right_size() - 1);
  }
  for (int r = 0; r < cross.right_size(); ++r) {
    CHECK(cross.right_degree(r) >= 1);
    CHECK(cross.right_degree(r) <= cross.left_size() - 1);
  }
}

TEST_CASE("bipartite complement") {
  BipartiteGraph k22(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k22.add_edge(i, j);
  CHECK(bipartite_complement(k22) == BipartiteGraph(2, 2));
  BipartiteGraph m(3, 3);
  for (int i = 0; i < 3; ++i) m.add_edge(i, i);
  for (int d : bipartite_complement(m).left_degrees()) CHECK(d == 2);

  const auto b = semi_base(3);
  auto sorted = [](std::vector<VertexType> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(left_types(bipartite_complement(b))) == sorted(left_types(b)));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto r = oracle::random_bipartite(4, 5, 0.4, rng);
    CHECK(bipartite_complement(bipartite_complement(r)) == r);
  }
}

TEST_CASE("split partition") {
  auto k4 = split_partition(Graph::complete(4));
  REQUIRE(k4);
  CHECK(k4->independent.empty());
  CHECK(k4->clique == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(split_partition(Graph::cycle(5)));
  CHECK_FALSE(oracle::is_split(Graph::cycle(5)));

  auto verify = [](const Graph& g, const SplitPartition& p) {
    for (std::size_t i = 0; i < p.independent.size(); ++i)
      for (std::size_t j = i + 1; j < p.independent.size(); ++j)
        if (g.has_edge(p.independent[i], p.independent[j])) return false;
    for (std::size_t i = 0; i < p.clique.size(); ++i)
      for (std::size_t j = i + 1; j < p.clique.size(); ++j)
        if (!g.has_edge(p.clique[i], p.clique[j])) return false;
    return static_cast<int>(p.independent.size() + p.clique.size()) == g.order();
  };

  for (int n = 0; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const auto g = oracle::graph_from_mask(n, mask);
      const auto p = split_partition(g);
      CHECK(p.has_value() == oracle::is_split(g));
      if (p) CHECK(verify(g, *p));
    }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 6 + static_cast<int>(rng() % 5);
    // Dense graphs on one side and sparse ones on the other make split graphs common.
    Graph g(n);
    const int cut = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    std::bernoulli_distribution coin(0.5), rare(0.05);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const bool in_clique = u >= cut && v >= cut;
        const bool in_ind = u < cut && v < cut;
        if (in_clique ? !rare(rng) : in_ind ? rare(rng) : coin(rng)) g.add_edge(u, v);
      }
    const auto p = split_partition(g);
    CHECK(p.has_value() == oracle::is_split(g));
    if (p) CHECK(verify(g, *p));
  }
  const auto s12 = construct(12, true);
  REQUIRE(split_partition(s12));
  CHECK(verify(s12, *split_partition(s12)));
}

TEST_CASE("graph properties on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto g = oracle::random_graph(n, 0.45, rng);
    const auto c = complement(g);
    CHECK(complement(c) == g);
    for (int v = 0; v < n; ++v) CHECK(complement_vertex_type(g, v) == vertex_type(c, v));
    const auto d = degree_sequence(g).degrees, dc = degree_sequence(c).degrees;
    for (int i = 0; i < n; ++i) CHECK(dc[i] == n - 1 - d[n - 1 - i]);

    // Degree classes and cross classes partition the edge set.
    std::vector<int> degs;
    for (int x : d)
      if (degs.empty() || degs.back() != x) degs.push_back(x);
    int covered = 0;
    for (std::size_t i = 0; i < degs.size(); ++i) {
      covered += degree_subgraph(g, degs[i]).graph.size();
      for (std::size_t j = i + 1; j < degs.size(); ++j) covered += cross_degree_subgraph(g, degs[j], degs[i]).graph.size();
    }
    CHECK(covered == g.size());
  }
}
