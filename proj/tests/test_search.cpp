#include <doctest.h>

#include <random>

#include "oblique/constructions.hpp"
#include "oblique/oblique.hpp"
#include "oblique/search.hpp"
#include "oblique/sequences.hpp"
#include "oblique/switching.hpp"
#include "support/dvo_oracle.hpp"
#include "support/oracles.hpp"

using namespace oblique;

namespace {

std::set<oracle::EdgeList> edge_sets(const std::vector<Graph>& gs) {
  std::set<oracle::EdgeList> out;
  for (const auto& g : gs) out.insert(g.edges());
  return out;
}

std::set<oracle::EdgeList> edge_sets(const std::vector<BipartiteGraph>& bs) {
  std::set<oracle::EdgeList> out;
  for (const auto& b : bs) out.insert(b.edges());
  return out;
}

}  // namespace

TEST_CASE("canonical oblique form") {
  std::mt19937_64 rng(31);
  const auto g = base8();
  const auto c = canonical_oblique_form(g);
  CHECK(c.edges() == oracle::type_order_edges(g));
  for (int i = 0; i < 20; ++i) {
    const auto h = oracle::relabel(construct(12), oracle::random_permutation(12, rng));
    CHECK(canonical_oblique_form(h) == canonical_oblique_form(construct(12)));
  }
  const auto types = vertex_types(c);
  for (int v = 0; v + 1 < c.order(); ++v) CHECK(types[v] > types[v + 1]);
  CHECK_THROWS_AS(canonical_oblique_form(Graph::cycle(5)), ContractError);
}

TEST_CASE("canonical semi form") {
  std::mt19937_64 rng(32);
  for (int k : {3, 4}) {
    const auto b = semi_base(k);
    CHECK(canonical_semi_form(b).edges() == oracle::semi_type_order_edges(b));
    const int m = 2 * k;
    for (int i = 0; i < 10; ++i) {
      const auto pl = oracle::random_permutation(m, rng), pr = oracle::random_permutation(m, rng);
      BipartiteGraph shuffled(m, m);
      for (auto [l, r] : b.edges()) shuffled.add_edge(pl[l], pr[r]);
      CHECK(canonical_semi_form(shuffled) == canonical_semi_form(b));
    }
  }
}

TEST_CASE("degree sequences of dually oblique graphs") {
  for (int n : {2, 3, 4, 5, 6, 7}) CHECK(dvo_degree_sequences(n).empty());
  CHECK(dvo_degree_sequences(1) == std::vector<DegreeSequence>{DegreeSequence{{0}}});
  for (int n : {8, 9, 12}) {
    const auto seqs = dvo_degree_sequences(n);
    CHECK_FALSE(seqs.empty());
    for (const auto& d : seqs) {
      CHECK(erdos_gallai(d));
      for (int i = 0; i < n; ++i) CHECK(d.degrees[i] + d.degrees[n - 1 - i] == n - 1);
    }
    const auto c = degree_sequence(construct(n));
    CHECK(std::find(seqs.begin(), seqs.end(), c) != seqs.end());
  }
}

TEST_CASE("small orders have no dually oblique graphs") {
  const auto k1 = enumerate_dvo(1);
  REQUIRE(k1.graphs.size() == 1);
  CHECK(k1.graphs.front() == Graph(1));
  CHECK(oracle::dvo_classes(1).size() == 1);
  for (int n = 2; n <= 7; ++n) {
    const auto r = enumerate_dvo(n);
    CHECK(r.graphs.empty());
    CHECK(r.exhaustive);
    CHECK(oracle::dvo_classes(n).empty());
  }
}

TEST_CASE("order 8 search agrees with the reference enumerator") {
  const auto r = enumerate_dvo(8);
  CHECK(r.exhaustive);
  const auto expected = oracle::dvo_classes(8);
  CHECK(expected.size() == 4);
  CHECK(edge_sets(r.graphs) == expected);
  REQUIRE_FALSE(r.graphs.empty());
  CHECK(r.graphs.front() == base8());
  for (std::size_t i = 0; i + 1 < r.graphs.size(); ++i) CHECK(r.graphs[i].edges() < r.graphs[i + 1].edges());
  for (const auto& g : r.graphs) {
    CHECK(oracle::dually_oblique(g));
    CHECK(canonical_oblique_form(g) == g);
  }
}

TEST_CASE("order 9 search") {
  const auto r = enumerate_dvo(9);
  CHECK(r.graphs.size() == 32);
  for (const auto& g : r.graphs) {
    CHECK(oracle::dually_oblique(g));
    CHECK(g.edges() == oracle::type_order_edges(g));
  }
  CHECK(std::find(r.graphs.begin(), r.graphs.end(), canonical_oblique_form(add_apex(base8()))) != r.graphs.end());
}

TEST_CASE("search options") {
  const auto all = enumerate_dvo(9);
  SearchOptions two;
  two.jobs = 2;
  CHECK(enumerate_dvo(9, two).graphs == all.graphs);

  SearchOptions one;
  one.limit = 1;
  const auto first = enumerate_dvo(9, one);
  CHECK(first.graphs.size() == 1);
  CHECK_FALSE(first.exhaustive);
  CHECK(oracle::dually_oblique(first.graphs.front()));

  int messages = 0;
  SearchOptions chatty;
  chatty.progress = [&](const std::string&) { ++messages; };
  enumerate_dvo(8, chatty);
  CHECK(messages > 0);

  CHECK_THROWS_AS(enumerate_dvo(13), ContractError);
  CHECK_THROWS_AS(search_semi_dvo(2), ContractError);
  CHECK_THROWS_AS(search_semi_dvo(5), ContractError);
}

TEST_CASE("semi search with parts of size 6 agrees with exhaustive rows") {
  const auto r = search_semi_dvo(3);
  CHECK(r.exhaustive);
  const auto expected = oracle::semi_classes_k3();
  CHECK(edge_sets(r.graphs) == expected);
  CHECK(r.graphs.size() == 8);
  REQUIRE_FALSE(r.graphs.empty());
  CHECK(r.graphs.front() == semi_base(3));
  for (const auto& b : r.graphs) {
    CHECK(oracle::semi_oblique(b));
    CHECK(is_dually_vertex_oblique(split_completion(b)));
  }
  SearchOptions three;
  three.jobs = 3;
  CHECK(search_semi_dvo(3, three).graphs == r.graphs);
}

TEST_CASE("realization classes") {
  const auto t = type_sequence(base8());
  const auto labeled = labeled_realizations(t);
  CHECK_FALSE(labeled.empty());
  for (const auto& g : labeled) CHECK(type_sequence(g) == t);
  const auto classes = realization_classes(t);
  CHECK(classes.size() >= 2);
  const auto pal = companion(base8());
  int matches = 0;
  for (const auto& c : classes) matches += oracle::isomorphic(c, base8()) + oracle::isomorphic(c, pal);
  CHECK(matches == 2);

  const auto c6 = realization_classes(type_sequence(Graph::cycle(6)));
  CHECK(c6.size() == 2);
  CHECK(labeled_realizations(type_sequence(Graph::complete(4))).size() == 1);
}

TEST_CASE("vertex deletion probe") {
  const auto g = add_apex(base8());
  const auto probe = probe_vertex_deletion(g);
  CHECK(probe.k == 2);
  REQUIRE(probe.rows.size() == 1);
  CHECK(probe.rows[0].vertex == 8);
  CHECK(probe.rows[0].vertex_oblique);
  CHECK(probe.rows[0].equal_types);
  CHECK_FALSE(probe.every_row_a_or_b);

  for (int n : {13, 17, 21}) {
    const auto h = construct(n);
    const auto p = probe_vertex_deletion(h);
    for (const auto& row : p.rows) {
      CHECK(h.degree(row.vertex) == (n - 1) / 2);
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < n; ++w)
        if (w != row.vertex) rest.push_back(w);
      const auto sub = induced_subgraph(h, rest).graph;
      auto types = oracle::type_multiset(sub);
      auto comp = oracle::type_multiset(oracle::complement(sub));
      std::sort(types.begin(), types.end());
      std::sort(comp.begin(), comp.end());
      CHECK(row.equal_types == (types == comp));
      CHECK(row.vertex_oblique == (std::adjacent_find(types.begin(), types.end()) == types.end()));
    }
  }
  CHECK_THROWS_AS(probe_vertex_deletion(base8()), ContractError);
  CHECK_THROWS_AS(probe_vertex_deletion(Graph::cycle(9)), ContractError);
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(Graph::cycle(5)) == 2);
  CHECK(vertex_connectivity(Graph::complete(4)) == 3);
  CHECK(vertex_connectivity(Graph::path(4)) == 1);
  CHECK(vertex_connectivity(Graph(3)) == 0);
  CHECK(vertex_connectivity(Graph(1)) == 0);
  std::mt19937_64 rng(33);
  for (int i = 0; i < 150; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto g = oracle::random_graph(n, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    CHECK(vertex_connectivity(g) == oracle::connectivity(g, n - 1));
  }
  for (int n : {8, 9, 12, 13, 16}) CHECK(vertex_connectivity(construct(n)) == oracle::connectivity(construct(n), n - 1));
}
