#include <doctest.h>

#include <algorithm>
#include <set>

#include "oblique/constructions.hpp"
#include "oblique/io.hpp"
#include "oblique/oblique.hpp"
#include "support/oracles.hpp"

using namespace oblique;

#ifndef FIXTURES_DIR
#error "FIXTURES_DIR must point at the committed fixture directory"
#endif

namespace {

std::vector<VertexType> sorted(std::vector<VertexType> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("pinned fixtures match the committed files") {
  CHECK(parse_edge_list(read_file(FIXTURES_DIR "/base8.el")) == base8());
  CHECK(parse_bipartite_edge_list(read_file(FIXTURES_DIR "/semi12.el")) == semi_base(3));
  CHECK(parse_bipartite_edge_list(read_file(FIXTURES_DIR "/semi16.el")) == semi_base(4));
  CHECK_THROWS_AS(semi_base(5), ContractError);
}

TEST_CASE("base8") {
  const auto g = base8();
  CHECK(g.order() == 8);
  CHECK(oracle::dually_oblique(g));
  CHECK(is_dually_vertex_oblique(g));
  const auto d = degree_sequence(g).degrees;
  for (int i = 0; i < 8; ++i) CHECK(d[i] + d[7 - i] == 7);
  std::set<int> distinct(d.begin(), d.end());
  CHECK(distinct.size() >= 3);
}

TEST_CASE("extend_plus4") {
  Graph g = base8();
  while (g.order() < 100) {
    const int n = g.order();
    const auto next = extend_plus4(g);
    REQUIRE(next.order() == n + 4);
    CHECK(is_dually_vertex_oblique(next));
    for (Vertex v = 0; v < n; ++v) CHECK(next.degree(v) == g.degree(v) + 2);
    CHECK(next.degree(n) == 2);
    CHECK(next.degree(n + 1) == 2);
    CHECK(next.degree(n + 2) == n + 4 - 3);
    CHECK(next.degree(n + 3) == n + 4 - 3);
    // The new vertices induce the path v2 - v2bar - w2bar - w2.
    CHECK(next.has_edge(n, n + 2));
    CHECK(next.has_edge(n + 2, n + 3));
    CHECK(next.has_edge(n + 3, n + 1));
    CHECK_FALSE(next.has_edge(n, n + 1));
    CHECK_FALSE(next.has_edge(n, n + 3));
    CHECK_FALSE(next.has_edge(n + 1, n + 2));
    // Partners persist; the new vertices pair up as {v2, w2bar} and {w2, v2bar}.
    for (Vertex v = 0; v < n; ++v) CHECK(dual_partner(next, v) == dual_partner(g, v));
    CHECK(dual_partner(next, n) == n + 3);
    CHECK(dual_partner(next, n + 1) == n + 2);
    g = next;
  }
  CHECK_THROWS_AS(extend_plus4(Graph::cycle(8)), ContractError);
  CHECK_THROWS_AS(extend_plus4(add_apex(base8())), ContractError);
}

TEST_CASE("add_apex") {
  const auto g = base8();
  const auto h = add_apex(g);
  CHECK(h.order() == 9);
  CHECK(is_dually_vertex_oblique(h));
  CHECK(h.degree(8) == 4);
  int degree4 = 0;
  for (Vertex v = 0; v < 9; ++v) degree4 += h.degree(v) == 4;
  CHECK(degree4 == 1);
  CHECK(dual_partner(h, 8) == 8);
  for (Vertex v = 0; v < 8; ++v) CHECK(h.degree(v) == (g.degree(v) < 4 ? g.degree(v) : g.degree(v) + 1));

  const auto s = add_apex(construct(12, true));
  CHECK(split_partition(s).has_value());
  CHECK(oracle::is_split(s));
  CHECK(is_dually_vertex_oblique(s));
  CHECK_THROWS_AS(add_apex(Graph::cycle(8)), ContractError);
}

TEST_CASE("semi_extend_plus8") {
  for (int k0 : {3, 4}) {
    BipartiteGraph b = semi_base(k0);
    for (int step = 0; step < 4; ++step) {
      const int m = b.left_size();
      const auto next = semi_extend_plus8(b);
      REQUIRE(next.left_size() == m + 4);
      CHECK(is_dually_semi_vertex_oblique(next));
      for (int i = 0; i < m; ++i) {
        CHECK(next.left_degree(i) == b.left_degree(i) + 2);
        CHECK(next.right_degree(i) == b.right_degree(i) + 2);
      }
      for (int off : {0, 1}) {
        CHECK(next.left_degree(m + off) == 2);
        CHECK(next.right_degree(m + off) == 2);
        CHECK(next.left_degree(m + 2 + off) == m + 2);
        CHECK(next.right_degree(m + 2 + off) == m + 2);
      }
      // The bipartite complement is again semi-oblique with the same left type multiset.
      const auto comp = bipartite_complement(next);
      CHECK(is_dually_semi_vertex_oblique(comp));
      CHECK(sorted(left_types(comp)) == sorted(left_types(next)));
      b = next;
    }
  }
  BipartiteGraph matching(6, 6);
  for (int i = 0; i < 6; ++i) matching.add_edge(i, i);
  CHECK_THROWS_AS(semi_extend_plus8(matching), ContractError);
}

TEST_CASE("split_completion") {
  for (int k : {3, 4}) {
    const auto b = semi_base(k);
    const auto g = split_completion(b);
    CHECK(g.order() == 4 * k);
    CHECK(is_dually_vertex_oblique(g));
    CHECK(split_partition(g).has_value());
    CHECK(oracle::is_split(g));
    for (int j = 0; j < 2 * k; ++j) CHECK(g.degree(2 * k + j) == b.right_degree(j) + 2 * k - 1);
    for (int i = 0; i < 2 * k; ++i) CHECK(g.degree(i) == b.left_degree(i));
  }
}

TEST_CASE("construct") {
  for (int n = 8; n <= 100; ++n) {
    if (n % 4 == 2 || n % 4 == 3) {
      CHECK_THROWS_AS(construct(n), ContractError);
      continue;
    }
    const auto g = construct(n);
    CHECK(g.order() == n);
    CHECK(is_dually_vertex_oblique(g));
    CHECK(lemma_audit(g).all_applicable_pass());
    const auto gd = g.degrees();
    CHECK(*std::min_element(gd.begin(), gd.end()) == 2);
    if (n >= 12) {
      const auto s = construct(n, true);
      CHECK(s.order() == n);
      CHECK(is_dually_vertex_oblique(s));
      CHECK(split_partition(s).has_value());
      const auto degs = s.degrees();
      CHECK(std::count(degs.begin(), degs.end(), 2) > 0);
    }
  }
  for (int n : {0, 1, 4, 5}) CHECK_THROWS_AS(construct(n), ContractError);
  for (int n : {8, 9}) CHECK_THROWS_AS(construct(n, true), ContractError);
  try {
    construct(6);
    FAIL("construct(6) must throw");
  } catch (const ContractError& e) {
    CHECK(std::string(e.what()).find("n ≡ 2 (mod 4)") != std::string::npos);
  }
  CHECK(construct(13, true).order() == 13);
  CHECK(oracle::is_split(construct(13, true)));
}
