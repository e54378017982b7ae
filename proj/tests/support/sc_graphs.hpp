// Random self-complementary graphs built from a complementing permutation.
#pragma once

#include <random>
#include <vector>

#include "oblique/graph.hpp"

namespace sc {

/// Product of 4-cycles (0 1 2 3)(4 5 6 7)..., fixing the last vertex when n is odd.
inline std::vector<int> complementing_permutation(int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) sigma[v] = v / 4 * 4 + (v % 4 + 1) % 4;
  if (n % 4 == 1) sigma[n - 1] = n - 1;
  return sigma;
}

/// n = 4k or 4k+1. sigma is a product of 4-cycles (plus a fixed point when n is
/// odd); each orbit of vertex pairs under sigma alternates edge / non-edge.
inline oblique::Graph random_self_complementary(int n, std::mt19937_64& rng) {
  const auto sigma = complementing_permutation(n);

  std::vector<std::vector<char>> done(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  oblique::Graph g(n);
  std::bernoulli_distribution coin(0.5);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (done[u][v]) continue;
      bool edge = coin(rng);
      int a = u, b = v;
      while (!done[a][b]) {
        done[a][b] = done[b][a] = 1;
        if (edge) g.add_edge(a, b);
        edge = !edge;
        a = sigma[a];
        b = sigma[b];
      }
    }
  return g;
}

}  // namespace sc
