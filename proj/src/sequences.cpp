#include "oblique/sequences.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oblique {

namespace {

void require_sorted(const DegreeSequence& d, const char* what) {
  if (!d.is_non_increasing()) {
    throw ContractError(std::string(what) + ": sequence must be sorted non-increasing");
  }
  if (!d.degrees.empty() && d.degrees.back() < 0) {
    throw ContractError(std::string(what) + ": negative entry");
  }
}

DegreeSequence sorted_sequence(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return DegreeSequence{std::move(values)};
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::optional<std::string> erdos_gallai_violation(const DegreeSequence& seq) {
  require_sorted(seq, "erdos_gallai");
  const auto& d = seq.degrees;
  const long n = static_cast<long>(d.size());
  const long total = std::accumulate(d.begin(), d.end(), 0L);
  if (total % 2 != 0) return "odd degree sum " + std::to_string(total);
  long prefix = 0;
  for (long r = 1; r <= n; ++r) {
    prefix += d[r - 1];
    long rhs = r * (r - 1);
    for (long j = r; j < n; ++j) rhs += std::min<long>(r, d[j]);
    if (prefix > rhs) {
      return "Erdős–Gallai fails at r=" + std::to_string(r) + ": " + std::to_string(prefix) +
             " > " + std::to_string(rhs);
    }
  }
  return std::nullopt;
}

bool erdos_gallai(const DegreeSequence& d) { return !erdos_gallai_violation(d); }

std::optional<std::string> gale_ryser_violation(const DegreeSequence& p, const DegreeSequence& q) {
  require_sorted(p, "gale_ryser");
  require_sorted(q, "gale_ryser");
  const long sp = std::accumulate(p.degrees.begin(), p.degrees.end(), 0L);
  const long sq = std::accumulate(q.degrees.begin(), q.degrees.end(), 0L);
  if (sp != sq) {
    return "degree sums differ (" + std::to_string(sp) + " != " + std::to_string(sq) + ")";
  }
  long prefix = 0;
  for (std::size_t r = 1; r <= q.size(); ++r) {
    prefix += q.degrees[r - 1];
    long lhs = 0;
    for (int pi : p.degrees) lhs += std::min<long>(static_cast<long>(r), pi);
    if (lhs < prefix) {
      return "Gale–Ryser fails at r=" + std::to_string(r) + ": " + std::to_string(lhs) + " < " +
             std::to_string(prefix);
    }
  }
  return std::nullopt;
}

bool gale_ryser(const DegreeSequence& p, const DegreeSequence& q) {
  return !gale_ryser_violation(p, q);
}

std::optional<std::string> clapham_kleitman_violation(const DegreeSequence& seq) {
  require_sorted(seq, "clapham_kleitman");
  const auto& d = seq.degrees;
  const int n = static_cast<int>(d.size());
  for (int i = 0; i < n; ++i) {
    if (d[i] + d[n - 1 - i] != n - 1) {
      return "d_" + std::to_string(i + 1) + " + d_" + std::to_string(n - i) + " = " +
             std::to_string(d[i] + d[n - 1 - i]) + " != n-1 = " + std::to_string(n - 1);
    }
  }
  std::map<int, int> r;
  for (int x : d) ++r[x];
  for (auto [deg, count] : r) {
    if (2 * deg == n - 1) {
      if (count % 4 != 1) {
        return "r_" + std::to_string(deg) + " = " + std::to_string(count) + " is not 1 (mod 4)";
      }
    } else if (count % 2 != 0) {
      return "r_" + std::to_string(deg) + " = " + std::to_string(count) + " is odd";
    }
  }
  return erdos_gallai_violation(seq);
}

bool clapham_kleitman(const DegreeSequence& d) { return !clapham_kleitman_violation(d); }

Graph realize_labeled_degrees(const std::vector<int>& demands) {
  const int n = static_cast<int>(demands.size());
  Graph g(n);
  std::vector<int> rem = demands;
  if (std::any_of(rem.begin(), rem.end(), [](int x) { return x < 0; })) {
    throw ContractError("negative degree demand");
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (;;) {
    // Highest residual demand, lowest label.
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (rem[u] > 0 && (v < 0 || rem[u] > rem[v])) v = u;
    if (v < 0) break;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rem[a] > rem[b]; });
    int need = rem[v];
    for (int w : order) {
      if (need == 0) break;
      if (w == v || rem[w] == 0) continue;
      g.add_edge(v, w);
      --rem[w];
      --need;
    }
    if (need > 0) throw ContractError("degree sequence is not graphical: " + join(demands));
    rem[v] = 0;
  }
  return g;
}

Graph realize_degree_sequence(const DegreeSequence& d) {
  if (auto why = erdos_gallai_violation(d)) {
    throw ContractError("degree sequence is not graphical: " + *why);
  }
  return realize_labeled_degrees(d.degrees);
}

BipartiteGraph realize_labeled_bipartite(const std::vector<int>& left, const std::vector<int>& right) {
  const int nl = static_cast<int>(left.size());
  const int nr = static_cast<int>(right.size());
  BipartiteGraph b(nl, nr);
  std::vector<int> rem = right;
  std::vector<int> rows(static_cast<std::size_t>(nl));
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](int a, int c) { return left[a] > left[c]; });
  std::vector<int> cols(static_cast<std::size_t>(nr));
  for (int l : rows) {
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](int a, int c) { return rem[a] > rem[c]; });
    int need = left[l];
    for (int r : cols) {
      if (need == 0 || rem[r] == 0) break;
      b.add_edge(l, r);
      --rem[r];
      --need;
    }
    if (need > 0) {
      throw ContractError("bipartite degrees are not realizable: (" + join(left) + ") / (" +
                          join(right) + ")");
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](int x) { return x != 0; })) {
    throw ContractError("bipartite degrees are not realizable: (" + join(left) + ") / (" +
                        join(right) + ")");
  }
  return b;
}

BipartiteGraph realize_bipartite(const DegreeSequence& p, const DegreeSequence& q) {
  if (auto why = gale_ryser_violation(p, q)) {
    throw ContractError("bipartite degrees are not realizable: " + *why);
  }
  return realize_labeled_bipartite(p.degrees, q.degrees);
}

int TypeSeqDecomposition::count(int d) const {
  auto it = members.find(d);
  return it == members.end() ? 0 : static_cast<int>(it->second.size());
}

Outcome<TypeSeqDecomposition> decompose_type_sequence(const TypeSequence& t) {
  const int n = static_cast<int>(t.size());
  TypeSeqDecomposition dec;
  dec.degree_of.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int r = static_cast<int>(t.types[v].length());
    if (r > n - 1) {
      return Rejection{"invalid-type-length", "type " + t.types[v].to_string() + " of vertex " +
                                                  std::to_string(v) + " is longer than n-1 = " +
                                                  std::to_string(n - 1)};
    }
    dec.degree_of[v] = r;
    dec.members[r].push_back(v);
  }

  // Per vertex: how many entries of each degree its type lists.
  std::vector<std::map<int, int>> entries(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int q : t.types[v].entries) {
      if (dec.count(q) == 0) {
        return Rejection{"unknown-degree-entry",
                         "type " + t.types[v].to_string() + " lists degree " + std::to_string(q) +
                             " but no type has length " + std::to_string(q)};
      }
      ++entries[v][q];
    }
    for (auto [q, c] : entries[v]) {
      const int room = dec.count(q) - (q == dec.degree_of[v] ? 1 : 0);
      if (c > room) {
        return Rejection{"demand-exceeds-class",
                         "type " + t.types[v].to_string() + " lists degree " + std::to_string(q) +
                             " " + std::to_string(c) + " times but only " + std::to_string(room) +
                             " other vertices have that degree"};
      }
    }
  }

  auto demand = [&](int v, int q) {
    auto it = entries[v].find(q);
    return it == entries[v].end() ? 0 : it->second;
  };

  for (const auto& [d, vs] : dec.members) {
    auto& internal = dec.internal[d];
    for (int v : vs) internal.push_back(demand(v, d));
    const int total = std::accumulate(internal.begin(), internal.end(), 0);
    if (total % 2 != 0) {
      return Rejection{"handshake-parity", "degree-" + std::to_string(d) +
                                               " vertices list degree " + std::to_string(d) + " " +
                                               std::to_string(total) + " times in total (odd)"};
    }
  }

  for (auto hi = dec.members.rbegin(); hi != dec.members.rend(); ++hi) {
    for (auto lo = std::next(hi); lo != dec.members.rend(); ++lo) {
      const int p = hi->first;
      const int q = lo->first;
      CrossDemand cd;
      for (int v : hi->second) cd.left.push_back(demand(v, q));
      for (int v : lo->second) cd.right.push_back(demand(v, p));
      const int sl = std::accumulate(cd.left.begin(), cd.left.end(), 0);
      const int sr = std::accumulate(cd.right.begin(), cd.right.end(), 0);
      if (sl != sr) {
        return Rejection{"cross-sum-mismatch",
                         "degree-" + std::to_string(p) + " vertices list degree " +
                             std::to_string(q) + " " + std::to_string(sl) + " times but degree-" +
                             std::to_string(q) + " vertices list degree " + std::to_string(p) +
                             " " + std::to_string(sr) + " times"};
      }
      if (sl > 0) dec.cross.emplace(std::pair{p, q}, std::move(cd));
    }
  }
  return dec;
}

Outcome<Graph> recognize_type_sequence(const TypeSequence& t) {
  auto outcome = decompose_type_sequence(t);
  if (auto* rej = std::get_if<Rejection>(&outcome)) return *rej;
  const auto& dec = std::get<TypeSeqDecomposition>(outcome);

  for (const auto& [d, demands] : dec.internal) {
    if (auto why = erdos_gallai_violation(sorted_sequence(demands))) {
      return Rejection{"eg-fail(" + std::to_string(d) + ")",
                       "degree-" + std::to_string(d) + " subgraph demands (" + join(demands) +
                           ") are not graphical: " + *why};
    }
  }
  for (const auto& [pq, cd] : dec.cross) {
    if (auto why = gale_ryser_violation(sorted_sequence(cd.left), sorted_sequence(cd.right))) {
      return Rejection{"gr-fail(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")",
                       "cross demands (" + join(cd.left) + ") / (" + join(cd.right) +
                           ") are not bipartite-realizable: " + *why};
    }
  }

  // The classes partition the edge set, so each is realized on its own.
  Graph g(static_cast<int>(t.size()));
  for (const auto& [d, demands] : dec.internal) {
    const auto& vs = dec.members.at(d);
    const Graph part = realize_labeled_degrees(demands);
    for (auto [a, b] : part.edges()) g.add_edge(vs[a], vs[b]);
  }
  for (const auto& [pq, cd] : dec.cross) {
    const auto& left = dec.members.at(pq.first);
    const auto& right = dec.members.at(pq.second);
    const BipartiteGraph part = realize_labeled_bipartite(cd.left, cd.right);
    for (auto [a, b] : part.edges()) g.add_edge(left[a], right[b]);
  }
  if (type_sequence(g) != make_type_sequence(t.types)) {
    throw std::logic_error("realized graph does not reproduce the requested type sequence");
  }
  return g;
}

Outcome<TypeSequence> complement_type_sequence(const TypeSequence& t) {
  auto outcome = decompose_type_sequence(t);
  if (auto* rej = std::get_if<Rejection>(&outcome)) return *rej;
  const auto& dec = std::get<TypeSeqDecomposition>(outcome);
  const int n = static_cast<int>(t.size());

  std::vector<VertexType> out;
  out.reserve(t.size());
  for (int v = 0; v < n; ++v) {
    // Degrees of the non-neighbours: all degrees, minus v's own, minus its type entries.
    std::map<int, int> pool;
    for (const auto& [d, vs] : dec.members) pool[d] = static_cast<int>(vs.size());
    --pool[dec.degree_of[v]];
    for (int q : t.types[v].entries) --pool[q];
    std::vector<int> entries;
    for (auto [d, c] : pool)
      for (int i = 0; i < c; ++i) entries.push_back(n - 1 - d);
    out.push_back(make_type(std::move(entries)));
  }
  return make_type_sequence(std::move(out));
}

Outcome<TypeSeqFlags> classify_type_sequence(const TypeSequence& t) {
  auto comp = complement_type_sequence(t);
  if (auto* rej = std::get_if<Rejection>(&comp)) return *rej;
  const auto& ct = std::get<TypeSequence>(comp);

  auto distinct = [](std::vector<VertexType> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  TypeSeqFlags flags;
  flags.vertex_oblique = distinct(t.types);
  auto both = t.types;
  both.insert(both.end(), ct.types.begin(), ct.types.end());
  flags.super_vertex_oblique = distinct(std::move(both));
  flags.dually_vertex_oblique = flags.vertex_oblique && ct == make_type_sequence(t.types);
  return flags;
}

}  // namespace oblique
