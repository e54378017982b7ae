#include "oblique/oblique.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oblique {

namespace {

std::vector<VertexType> sorted(std::vector<VertexType> types) {
  std::sort(types.begin(), types.end(), std::greater<>());
  return types;
}

bool all_distinct(const std::vector<VertexType>& sorted_types) {
  return std::adjacent_find(sorted_types.begin(), sorted_types.end()) == sorted_types.end();
}

long choose2(long r) { return r * (r - 1) / 2; }

}  // namespace

int DegreeClassStats::count(int d) const {
  auto it = r.find(d);
  return it == r.end() ? 0 : it->second;
}

int DegreeClassStats::edges_between(int x, int y) const {
  auto it = s.find({std::min(x, y), std::max(x, y)});
  return it == s.end() ? 0 : it->second;
}

DegreeClassStats class_stats(const Graph& g) {
  DegreeClassStats stats;
  const auto deg = g.degrees();
  for (int d : deg) ++stats.r[d];
  for (auto [u, v] : g.edges()) {
    ++stats.s[{std::min(deg[u], deg[v]), std::max(deg[u], deg[v])}];
  }
  return stats;
}

bool is_vertex_oblique(const Graph& g) { return all_distinct(sorted(vertex_types(g))); }

bool is_super_vertex_oblique(const Graph& g) {
  auto all = vertex_types(g);
  auto comp = complement_vertex_types(g);
  all.insert(all.end(), comp.begin(), comp.end());
  return all_distinct(sorted(std::move(all)));
}

bool is_dually_vertex_oblique(const Graph& g) {
  auto types = sorted(vertex_types(g));
  if (!all_distinct(types)) return false;
  return types == sorted(complement_vertex_types(g));
}

Vertex dual_partner(const Graph& g, Vertex v) {
  g.check_vertex(v);
  const auto target = vertex_type(g, v);
  const auto comp = complement_vertex_types(g);
  Vertex found = -1;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (comp[w] != target) continue;
    if (found >= 0) {
      throw ContractError("vertex " + std::to_string(v) + " has several dual partners (" +
                          std::to_string(found) + ", " + std::to_string(w) +
                          "); graph is not dually vertex-oblique");
    }
    found = w;
  }
  if (found < 0) {
    throw ContractError("no vertex has complement type " + target.to_string() +
                        "; graph is not dually vertex-oblique");
  }
  return found;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string to_string(PremiseLevel p) {
  switch (p) {
    case PremiseLevel::none: return "none";
    case PremiseLevel::same_degrees: return "same-degrees";
    case PremiseLevel::same_types: return "same-types";
    case PremiseLevel::dually_oblique: return "dually-oblique";
  }
  return "?";
}

bool LemmaAudit::all_applicable_pass() const {
  return std::none_of(parts.begin(), parts.end(),
                      [](const PartVerdict& p) { return p.verdict == Verdict::fail; });
}

namespace {

PartVerdict pass() { return {Verdict::pass, {}}; }
PartVerdict fail(std::string witness) { return {Verdict::fail, std::move(witness)}; }

PartVerdict audit_symmetric_degrees(const std::vector<int>& d, int n) {
  for (int i = 0; i < n; ++i) {
    if (d[i] + d[n - 1 - i] != n - 1) {
      return fail("d_" + std::to_string(i + 1) + " + d_" + std::to_string(n - i) + " = " +
                  std::to_string(d[i] + d[n - 1 - i]) + " != " + std::to_string(n - 1));
    }
  }
  return pass();
}

PartVerdict audit_order_mod4(int n) {
  if (n % 4 == 0 || n % 4 == 1) return pass();
  return fail("n = " + std::to_string(n) + " = " + std::to_string(n % 4) + " (mod 4)");
}

PartVerdict audit_edge_counts(const DegreeClassStats& st, int n) {
  auto bar = [n](int d) { return n - 1 - d; };
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      const long rx = st.count(x);
      const long ry = st.count(y);
      if (x == y) {
        const long lhs = st.edges_between(y, y) + st.edges_between(bar(y), bar(y));
        if (lhs != choose2(ry)) {
          return fail("s_{" + std::to_string(y) + "," + std::to_string(y) + "} + s_{" +
                      std::to_string(bar(y)) + "," + std::to_string(bar(y)) + "} = " +
                      std::to_string(lhs) + " != C(r_" + std::to_string(y) + ", 2) = " +
                      std::to_string(choose2(ry)));
        }
      } else {
        const long lhs = st.edges_between(x, y) + st.edges_between(bar(x), bar(y));
        if (lhs != rx * ry) {
          return fail("s_{" + std::to_string(x) + "," + std::to_string(y) + "} + s_{" +
                      std::to_string(bar(x)) + "," + std::to_string(bar(y)) + "} = " +
                      std::to_string(lhs) + " != r_" + std::to_string(x) + " r_" +
                      std::to_string(y) + " = " + std::to_string(rx * ry));
        }
      }
    }
  }
  for (auto [d, rd] : st.r) {
    const long twice = 2L * st.edges_between(d, bar(d));
    const long expected = d == bar(d) ? choose2(rd) : static_cast<long>(rd) * rd;
    if (twice != expected) {
      return fail("2 s_{" + std::to_string(d) + "," + std::to_string(bar(d)) + "} = " +
                  std::to_string(twice) + " != " + std::to_string(expected));
    }
  }
  return pass();
}

PartVerdict audit_class_parity(const DegreeClassStats& st, int n) {
  for (auto [d, rd] : st.r) {
    if (2 * d == n - 1) {
      if (rd % 4 != 1) {
        return fail("r_" + std::to_string(d) + " = " + std::to_string(rd) + " != 1 (mod 4)");
      }
    } else if (rd % 2 != 0) {
      return fail("r_" + std::to_string(d) + " = " + std::to_string(rd) + " is odd");
    }
  }
  if (n % 2 == 1 && st.count((n - 1) / 2) == 0) {
    return fail("r_" + std::to_string((n - 1) / 2) + " = 0 != 1 (mod 4)");
  }
  return pass();
}

PartVerdict audit_class_bound(const DegreeClassStats& st, int n) {
  for (auto [d, rd] : st.r) {
    if (2 * d == n - 1) continue;
    if (rd >= 2 * d) {
      return fail("r_" + std::to_string(d) + " = " + std::to_string(rd) + " >= " +
                  std::to_string(2 * d));
    }
  }
  return pass();
}

PartVerdict audit_three_degrees(const DegreeClassStats& st) {
  if (st.r.size() >= 3) return pass();
  return fail(std::to_string(st.r.size()) + " distinct degrees");
}

}  // namespace

LemmaAudit lemma_audit(const Graph& g) {
  LemmaAudit audit;
  const int n = g.order();
  const auto ds = degree_sequence(g);
  const auto dc = degree_sequence(complement(g));
  if (ds != dc) {
    std::size_t i = 0;
    while (ds.degrees[i] == dc.degrees[i]) ++i;
    audit.parts[0].witness = "premise fails: position " + std::to_string(i + 1) + " has degree " +
                             std::to_string(ds.degrees[i]) + " but " + std::to_string(dc.degrees[i]) +
                             " in the complement";
    return audit;
  }

  audit.level = PremiseLevel::same_degrees;
  audit.parts[0] = audit_symmetric_degrees(ds.degrees, n);
  audit.parts[1] = audit_order_mod4(n);

  auto types = sorted(vertex_types(g));
  if (types != sorted(complement_vertex_types(g))) return audit;

  audit.level = PremiseLevel::same_types;
  const auto st = class_stats(g);
  audit.parts[2] = audit_edge_counts(st, n);
  audit.parts[3] = audit_class_parity(st, n);

  if (!all_distinct(types)) return audit;

  audit.level = PremiseLevel::dually_oblique;
  audit.parts[4] = audit_class_bound(st, n);
  audit.parts[5] = audit_three_degrees(st);
  return audit;
}

bool is_dually_semi_vertex_oblique(const BipartiteGraph& b) {
  if (b.left_size() != b.right_size() || b.left_size() % 2 != 0) {
    throw ContractError("semi-oblique conditions need equal even part sizes, got " +
                        std::to_string(b.left_size()) + " and " + std::to_string(b.right_size()));
  }
  auto left = sorted(left_types(b));
  if (!all_distinct(left)) return false;
  if (left != sorted(right_types(b))) return false;
  return left == sorted(left_types(bipartite_complement(b)));
}

}  // namespace oblique
