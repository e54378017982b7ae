#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "oblique/graph.hpp"

namespace oblique {

/// Per-degree vertex counts r_d and per-degree-pair edge counts s_{x,y}.
struct DegreeClassStats {
  std::map<int, int> r;
  /// Keyed by (x, y) with x <= y.
  std::map<std::pair<int, int>, int> s;

  int count(int d) const;
  int edges_between(int x, int y) const;
};

DegreeClassStats class_stats(const Graph& g);

bool is_vertex_oblique(const Graph& g);
bool is_super_vertex_oblique(const Graph& g);
bool is_dually_vertex_oblique(const Graph& g);

/// The unique vertex whose complement type equals the type of v.
/// Throws ContractError when no unique partner exists.
Vertex dual_partner(const Graph& g, Vertex v);

enum class Verdict { pass, fail, not_applicable };

std::string to_string(Verdict v);

struct PartVerdict {
  Verdict verdict = Verdict::not_applicable;
  std::string witness;
};

/// Deepest hypothesis level of the degree-symmetry lemma that a graph reaches.
enum class PremiseLevel {
  none,                ///< degree sequence differs from the complement's
  same_degrees,        ///< parts A, B apply
  same_types,          ///< parts C, D apply as well
  dually_oblique,      ///< parts E, F apply as well
};

std::string to_string(PremiseLevel p);

struct LemmaAudit {
  PremiseLevel level = PremiseLevel::none;
  /// Indexed A..F.
  std::array<PartVerdict, 6> parts;

  const PartVerdict& part(char letter) const { return parts.at(static_cast<std::size_t>(letter - 'A')); }
  bool all_applicable_pass() const;
};

LemmaAudit lemma_audit(const Graph& g);

/// Conditions (i)-(iii) on a bipartite graph with both parts of the same even size.
bool is_dually_semi_vertex_oblique(const BipartiteGraph& b);

}  // namespace oblique
