#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oblique/graph.hpp"

namespace oblique {

/// Machine-readable reason a sequence was rejected. Codes: unknown-degree-entry,
/// invalid-type-length, demand-exceeds-class, handshake-parity,
/// cross-sum-mismatch, eg-fail(d), gr-fail(p,q).
struct Rejection {
  std::string code;
  std::string detail;
};

template <typename T>
using Outcome = std::variant<T, Rejection>;

/// The first failing Erdős–Gallai check, or nullopt when the sequence is graphical.
/// Throws ContractError when the input is not sorted non-increasing or has a negative entry.
std::optional<std::string> erdos_gallai_violation(const DegreeSequence& d);
bool erdos_gallai(const DegreeSequence& d);

std::optional<std::string> gale_ryser_violation(const DegreeSequence& p, const DegreeSequence& q);
bool gale_ryser(const DegreeSequence& p, const DegreeSequence& q);

/// Symmetry about (n-1)/2, class-size parity, and graphicality.
std::optional<std::string> clapham_kleitman_violation(const DegreeSequence& d);
bool clapham_kleitman(const DegreeSequence& d);

/// Havel-Hakimi on labeled demands: vertex i ends with degree demands[i].
Graph realize_labeled_degrees(const std::vector<int>& demands);
Graph realize_degree_sequence(const DegreeSequence& d);

/// Greedy bipartite realization: left vertex i gets left[i], right j gets right[j].
BipartiteGraph realize_labeled_bipartite(const std::vector<int>& left, const std::vector<int>& right);
BipartiteGraph realize_bipartite(const DegreeSequence& p, const DegreeSequence& q);

struct CrossDemand {
  std::vector<int> left;   ///< demands of the degree-p vertices, aligned with their members
  std::vector<int> right;  ///< demands of the degree-q vertices
};

/// Vertex i of the decomposition is the vertex carrying the i-th type of the sequence.
struct TypeSeqDecomposition {
  std::vector<int> degree_of;                 ///< per vertex
  std::map<int, std::vector<int>> members;    ///< degree -> vertices, increasing
  std::map<int, std::vector<int>> internal;   ///< degree d -> demands inside G_d
  std::map<std::pair<int, int>, CrossDemand> cross;  ///< (p, q), p > q

  int count(int d) const;
};

Outcome<TypeSeqDecomposition> decompose_type_sequence(const TypeSequence& t);

/// A graph whose type sequence is t (vertex i carries t.types[i]), or the first failed check.
Outcome<Graph> recognize_type_sequence(const TypeSequence& t);

Outcome<TypeSequence> complement_type_sequence(const TypeSequence& t);

struct TypeSeqFlags {
  bool vertex_oblique = false;
  bool super_vertex_oblique = false;
  bool dually_vertex_oblique = false;
};

Outcome<TypeSeqFlags> classify_type_sequence(const TypeSequence& t);

}  // namespace oblique
