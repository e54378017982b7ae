// Command-line front end. Exit status: 0 success, 1 negative verdict, 2 usage or input error.
#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oblique/constructions.hpp"
#include "oblique/graph.hpp"
#include "oblique/io.hpp"
#include "oblique/oblique.hpp"
#include "oblique/search.hpp"
#include "oblique/sequences.hpp"
#include "oblique/switching.hpp"

#ifndef OBLIQUE_FIXTURES_DIR
#define OBLIQUE_FIXTURES_DIR "fixtures"
#endif

using nlohmann::json;
using namespace oblique;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

// Usage or input problem detected after parsing.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json basis(const std::string& result, const std::string& statement) {
  return {{"result", result}, {"statement", statement}};
}

json report(const std::string& command, json basis_block) {
  return {{"command", command}, {"basis", std::move(basis_block)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Graph load_graph(const std::string& path) {
  auto parsed = parse_any_edge_list(read_file(path));
  if (std::holds_alternative<BipartiteGraph>(parsed))
    throw InputError(path + ": expected a graph, found a bipartite edge list");
  return std::get<Graph>(std::move(parsed));
}

BipartiteGraph load_bipartite(const std::string& path) {
  auto parsed = parse_any_edge_list(read_file(path));
  if (std::holds_alternative<Graph>(parsed))
    throw InputError(path + ": expected a bipartite edge list");
  return std::get<BipartiteGraph>(std::move(parsed));
}

void output(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

json types_json(const std::vector<VertexType>& types) {
  auto arr = json::array();
  for (const auto& t : types) arr.push_back(to_json(t));
  return arr;
}

json rejection_json(const Rejection& r) { return {{"code", r.code}, {"detail", r.detail}}; }

// ---------------------------------------------------------------------------

int cmd_construct(int n, bool split, const std::string& out) {
  Graph g = construct(n, split);
  output(write_edge_list(g), out);
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& property) {
  json r = report("verify", {});
  r["property"] = property;
  bool holds = false;
  std::string label;
  if (property == "semi") {
    const auto b = load_bipartite(file);
    if (b.left_size() != b.right_size() || b.left_size() % 2 != 0)
      throw InputError("semi property needs equal even part sizes");
    holds = is_dually_semi_vertex_oblique(b);
    label = "dually semi-vertex-oblique";
    r["basis"] = basis("semi-oblique conditions (i)-(iii)",
                       "left types distinct; left and right type multisets equal; left types unchanged "
                       "under bipartite complement");
    r["left_types"] = types_json(left_types(b));
    r["right_types"] = types_json(right_types(b));
  } else {
    const auto g = load_graph(file);
    r["order"] = g.order();
    if (property == "vo") {
      holds = is_vertex_oblique(g);
      label = "vertex-oblique";
      r["basis"] = basis("vertex-oblique definition", "all vertex types pairwise distinct");
    } else if (property == "svo") {
      holds = is_super_vertex_oblique(g);
      label = "super vertex-oblique";
      r["basis"] = basis("super vertex-oblique definition",
                         "types of the graph and of its complement pairwise distinct");
    } else if (property == "dvo") {
      holds = is_dually_vertex_oblique(g);
      label = "dually vertex-oblique";
      r["basis"] = basis("dually vertex-oblique definition",
                         "vertex-oblique, with the same type multiset as the complement");
    } else if (property == "split") {
      const auto p = split_partition(g);
      holds = p.has_value();
      label = "split";
      r["basis"] = basis("split graph", "independent set plus clique");
      if (p) r["partition"] = {{"independent", p->independent}, {"clique", p->clique}};
    } else if (property == "lemma") {
      const auto audit = lemma_audit(g);
      holds = audit.all_applicable_pass();
      label = "degree-symmetry lemma";
      r["basis"] = basis("degree-symmetry lemma, parts A-F",
                         "necessary conditions for a graph sharing degrees or types with its complement");
      r["premise"] = to_string(audit.level);
      json parts = json::object();
      for (char c = 'A'; c <= 'F'; ++c) {
        const auto& pv = audit.part(c);
        parts[std::string(1, c)] = {{"verdict", to_string(pv.verdict)}, {"witness", pv.witness}};
      }
      r["parts"] = parts;
    } else {
      throw InputError("unknown property " + property);
    }
  }
  r["holds"] = holds;
  r["summary"] = label + ": " + (holds ? "true" : "false");
  emit(r);
  return holds ? kOk : kNegative;
}

int cmd_types(const std::string& file) {
  const auto g = load_graph(file);
  std::cout << write_type_sequence(type_sequence(g));
  return kOk;
}

int cmd_complement(const std::string& file, const std::string& out) {
  output(write_edge_list(complement(load_graph(file))), out);
  return kOk;
}

int cmd_companion(const std::string& file, const std::string& out) {
  output(write_edge_list(companion(load_graph(file))), out);
  return kOk;
}

int cmd_switch_path(const std::string& gfile, const std::string& hfile) {
  const auto g = load_graph(gfile);
  const auto h = load_graph(hfile);
  if (g.order() != h.order()) throw InputError("graphs have different orders");
  json r = report("switch-path", basis("restricted-switch connectivity",
                                       "graphs with identical labeled types are joined by restricted switches"));
  for (Vertex v = 0; v < g.order(); ++v) {
    if (vertex_type(g, v) != vertex_type(h, v)) {
      r["path_exists"] = false;
      r["reason"] = "vertex " + std::to_string(v) + " has type " + vertex_type(h, v).to_string() +
                    " in the source but " + vertex_type(g, v).to_string() + " in the target";
      emit(r);
      return kNegative;
    }
  }
  const auto path = restricted_switch_path(g, h);
  r["path_exists"] = true;
  r["length"] = path.size();
  r["moves"] = to_json(path);
  r["replay_ok"] = apply_path(h, path) == g;
  emit(r);
  return kOk;
}

int cmd_unique_check(const std::string& file) {
  const auto verdict = unique_typeseq_sufficient(load_graph(file));
  json r = report("unique-check", basis("unique type sequence test",
                                        "no degree class admits a switch and no cross-degree bipartite subgraph has an induced 2K2"));
  r["verdict"] = to_string(verdict);
  emit(r);
  return verdict == Uniqueness::unique ? kOk : kNegative;
}

int cmd_check_degseq(const std::string& text, bool self_comp) {
  std::vector<int> values;
  {
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw InputError("not an integer: " + token);
      }
      if (used != token.size()) throw InputError("not an integer: " + token);
      if (v < 0) throw InputError("negative degree: " + token);
      values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  DegreeSequence d{values};
  json r = report("check-degseq", self_comp ? basis("self-complementary degree conditions",
                                                    "symmetric degrees, class-size parity, and graphicality")
                                            : basis("Erdős–Gallai", "graphicality inequalities"));
  r["degrees"] = values;
  bool ok = true;
  std::string message;
  if (const auto why = erdos_gallai_violation(d)) {
    ok = false;
    message = "not graphical (" + *why + ")";
  } else if (self_comp) {
    if (const auto why2 = clapham_kleitman_violation(d)) {
      ok = false;
      message = "not self-complementary (" + *why2 + ")";
    } else {
      message = "graphical and self-complementary conditions hold";
    }
  } else {
    message = "graphical";
  }
  r["graphical"] = !erdos_gallai_violation(d).has_value();
  if (self_comp) r["self_complementary_conditions"] = ok;
  r["holds"] = ok;
  r["message"] = message;
  emit(r);
  if (!ok) std::cerr << message << "\n";
  return ok ? kOk : kNegative;
}

int cmd_check_typeseq(const std::string& file) {
  const auto t = parse_type_sequence(read_file(file));
  json r = report("check-typeseq", basis("type-sequence recognition",
                                         "decompose into class demands, then test Erdős–Gallai and "
                                         "Gale–Ryser per class"));
  r["length"] = t.size();
  const auto g = recognize_type_sequence(t);
  if (const auto* rej = std::get_if<Rejection>(&g)) {
    r["realizable"] = false;
    r["rejection"] = rejection_json(*rej);
    emit(r);
    return kNegative;
  }
  r["realizable"] = true;
  const auto flags = std::get<TypeSeqFlags>(classify_type_sequence(t));
  r["flags"] = {{"vertex_oblique", flags.vertex_oblique},
                {"super_vertex_oblique", flags.super_vertex_oblique},
                {"dually_vertex_oblique", flags.dually_vertex_oblique}};
  emit(r);
  return kOk;
}

int cmd_realize_typeseq(const std::string& file, const std::string& out) {
  const auto t = parse_type_sequence(read_file(file));
  const auto g = recognize_type_sequence(t);
  if (const auto* rej = std::get_if<Rejection>(&g)) {
    std::cerr << "not realizable: " << rej->code << ": " << rej->detail << "\n";
    return kNegative;
  }
  output(write_edge_list(std::get<Graph>(g)), out);
  return kOk;
}

SearchOptions search_options(std::optional<std::size_t> limit, int jobs, std::optional<int> budget, bool quiet) {
  SearchOptions o;
  o.limit = limit;
  o.jobs = jobs;
  if (budget) o.budget = std::chrono::seconds(*budget);
  if (!quiet) o.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
  return o;
}

template <typename G>
int finish_search(json r, const SearchResult<G>& res, const std::string& out_dir, const std::string& stem) {
  r["count"] = res.graphs.size();
  r["exhaustive"] = res.exhaustive;
  r["nodes"] = res.nodes;
  auto files = json::array();
  auto conn = json::array();
  for (std::size_t i = 0; i < res.graphs.size(); ++i) {
    if constexpr (std::is_same_v<G, Graph>) conn.push_back(vertex_connectivity(res.graphs[i]));
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      const auto path = (std::filesystem::path(out_dir) / (stem + "-" + std::to_string(i) + ".el")).string();
      write_file(path, write_edge_list(res.graphs[i]));
      files.push_back(path);
    }
  }
  if constexpr (std::is_same_v<G, Graph>) r["connectivity"] = conn;
  r["files"] = files;
  if (!res.graphs.empty()) r["first"] = write_edge_list(res.graphs.front());
  emit(r);
  return res.graphs.empty() ? kNegative : kOk;
}

int cmd_probe_deletion(const std::string& file) {
  const auto g = load_graph(file);
  const auto p = probe_vertex_deletion(g);
  json r = report("probe-deletion", basis("vertex-deletion problem for orders 4k+1",
                                          "after deleting a degree-2k vertex, (a) types differ from the "
                                          "complement's or (b) the graph is not vertex-oblique"));
  r["k"] = p.k;
  auto rows = json::array();
  for (const auto& row : p.rows)
    rows.push_back({{"vertex", row.vertex}, {"vertex_oblique", row.vertex_oblique}, {"equal_types", row.equal_types}});
  r["rows"] = rows;
  r["every_row_a_or_b"] = p.every_row_a_or_b;
  r["every_row_a"] = p.every_row_a;
  r["every_row_b"] = p.every_row_b;
  emit(r);
  return kOk;
}

int cmd_connectivity(const std::string& file) {
  json r = report("connectivity", basis("vertex connectivity", "minimum vertex cut via unit-capacity max flow"));
  r["connectivity"] = vertex_connectivity(load_graph(file));
  emit(r);
  return kOk;
}

int cmd_regen_fixtures(const std::string& dir, bool write, int jobs) {
  json r = report("regen-fixtures", basis("pinned fixtures", "first canonical search result for each base order"));
  auto entries = json::array();
  bool all_match = true;

  auto check = [&](const std::string& name, const std::string& derived, const std::string& pinned) {
    const auto path = (std::filesystem::path(dir) / name).string();
    std::string on_disk;
    bool file_ok = false;
    try {
      on_disk = read_file(path);
      file_ok = true;
    } catch (const FormatError&) {
    }
    const bool match_pinned = derived == pinned;
    const bool match_file = file_ok && on_disk == derived;
    if (write && !match_file) write_file(path, derived);
    entries.push_back({{"name", name},
                       {"path", path},
                       {"matches_pinned", match_pinned},
                       {"matches_file", match_file},
                       {"written", write && !match_file}});
    if (!match_pinned || (!match_file && !write)) all_match = false;
  };

  const auto opts = search_options(std::nullopt, jobs, std::nullopt, true);
  const auto dvo = enumerate_dvo(8, opts);
  check("base8.el", dvo.graphs.empty() ? "" : write_edge_list(dvo.graphs.front()), write_edge_list(base8()));
  for (int k : {3, 4}) {
    const auto semi = search_semi_dvo(k, opts);
    check("semi" + std::to_string(4 * k) + ".el", semi.graphs.empty() ? "" : write_edge_list(semi.graphs.front()),
          write_edge_list(semi_base(k)));
  }
  r["fixtures"] = entries;
  r["all_match"] = all_match;
  emit(r);
  return all_match ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dually vertex-oblique graph toolkit"};
  app.require_subcommand(1);
  int result = kOk;
  std::function<int()> action;

  int n = 0;
  bool split = false;
  std::string out, file, file2, property, degseq, out_dir, fixtures_dir = OBLIQUE_FIXTURES_DIR;
  bool self_comp = false, write = false, quiet = false;
  std::optional<std::size_t> limit;
  std::optional<int> budget;
  int jobs = 1, k = 0;

  auto* construct_cmd = app.add_subcommand("construct", "Build a dually vertex-oblique graph of order N");
  construct_cmd->add_option("--n", n, "Order")->required();
  construct_cmd->add_flag("--split", split, "Produce a split graph");
  construct_cmd->add_option("--out", out, "Output file (default stdout)");
  construct_cmd->callback([&] { action = [&] { return cmd_construct(n, split, out); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Check a property and print a JSON report");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"vo", "svo", "dvo", "semi", "split", "lemma"}));
  verify_cmd->callback([&] { action = [&] { return cmd_verify(file, property); }; });

  auto* types_cmd = app.add_subcommand("types", "List the type sequence");
  types_cmd->add_option("file", file)->required();
  types_cmd->callback([&] { action = [&] { return cmd_types(file); }; });

  auto* complement_cmd = app.add_subcommand("complement", "Write the complement");
  complement_cmd->add_option("file", file)->required();
  complement_cmd->add_option("--out", out);
  complement_cmd->callback([&] { action = [&] { return cmd_complement(file, out); }; });

  auto* companion_cmd = app.add_subcommand("companion", "Same type sequence, isomorphic to neither G nor its complement");
  companion_cmd->add_option("file", file)->required();
  companion_cmd->add_option("--out", out);
  companion_cmd->callback([&] { action = [&] { return cmd_companion(file, out); }; });

  auto* path_cmd = app.add_subcommand("switch-path", "Restricted switches turning H into G");
  path_cmd->add_option("g_file", file)->required();
  path_cmd->add_option("h_file", file2)->required();
  path_cmd->callback([&] { action = [&] { return cmd_switch_path(file, file2); }; });

  auto* unique_cmd = app.add_subcommand("unique-check", "Sufficient test for a unique type sequence");
  unique_cmd->add_option("file", file)->required();
  unique_cmd->callback([&] { action = [&] { return cmd_unique_check(file); }; });

  auto* degseq_cmd = app.add_subcommand("check-degseq", "Graphicality of a degree sequence");
  degseq_cmd->add_option("degrees", degseq, "Space-separated degrees")->required();
  degseq_cmd->add_flag("--self-comp", self_comp, "Also check the self-complementary conditions");
  degseq_cmd->callback([&] { action = [&] { return cmd_check_degseq(degseq, self_comp); }; });

  auto* checkt_cmd = app.add_subcommand("check-typeseq", "Recognize a type sequence");
  checkt_cmd->add_option("file", file)->required();
  checkt_cmd->callback([&] { action = [&] { return cmd_check_typeseq(file); }; });

  auto* realize_cmd = app.add_subcommand("realize-typeseq", "Realize a type sequence");
  realize_cmd->add_option("file", file)->required();
  realize_cmd->add_option("--out", out);
  realize_cmd->callback([&] { action = [&] { return cmd_realize_typeseq(file, out); }; });

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--limit", limit, "Stop after this many results");
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", budget, "Time budget in seconds")->check(CLI::PositiveNumber);
    cmd->add_option("--out-dir", out_dir, "Write each result as an edge-list file");
    cmd->add_flag("--quiet", quiet, "No progress on stderr");
  };
  auto* sdvo_cmd = app.add_subcommand("search-dvo", "Enumerate dually vertex-oblique graphs of order N");
  sdvo_cmd->add_option("--n", n)->required();
  add_search_flags(sdvo_cmd);
  sdvo_cmd->callback([&] {
    action = [&] {
      json r = report("search-dvo", basis("existence threshold", "no dually vertex-oblique graph of order 2 to 7"));
      r["n"] = n;
      return finish_search(r, enumerate_dvo(n, search_options(limit, jobs, budget, quiet)), out_dir,
                           "dvo" + std::to_string(n));
    };
  });
  auto* ssemi_cmd = app.add_subcommand("search-semi", "Search dually semi-vertex-oblique bipartite graphs");
  ssemi_cmd->add_option("--k", k)->required();
  add_search_flags(ssemi_cmd);
  ssemi_cmd->callback([&] {
    action = [&] {
      json r = report("search-semi", basis("semi-oblique conditions (i)-(iii)", "bipartite base graphs for split constructions"));
      r["k"] = k;
      return finish_search(r, search_semi_dvo(k, search_options(limit, jobs, budget, quiet)), out_dir,
                           "semi" + std::to_string(4 * k));
    };
  });

  auto* probe_cmd = app.add_subcommand("probe-deletion", "Delete each degree-2k vertex of a 4k+1 graph");
  probe_cmd->add_option("file", file)->required();
  probe_cmd->callback([&] { action = [&] { return cmd_probe_deletion(file); }; });

  auto* conn_cmd = app.add_subcommand("connectivity", "Vertex connectivity");
  conn_cmd->add_option("file", file)->required();
  conn_cmd->callback([&] { action = [&] { return cmd_connectivity(file); }; });

  auto* regen_cmd = app.add_subcommand("regen-fixtures", "Re-derive the pinned fixtures and compare");
  regen_cmd->add_option("--dir", fixtures_dir, "Fixture directory");
  regen_cmd->add_flag("--write", write, "Rewrite fixture files that differ");
  regen_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  regen_cmd->callback([&] { action = [&] { return cmd_regen_fixtures(fixtures_dir, write, jobs); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    result = action();
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return result;
}
