#include "oblique/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace oblique {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  if (text.find('\r') != std::string_view::npos) throw FormatError("CR characters are not allowed; use LF line endings");
  std::vector<Line> lines;
  int number = 1;
  while (!text.empty()) {
    const auto end = text.find('\n');
    if (end == std::string_view::npos) {
      lines.push_back({number, text});
      break;
    }
    lines.push_back({number++, text.substr(0, end)});
    text.remove_prefix(end + 1);
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::vector<int> parse_ints(const Line& line) {
  std::vector<int> out;
  std::string_view s = line.text;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || ptr == s.data() + i) fail(line.number, "expected an integer in '" + std::string(s) + "'");
    const auto next = static_cast<std::size_t>(ptr - s.data());
    if (next < s.size() && s[next] != ' ' && s[next] != '\t')
      fail(line.number, "expected an integer in '" + std::string(s) + "'");
    out.push_back(value);
    i = next;
  }
  return out;
}

struct Body {
  Line header;
  std::vector<Line> rest;
};

Body split_header(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && !lines[i].text.empty() && lines[i].text.front() == '#') ++i;
  if (i == lines.size()) throw FormatError("missing header line");
  Body body{lines[i], {lines.begin() + static_cast<std::ptrdiff_t>(i) + 1, lines.end()}};
  return body;
}

// Reads exactly m pair lines, strictly increasing, within the given bounds.
std::vector<std::pair<int, int>> read_pairs(const Body& body, int m, int first_bound, int second_bound,
                                            bool ordered_pair) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m));
  for (const auto& line : body.rest) {
    auto v = parse_ints(line);
    if (v.size() != 2) fail(line.number, "expected two integers");
    if (v[0] < 0 || v[0] >= first_bound || v[1] < 0 || v[1] >= second_bound)
      fail(line.number, "vertex out of range");
    if (ordered_pair && v[0] >= v[1]) fail(line.number, "expected u < v");
    std::pair<int, int> e{v[0], v[1]};
    if (!out.empty() && !(out.back() < e)) fail(line.number, "edges must be sorted and distinct");
    out.push_back(e);
  }
  if (static_cast<int>(out.size()) != m)
    throw FormatError("header announces " + std::to_string(m) + " edges but " + std::to_string(out.size()) +
                      " lines follow");
  return out;
}

}  // namespace

std::string write_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string write_edge_list(const BipartiteGraph& b) {
  const auto edges = b.edges();
  std::string out = "bipartite " + std::to_string(b.left_size()) + " " + std::to_string(b.right_size()) +
                    " " + std::to_string(edges.size()) + "\n";
  for (auto [l, r] : edges) out += std::to_string(l) + " " + std::to_string(r) + "\n";
  return out;
}

Graph parse_edge_list(std::string_view text) {
  auto body = split_header(text);
  auto h = parse_ints(body.header);
  if (h.size() != 2) fail(body.header.number, "expected header 'n m'");
  const int n = h[0], m = h[1];
  if (n < 0 || m < 0) fail(body.header.number, "negative count");
  if (static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
    fail(body.header.number, "too many edges for " + std::to_string(n) + " vertices");
  return Graph::from_edges(n, read_pairs(body, m, n, n, true));
}

BipartiteGraph parse_bipartite_edge_list(std::string_view text) {
  auto body = split_header(text);
  constexpr std::string_view tag = "bipartite";
  if (body.header.text.substr(0, tag.size()) != tag) fail(body.header.number, "expected header 'bipartite l r m'");
  Line rest{body.header.number, body.header.text.substr(tag.size())};
  auto h = parse_ints(rest);
  if (h.size() != 3) fail(body.header.number, "expected header 'bipartite l r m'");
  const int l = h[0], r = h[1], m = h[2];
  if (l < 0 || r < 0 || m < 0) fail(body.header.number, "negative count");
  if (static_cast<long long>(m) > static_cast<long long>(l) * r)
    fail(body.header.number, "too many edges for the part sizes");
  return BipartiteGraph::from_edges(l, r, read_pairs(body, m, l, r, false));
}

std::variant<Graph, BipartiteGraph> parse_any_edge_list(std::string_view text) {
  auto body = split_header(text);
  if (body.header.text.rfind("bipartite", 0) == 0) return parse_bipartite_edge_list(text);
  return parse_edge_list(text);
}

TypeSequence parse_type_sequence(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<VertexType> types;
  for (const auto& line : lines) {
    auto v = parse_ints(line);
    if (!std::is_sorted(v.begin(), v.end(), std::greater<>()))
      fail(line.number, "type entries must be non-increasing");
    if (!v.empty() && v.back() < 0) fail(line.number, "negative type entry");
    types.push_back(VertexType{std::move(v)});
  }
  return make_type_sequence(std::move(types));
}

std::string write_type_sequence(const TypeSequence& t) {
  std::string out;
  for (const auto& type : t.types) {
    for (std::size_t i = 0; i < type.entries.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(type.entries[i]);
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << contents;
}

nlohmann::json to_json(const SwitchMove& m) { return nlohmann::json::array({m.v0, m.w0, m.v1, m.w1}); }

nlohmann::json to_json(const SwitchPath& path) {
  auto out = nlohmann::json::array();
  for (const auto& m : path) out.push_back(to_json(m));
  return out;
}

nlohmann::json to_json(const VertexType& t) { return t.entries; }

}  // namespace oblique
