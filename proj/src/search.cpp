#include "oblique/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <thread>

#include "oblique/oblique.hpp"
#include "oblique/sequences.hpp"
#include "oblique/switching.hpp"

namespace oblique {

namespace {

using Clock = std::chrono::steady_clock;

// A vertex type over degree values < 16 packed as 4-bit counts per value.
using TypeKey = std::uint64_t;

TypeKey add_to_key(TypeKey key, int degree) { return key + (TypeKey{1} << (4 * degree)); }
int key_count(TypeKey key, int degree) { return static_cast<int>((key >> (4 * degree)) & 0xF); }

// Shared stop condition for a (possibly parallel) search.
class StopControl {
 public:
  explicit StopControl(const SearchOptions& options)
      : limit_(options.limit), start_(Clock::now()) {
    if (options.budget) deadline_ = start_ + *options.budget;
  }

  bool stopped() const { return stop_.load(std::memory_order_relaxed); }

  // Called periodically from workers.
  void poll() {
    if (deadline_ && Clock::now() > *deadline_) stop_ = true;
  }

  void found() {
    if (limit_ && found_.fetch_add(1) + 1 >= *limit_) stop_ = true;
  }

 private:
  std::optional<std::size_t> limit_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<bool> stop_{false};
  std::atomic<std::size_t> found_{0};
};

// Runs task(i) for i in [0, count) on `jobs` threads, pulling indices in order.
void run_tasks(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

bool degree_sequence_passes_lemma(const std::vector<int>& r_by_degree, int n) {
  int distinct = 0;
  for (int d = 0; d < n; ++d) {
    const int rd = r_by_degree[d];
    if (rd == 0) continue;
    ++distinct;
    if (2 * d == n - 1) {
      if (rd % 4 != 1) return false;
    } else {
      if (rd % 2 != 0) return false;
      if (rd >= 2 * d) return false;
    }
  }
  return distinct >= 3;
}

// ---------------------------------------------------------------------------
// Dually vertex-oblique graph search over symmetric adjacency matrices.
//
// Vertices are labeled in non-increasing degree order. Row i picks the
// neighbours of i among later vertices. Later vertices that share a degree and
// their adjacency to rows < i are interchangeable, so only prefixes of each
// such class are chosen. When a row completes, the type of its vertex is
// known; it must be new, and the type its dual partner would need must still
// be realizable by some unfinished vertex of the complementary degree.
class DvoSearch {
 public:
  DvoSearch(std::vector<int> degrees, StopControl& stop)
      : n_(static_cast<int>(degrees.size())), deg_(std::move(degrees)), stop_(stop) {
    r_.assign(static_cast<std::size_t>(n_), 0);
    for (int d : deg_) ++r_[d];
  }

  struct State {
    std::vector<std::uint32_t> adj;
    std::vector<int> rem;
    std::vector<TypeKey> type;
  };

  State initial() const {
    State s;
    s.adj.assign(static_cast<std::size_t>(n_), 0);
    s.rem = deg_;
    s.type.assign(static_cast<std::size_t>(n_), 0);
    return s;
  }

  // All states after row 0, used to split the work.
  std::vector<State> first_rows() {
    std::vector<State> out;
    State s = initial();
    for_each_row_choice(s, 0, [&](State& next) { out.push_back(next); });
    return out;
  }

  void run(State& s, int row, std::vector<Graph>& found) {
    if ((++nodes_ & 0xFFF) == 0) stop_.poll();
    if (stop_.stopped()) return;
    if (row == n_) {
      Graph g(n_);
      for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
          if ((s.adj[u] >> v) & 1U) g.add_edge(u, v);
      if (is_dually_vertex_oblique(g)) {
        found.push_back(canonical_oblique_form(g));
        stop_.found();
      }
      return;
    }
    for_each_row_choice(s, row, [&](State& next) { run(next, row + 1, found); });
  }

  std::size_t nodes() const { return nodes_; }

 private:
  template <typename F>
  void for_each_row_choice(State& s, int row, F&& visit) {
    // Classes of interchangeable candidates, each sorted by label.
    std::vector<std::vector<int>> classes;
    const std::uint32_t earlier = (std::uint32_t{1} << row) - 1;
    for (int j = row + 1; j < n_; ++j) {
      if (s.rem[j] == 0) continue;
      bool placed = false;
      for (auto& c : classes) {
        const int rep = c.front();
        if (deg_[rep] == deg_[j] && (s.adj[rep] & earlier) == (s.adj[j] & earlier)) {
          c.push_back(j);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({j});
    }
    choose(s, row, classes, 0, s.rem[row], visit);
  }

  template <typename F>
  void choose(State& s, int row, const std::vector<std::vector<int>>& classes, std::size_t ci,
              int need, F& visit) {
    if (need == 0) {
      finish_row(s, row, visit);
      return;
    }
    if (ci == classes.size()) return;
    int available = 0;
    for (std::size_t k = ci; k < classes.size(); ++k) available += static_cast<int>(classes[k].size());
    if (available < need) return;

    const auto& cls = classes[ci];
    const int most = std::min<int>(need, static_cast<int>(cls.size()));
    // Take the first `take` members of the class.
    for (int take = most; take >= 0; --take) {
      for (int t = 0; t < take; ++t) {
        const int j = cls[t];
        s.adj[row] |= std::uint32_t{1} << j;
        s.adj[j] |= std::uint32_t{1} << row;
        --s.rem[j];
      }
      choose(s, row, classes, ci + 1, need - take, visit);
      for (int t = 0; t < take; ++t) {
        const int j = cls[t];
        s.adj[row] &= ~(std::uint32_t{1} << j);
        s.adj[j] &= ~(std::uint32_t{1} << row);
        ++s.rem[j];
      }
    }
  }

  template <typename F>
  void finish_row(State& s, int row, F& visit) {
    const int saved_rem = s.rem[row];
    s.rem[row] = 0;

    // Later vertices must still be able to reach their degree.
    int open = 0;
    for (int j = row + 1; j < n_; ++j) open += s.rem[j] > 0;
    bool ok = true;
    for (int j = row + 1; j < n_ && ok; ++j)
      if (s.rem[j] > 0 && s.rem[j] > open - 1) ok = false;

    if (ok) {
      TypeKey key = 0;
      for (int w = 0; w < n_; ++w)
        if ((s.adj[row] >> w) & 1U) key = add_to_key(key, deg_[w]);
      for (int u = 0; u < row && ok; ++u)
        if (s.type[u] == key) ok = false;
      if (ok) {
        s.type[row] = key;
        ok = partners_feasible(s, row);
        if (ok) visit(s);
        s.type[row] = 0;
      }
    }
    s.rem[row] = saved_rem;
  }

  // Type that the dual partner of a vertex with degree d and type `key` needs.
  std::optional<TypeKey> partner_type(int d, TypeKey key) const {
    TypeKey out = 0;
    for (int f = 0; f < n_; ++f) {
      const int need = r_[f] - (f == n_ - 1 - d ? 1 : 0) - key_count(key, n_ - 1 - f);
      if (need < 0) return std::nullopt;
      out += static_cast<TypeKey>(need) << (4 * f);
    }
    return out;
  }

  bool partners_feasible(const State& s, int last_row) const {
    for (int u = 0; u <= last_row; ++u) {
      const int d = deg_[u];
      auto want = partner_type(d, s.type[u]);
      if (!want) return false;
      const int pd = n_ - 1 - d;
      bool matched = false;
      for (int w = 0; w <= last_row && !matched; ++w)
        matched = deg_[w] == pd && s.type[w] == *want;
      if (matched) continue;
      bool possible = false;
      for (int w = last_row + 1; w < n_ && !possible; ++w)
        possible = deg_[w] == pd && consistent(s, w, last_row, *want);
      if (!possible) return false;
    }
    return true;
  }

  // Whether unfinished vertex w, whose adjacency to rows 0..last_row is fixed,
  // can still end up with type `want`.
  bool consistent(const State& s, int w, int last_row, TypeKey want) const {
    std::array<int, 16> nb{};
    std::array<int, 16> non{};
    for (int u = 0; u <= last_row; ++u) {
      if ((s.adj[w] >> u) & 1U) {
        ++nb[deg_[u]];
      } else {
        ++non[deg_[u]];
      }
    }
    for (int f = 0; f < n_; ++f) {
      const int want_nb = key_count(want, f);
      const int want_non = r_[f] - (f == deg_[w] ? 1 : 0) - want_nb;
      if (nb[f] > want_nb || non[f] > want_non) return false;
    }
    return true;
  }

  int n_;
  std::vector<int> deg_;
  std::vector<int> r_;
  StopControl& stop_;
  std::size_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Dually semi-vertex-oblique search over 2k x 2k biadjacency matrices.
//
// Right degrees are fixed up front (columns sorted by degree), so the type of
// a row is known as soon as the row is chosen. Condition (iii) pairs every row
// type c with the row type phi(c)_e = m_e - c_{2k-e}; rows are placed in such
// pairs, pairs in strictly decreasing key order, which makes the row order of
// each solution unique. Columns sharing a degree and their history are
// interchangeable and chosen as prefixes.
class SemiSearch {
 public:
  SemiSearch(int k, std::vector<int> column_degrees, StopControl& stop)
      : k_(k), size_(2 * k), coldeg_(std::move(column_degrees)), stop_(stop) {
    m_.assign(static_cast<std::size_t>(size_ + 1), 0);
    for (int e : coldeg_) ++m_[e];
  }

  struct State {
    std::vector<std::uint32_t> rows;       // chosen column sets
    std::vector<std::uint32_t> history;    // per column: rows adjacent so far
    std::vector<int> cap;                  // per column: remaining degree
    std::vector<int> quota;                // per degree: rows still to place
  };

  State initial() const {
    State s;
    s.history.assign(static_cast<std::size_t>(size_), 0);
    s.cap = coldeg_;
    s.quota = m_;
    return s;
  }

  void run(State& s, TypeKey bound, std::vector<BipartiteGraph>& found) {
    if ((++nodes_ & 0xFFF) == 0) stop_.poll();
    if (stop_.stopped()) return;
    if (static_cast<int>(s.rows.size()) == size_) {
      if (std::any_of(s.cap.begin(), s.cap.end(), [](int c) { return c != 0; })) return;
      BipartiteGraph b(size_, size_);
      for (int l = 0; l < size_; ++l)
        for (int r = 0; r < size_; ++r)
          if ((s.rows[l] >> r) & 1U) b.add_edge(l, r);
      if (is_dually_semi_vertex_oblique(b)) {
        found.push_back(canonical_semi_form(b));
        stop_.found();
      }
      return;
    }
    // First row of a pair: any type below the bound that represents its pair.
    for_each_row(s, std::nullopt, [&](State& after_a, TypeKey a) {
      const TypeKey b = phi(a);
      if (a < b || a >= bound) return;
      const int da = popcount_key(a);
      const int db = size_ - da;
      if (a == b) {
        if (after_a.quota[da] < 0) return;
        run(after_a, a, found);
        return;
      }
      if (after_a.quota[db] <= 0) return;
      for_each_row(after_a, b, [&](State& after_b, TypeKey) { run(after_b, a, found); });
    });
  }

  /// Left-degree multisets for which enough distinct row types exist.
  bool enough_types() const {
    for (int d = 1; d < size_; ++d) {
      if (m_[d] == 0) continue;
      // Count vectors c with sum d and c_e <= m_e.
      std::vector<long> ways(static_cast<std::size_t>(d + 1), 0);
      ways[0] = 1;
      for (int e = 1; e < size_; ++e) {
        std::vector<long> next(ways.size(), 0);
        for (int s = 0; s <= d; ++s)
          for (int c = 0; c <= m_[e] && s + c <= d; ++c) next[s + c] += ways[s];
        ways = std::move(next);
      }
      if (ways[d] < m_[d]) return false;
    }
    return true;
  }

  std::size_t nodes() const { return nodes_; }

  TypeKey phi(TypeKey c) const {
    TypeKey out = 0;
    for (int e = 1; e < size_; ++e) {
      const int v = m_[e] - key_count(c, size_ - e);
      out += static_cast<TypeKey>(v) << (4 * e);
    }
    return out;
  }

 private:
  static int popcount_key(TypeKey key) {
    int total = 0;
    for (int e = 0; e < 16; ++e) total += key_count(key, e);
    return total;
  }

  // Enumerates rows (prefix-canonical column choices) of any degree with
  // remaining quota, or exactly of type `want` when given.
  template <typename F>
  void for_each_row(State& s, std::optional<TypeKey> want, F&& visit) {
    const int row = static_cast<int>(s.rows.size());
    std::vector<std::vector<int>> classes;
    for (int j = 0; j < size_; ++j) {
      if (s.cap[j] == 0) continue;
      bool placed = false;
      for (auto& c : classes) {
        if (coldeg_[c.front()] == coldeg_[j] && s.history[c.front()] == s.history[j]) {
          c.push_back(j);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({j});
    }
    std::vector<int> per_degree(static_cast<std::size_t>(size_ + 1), 0);
    if (want) {
      for (int e = 0; e <= size_; ++e) per_degree[e] = key_count(*want, e);
    }
    std::uint32_t chosen = 0;
    TypeKey key = 0;
    pick(s, row, classes, 0, chosen, key, want.has_value(), per_degree, visit);
  }

  template <typename F>
  void pick(State& s, int row, const std::vector<std::vector<int>>& classes, std::size_t ci,
            std::uint32_t chosen, TypeKey key, bool exact, std::vector<int>& per_degree,
            F& visit) {
    if (ci == classes.size()) {
      if (exact && std::any_of(per_degree.begin(), per_degree.end(), [](int x) { return x != 0; }))
        return;
      const int d = std::popcount(chosen);
      if (d < 1 || d >= size_ || s.quota[d] == 0) return;
      place(s, chosen, d, key, visit);
      return;
    }
    const auto& cls = classes[ci];
    const int e = coldeg_[cls.front()];
    int most = static_cast<int>(cls.size());
    if (exact) most = std::min(most, per_degree[e]);
    for (int take = most; take >= 0; --take) {
      std::uint32_t bits = chosen;
      TypeKey k = key;
      for (int t = 0; t < take; ++t) {
        bits |= std::uint32_t{1} << cls[t];
        k = add_to_key(k, e);
      }
      if (exact) per_degree[e] -= take;
      pick(s, row, classes, ci + 1, bits, k, exact, per_degree, visit);
      if (exact) per_degree[e] += take;
    }
  }

  template <typename F>
  void place(State& s, std::uint32_t chosen, int d, TypeKey key, F& visit) {
    const int row = static_cast<int>(s.rows.size());
    const int rows_left_after = size_ - row - 1;
    for (int j = 0; j < size_; ++j) {
      const int cap_after = s.cap[j] - static_cast<int>((chosen >> j) & 1U);
      if (cap_after > rows_left_after) return;
    }
    // Finished columns must have pairwise distinct types.
    s.rows.push_back(chosen);
    --s.quota[d];
    for (int j = 0; j < size_; ++j) {
      if ((chosen >> j) & 1U) {
        --s.cap[j];
        s.history[j] |= std::uint32_t{1} << row;
      }
    }
    if (finished_columns_distinct(s)) visit(s, key);
    for (int j = 0; j < size_; ++j) {
      if ((chosen >> j) & 1U) {
        ++s.cap[j];
        s.history[j] &= ~(std::uint32_t{1} << row);
      }
    }
    ++s.quota[d];
    s.rows.pop_back();
  }

  bool finished_columns_distinct(const State& s) const {
    std::vector<TypeKey> done;
    for (int j = 0; j < size_; ++j) {
      if (s.cap[j] != 0) continue;
      TypeKey key = 0;
      for (std::size_t l = 0; l < s.rows.size(); ++l)
        if ((s.rows[l] >> j) & 1U) key = add_to_key(key, std::popcount(s.rows[l]));
      if (std::find(done.begin(), done.end(), key) != done.end()) return false;
      done.push_back(key);
    }
    return true;
  }

  int k_;
  int size_;
  std::vector<int> coldeg_;
  std::vector<int> m_;
  StopControl& stop_;
  std::size_t nodes_ = 0;
};

// Symmetric multisets of size 2k over [1, 2k-1], as non-increasing lists.
std::vector<std::vector<int>> semi_degree_lists(int k) {
  const int size = 2 * k;
  std::vector<std::vector<int>> out;
  // Choose counts for degrees 1..k-1 (mirrored on k+1..2k-1); the rest have degree k.
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int d, int used) {
    if (d == k) {
      const int middle = size - 2 * used;
      std::vector<int> list;
      for (int e = size - 1; e > k; --e)
        for (int c = 0; c < counts[size - e]; ++c) list.push_back(e);
      for (int c = 0; c < middle; ++c) list.push_back(k);
      for (int e = k - 1; e >= 1; --e)
        for (int c = 0; c < counts[e]; ++c) list.push_back(e);
      out.push_back(std::move(list));
      return;
    }
    for (int c = 0; 2 * (used + c) <= size; ++c) {
      counts[d] = c;
      rec(d + 1, used + c);
    }
    counts[d] = 0;
  };
  rec(1, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

template <typename G>
void sort_unique(std::vector<G>& graphs) {
  std::sort(graphs.begin(), graphs.end(),
            [](const G& a, const G& b) { return a.edges() < b.edges(); });
  graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
}

}  // namespace

Graph canonical_oblique_form(const Graph& g) {
  const int n = g.order();
  const auto types = vertex_types(g);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return types[a] > types[b]; });
  for (int i = 0; i + 1 < n; ++i) {
    if (types[order[i]] == types[order[i + 1]])
      throw ContractError("canonical_oblique_form requires pairwise distinct vertex types");
  }
  std::vector<Vertex> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(rank[u], rank[v]);
  return out;
}

BipartiteGraph canonical_semi_form(const BipartiteGraph& b) {
  auto rank_of = [](const std::vector<VertexType>& types) {
    const int n = static_cast<int>(types.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int c) { return types[a] > types[c]; });
    for (int i = 0; i + 1 < n; ++i) {
      if (types[order[i]] == types[order[i + 1]])
        throw ContractError("canonical_semi_form requires distinct types within each part");
    }
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    return rank;
  };
  const auto lr = rank_of(left_types(b));
  const auto rr = rank_of(right_types(b));
  BipartiteGraph out(b.left_size(), b.right_size());
  for (auto [l, r] : b.edges()) out.add_edge(lr[l], rr[r]);
  return out;
}

std::vector<DegreeSequence> dvo_degree_sequences(int n) {
  std::vector<DegreeSequence> out;
  if (n == 1) return {DegreeSequence{{0}}};
  if (n < 2 || (n % 4 != 0 && n % 4 != 1)) return out;
  const int low_max = (n - 2) / 2;  // largest degree strictly below (n-1)/2
  std::vector<int> r(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int d, int used) {
    if (d > low_max) {
      const int middle = n - 2 * used;
      if (middle < 0 || (n % 2 == 0 && middle != 0)) return;
      if (n % 2 == 1) r[(n - 1) / 2] = middle;
      if (degree_sequence_passes_lemma(r, n)) {
        DegreeSequence ds;
        for (int e = n - 1; e >= 0; --e)
          for (int c = 0; c < r[e]; ++c) ds.degrees.push_back(e);
        if (erdos_gallai(ds)) out.push_back(std::move(ds));
      }
      if (n % 2 == 1) r[(n - 1) / 2] = 0;
      return;
    }
    for (int c = 0; 2 * (used + c) <= n; ++c) {
      r[d] = c;
      r[n - 1 - d] = c;
      rec(d + 1, used + c);
    }
    r[d] = 0;
    r[n - 1 - d] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(),
            [](const DegreeSequence& a, const DegreeSequence& b) { return a.degrees > b.degrees; });
  return out;
}

SearchResult<Graph> enumerate_dvo(int n, const SearchOptions& options) {
  if (n < 1 || n > 12) {
    throw ContractError("enumerate_dvo supports 1 <= n <= 12, got " + std::to_string(n));
  }
  StopControl stop(options);
  SearchResult<Graph> result;
  const auto sequences = dvo_degree_sequences(n);
  for (std::size_t si = 0; si < sequences.size(); ++si) {
    const auto& ds = sequences[si];
    if (options.progress) {
      std::string msg = "degree sequence " + std::to_string(si + 1) + "/" +
                        std::to_string(sequences.size()) + ":";
      for (int d : ds.degrees) msg += " " + std::to_string(d);
      options.progress(msg);
    }
    DvoSearch root(ds.degrees, stop);
    auto starts = root.first_rows();
    std::vector<std::vector<Graph>> per_task(starts.size());
    std::vector<std::size_t> nodes(starts.size(), 0);
    run_tasks(starts.size(), options.jobs, [&](std::size_t i) {
      DvoSearch search(ds.degrees, stop);
      search.run(starts[i], 1, per_task[i]);
      nodes[i] = search.nodes();
    });
    for (std::size_t i = 0; i < starts.size(); ++i) {
      result.graphs.insert(result.graphs.end(), per_task[i].begin(), per_task[i].end());
      result.nodes += nodes[i];
    }
    if (stop.stopped()) break;
  }
  result.exhaustive = !stop.stopped();
  sort_unique(result.graphs);
  if (options.limit && result.graphs.size() > *options.limit) {
    result.graphs.resize(*options.limit);
    result.exhaustive = false;
  }
  return result;
}

SearchResult<BipartiteGraph> search_semi_dvo(int k, const SearchOptions& options) {
  if (k != 3 && k != 4) {
    throw ContractError("search_semi_dvo supports k in {3, 4}, got " + std::to_string(k));
  }
  StopControl stop(options);
  SearchResult<BipartiteGraph> result;
  const auto lists = semi_degree_lists(k);
  std::vector<std::vector<int>> feasible;
  for (const auto& list : lists) {
    SemiSearch probe(k, list, stop);
    if (probe.enough_types()) feasible.push_back(list);
  }
  std::vector<std::vector<BipartiteGraph>> per_task(feasible.size());
  std::vector<std::size_t> nodes(feasible.size(), 0);
  std::mutex progress_mutex;
  run_tasks(feasible.size(), options.jobs, [&](std::size_t i) {
    SemiSearch search(k, feasible[i], stop);
    auto s = search.initial();
    search.run(s, std::numeric_limits<TypeKey>::max(), per_task[i]);
    nodes[i] = search.nodes();
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      std::string msg = "degree list";
      for (int d : feasible[i]) msg += " " + std::to_string(d);
      msg += ": " + std::to_string(per_task[i].size()) + " found, " +
             std::to_string(nodes[i]) + " nodes";
      options.progress(msg);
    }
  });
  for (std::size_t i = 0; i < feasible.size(); ++i) {
    result.graphs.insert(result.graphs.end(), per_task[i].begin(), per_task[i].end());
    result.nodes += nodes[i];
  }
  result.exhaustive = !stop.stopped();
  sort_unique(result.graphs);
  if (options.limit && result.graphs.size() > *options.limit) {
    result.graphs.resize(*options.limit);
    result.exhaustive = false;
  }
  return result;
}

std::vector<Graph> labeled_realizations(const TypeSequence& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(t.types[i].length());
  if (n > 16) throw ContractError("labeled_realizations is limited to n <= 16");
  for (int i = 0; i < n; ++i)
    if (deg[i] > n - 1) return {};

  // Types still unclaimed, per degree.
  std::vector<std::vector<VertexType>> open(static_cast<std::size_t>(n));
  for (const auto& type : t.types) open[type.length()].push_back(type);

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  std::vector<int> rem = deg;
  std::vector<Graph> out;

  auto type_of = [&](int v) {
    std::vector<int> entries;
    for (int w = 0; w < n; ++w)
      if ((adj[v] >> w) & 1U) entries.push_back(deg[w]);
    return make_type(std::move(entries));
  };

  std::function<void(int, int)> row_step;
  std::function<void(int)> next_row = [&](int row) {
    if (row == n) {
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if ((adj[u] >> v) & 1U) g.add_edge(u, v);
      out.push_back(std::move(g));
      return;
    }
    row_step(row, row + 1);
  };
  row_step = [&](int row, int j) {
    if (rem[row] == 0) {
      auto type = type_of(row);
      auto& pool = open[deg[row]];
      auto it = std::find(pool.begin(), pool.end(), type);
      if (it == pool.end()) return;
      const auto saved = *it;
      pool.erase(it);
      next_row(row + 1);
      pool.push_back(saved);
      return;
    }
    if (j >= n || n - j < rem[row]) return;
    if (rem[j] > 0) {
      adj[row] |= std::uint32_t{1} << j;
      adj[j] |= std::uint32_t{1} << row;
      --rem[row];
      --rem[j];
      row_step(row, j + 1);
      ++rem[row];
      ++rem[j];
      adj[row] &= ~(std::uint32_t{1} << j);
      adj[j] &= ~(std::uint32_t{1} << row);
    }
    row_step(row, j + 1);
  };
  next_row(0);
  return out;
}

std::vector<Graph> realization_classes(const TypeSequence& t) {
  std::vector<Graph> reps;
  for (auto& g : labeled_realizations(t)) {
    bool seen = std::any_of(reps.begin(), reps.end(),
                            [&](const Graph& r) { return are_isomorphic(r, g); });
    if (!seen) reps.push_back(std::move(g));
  }
  return reps;
}

DeletionProbe probe_vertex_deletion(const Graph& g) {
  const int n = g.order();
  if (n % 4 != 1) {
    throw ContractError("probe_vertex_deletion requires n = 4k+1, got n = " + std::to_string(n));
  }
  if (!is_dually_vertex_oblique(g)) {
    throw ContractError("probe_vertex_deletion requires a dually vertex-oblique graph");
  }
  DeletionProbe probe;
  probe.k = (n - 1) / 4;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2 * probe.k) continue;
    std::vector<Vertex> rest;
    for (Vertex w = 0; w < n; ++w)
      if (w != v) rest.push_back(w);
    const Graph h = induced_subgraph(g, rest).graph;
    DeletionRow row;
    row.vertex = v;
    row.vertex_oblique = is_vertex_oblique(h);
    auto types = vertex_types(h);
    auto comp = complement_vertex_types(h);
    std::sort(types.begin(), types.end());
    std::sort(comp.begin(), comp.end());
    row.equal_types = types == comp;
    probe.rows.push_back(row);
  }
  auto all = [&](auto pred) { return std::all_of(probe.rows.begin(), probe.rows.end(), pred); };
  probe.every_row_a = all([](const DeletionRow& r) { return !r.equal_types; });
  probe.every_row_b = all([](const DeletionRow& r) { return !r.vertex_oblique; });
  probe.every_row_a_or_b = all([](const DeletionRow& r) { return !r.equal_types || !r.vertex_oblique; });
  return probe;
}

namespace {

// Unit-capacity max flow on the vertex-split network, stopping at `cap` paths.
int vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t, int cap) {
  const int n = g.order();
  // Node 2v is v_in, 2v+1 is v_out.
  const int nodes = 2 * n;
  struct Arc {
    int to;
    int residual;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(nodes));
  auto add = [&](int a, int b, int c) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, c});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int inf = n + 1;
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
  for (auto [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, inf);
    add(2 * v + 1, 2 * u, inf);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  while (flow < cap) {
    std::vector<int> via(static_cast<std::size_t>(nodes), -1);
    std::queue<int> q;
    q.push(source);
    via[source] = -2;
    while (!q.empty() && via[sink] == -1) {
      const int x = q.front();
      q.pop();
      for (int a : out[x]) {
        if (arcs[a].residual > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          q.push(arcs[a].to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int x = sink; x != source;) {
      const int a = via[x];
      arcs[a].residual -= 1;
      arcs[a ^ 1].residual += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, vertex_disjoint_paths(g, s, t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

}  // namespace oblique
