#include "dhlrw/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "dhlrw/errors.hpp"

namespace dhlrw {

namespace {

// fixed mappings so that outputs agree across standard libraries
std::uint64_t below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

void validate(const GenSpec& s) {
  if (s.n < 1) throw InvalidArgument("n must be at least 1");
  if (s.pendant < 0 || s.true_twin < 0 || s.false_twin < 0) throw InvalidArgument("negative probability");
  if (std::abs(s.pendant + s.true_twin + s.false_twin - 1.0) > 1e-9)
    throw InvalidArgument("probabilities must sum to 1");
}

Graph gen_random_dh(const GenSpec& s) {
  validate(s);
  std::mt19937_64 rng(s.seed);
  const int n = s.n;
  std::vector<Row> adj(n, Row(n));
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(below(rng, v));
    double p = unit(rng);
    int op = p < s.pendant ? 0 : p < s.pendant + s.true_twin ? 1 : 2;
    if (op == 2 && adj[u].none()) op = 1;
    if (op != 0) {
      for (auto w = adj[u].find_first(); w != Row::npos; w = adj[u].find_next(w)) {
        adj[v].set(w);
        adj[w].set(v);
      }
    }
    if (op != 2) {
      adj[u].set(v);
      adj[v].set(u);
    }
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[below(rng, i + 1)]);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (auto w = adj[u].find_next(u); w != Row::npos; w = adj[u].find_next(w))
      g.add_edge(perm[u], perm[static_cast<int>(w)]);
  return g;
}

RankDecomposition rank_decomposition_width1(const Decomposition& d) {
  RankDecomposition rd;
  auto add_node = [&](Label l) {
    rd.adj.emplace_back();
    rd.leaf.push_back(l);
    return rd.size() - 1;
  };
  auto join = [&](int a, int b) {
    rd.adj[a].push_back(b);
    rd.adj[b].push_back(a);
  };
  std::vector<int> slot(d.vertex_capacity(), kNone);
  for (int b : d.live_bags()) {
    const auto& mem = d.bag(b).members;
    for (int m : mem) slot[m] = add_node(d.marked(m) ? kVirtual : d.vertex(m).label);
    const int s = static_cast<int>(mem.size());
    if (s == 2) join(slot[mem[0]], slot[mem[1]]);
    if (s < 3) continue;
    std::vector<int> spine;
    for (int j = 0; j < s - 2; ++j) {
      spine.push_back(add_node(kVirtual));
      if (j > 0) join(spine[j - 1], spine[j]);
    }
    join(spine[0], slot[mem[0]]);
    join(spine[0], slot[mem[1]]);
    for (int j = 2; j < s - 1; ++j) join(spine[j - 1], slot[mem[j]]);
    join(spine[s - 3], slot[mem[s - 1]]);
  }
  for (int v : d.live_vertices())
    if (d.marked(v) && v < d.vertex(v).partner) join(slot[v], slot[d.vertex(v).partner]);
  // suppress the degree-2 nodes left by marked edges
  std::vector<char> gone(rd.size(), 0);
  for (int x = 0; x < rd.size(); ++x) {
    if (rd.adj[x].size() != 2 || rd.leaf[x] != kVirtual) continue;
    int a = rd.adj[x][0], b = rd.adj[x][1];
    std::replace(rd.adj[a].begin(), rd.adj[a].end(), x, b);
    std::replace(rd.adj[b].begin(), rd.adj[b].end(), x, a);
    rd.adj[x].clear();
    gone[x] = 1;
  }
  std::vector<int> id(rd.size(), kNone);
  RankDecomposition out;
  for (int x = 0; x < rd.size(); ++x)
    if (!gone[x]) {
      id[x] = out.size();
      out.adj.emplace_back();
      out.leaf.push_back(rd.leaf[x]);
    }
  for (int x = 0; x < rd.size(); ++x)
    if (!gone[x])
      for (int y : rd.adj[x]) out.adj[id[x]].push_back(id[y]);
  return out;
}

bool is_subcubic(const RankDecomposition& rd) {
  for (int x = 0; x < rd.size(); ++x) {
    std::size_t deg = rd.adj[x].size();
    if (rd.leaf[x] != kVirtual ? deg > 1 : deg != 3) return false;
  }
  return true;
}

namespace {

VertexSet leaf_indices(const Graph& g, const RankDecomposition& rd, std::vector<int>& where) {
  where.assign(rd.size(), -1);
  VertexSet seen;
  for (int x = 0; x < rd.size(); ++x) {
    if (rd.leaf[x] == kVirtual) continue;
    int v = g.index_of(rd.leaf[x]);
    if (v < 0) throw InvalidArgument("tree leaf is not a vertex of the graph");
    where[x] = v;
    seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  if (static_cast<int>(seen.size()) != g.size() || std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidArgument("tree leaves do not match the vertices one to one");
  return seen;
}

}  // namespace

int rank_decomposition_width(const Graph& g, const RankDecomposition& rd) {
  std::vector<int> where;
  leaf_indices(g, rd, where);
  int w = 0;
  for (int x = 0; x < rd.size(); ++x)
    for (int y : rd.adj[x]) {
      if (y < x) continue;
      // leaves on the y side of edge xy
      VertexSet side;
      std::vector<std::pair<int, int>> stack{{y, x}};
      while (!stack.empty()) {
        auto [u, from] = stack.back();
        stack.pop_back();
        if (where[u] >= 0) side.push_back(where[u]);
        for (int z : rd.adj[u])
          if (z != from) stack.push_back({z, u});
      }
      w = std::max(w, cut_rank(g, side));
    }
  return w;
}

LinearLayout log_bound_layout(const Graph& g, const RankDecomposition& rd) {
  std::vector<int> where;
  leaf_indices(g, rd, where);
  LinearLayout out;
  if (g.size() == 0) return out;
  int first = -1;
  for (int x = 0; x < rd.size(); ++x)
    if (where[x] >= 0 && (first < 0 || g.label(where[x]) < g.label(where[first]))) first = x;
  if (rd.adj[first].empty()) return {where[first]};
  // the subdivision node sits between first and its neighbour
  const int other = rd.adj[first][0];
  std::vector<int> leaves(rd.size(), 0);
  std::function<int(int, int)> count = [&](int u, int from) {
    int c = where[u] >= 0;
    for (int z : rd.adj[u])
      if (z != from) c += count(z, u);
    return leaves[u] = c;
  };
  count(first, other);
  count(other, first);
  std::vector<std::pair<int, int>> stack;
  auto push_children = [&](int u, int from) {
    std::vector<int> ch;
    for (int z : rd.adj[u])
      if (z != from) ch.push_back(z);
    std::stable_sort(ch.begin(), ch.end(), [&](int a, int b) { return leaves[a] > leaves[b]; });
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, u});
  };
  if (leaves[first] >= leaves[other]) {
    stack.push_back({other, first});
    stack.push_back({first, other});
  } else {
    stack.push_back({first, other});
    stack.push_back({other, first});
  }
  while (!stack.empty()) {
    auto [u, from] = stack.back();
    stack.pop_back();
    if (where[u] >= 0) out.push_back(where[u]);
    push_children(u, from);
  }
  return out;
}

}  // namespace dhlrw
