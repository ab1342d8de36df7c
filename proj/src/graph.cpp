#include "dhlrw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dhlrw/errors.hpp"

namespace dhlrw {

Graph::Graph(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  std::vector<Label> l(n);
  std::iota(l.begin(), l.end(), Label{0});
  *this = Graph(std::move(l));
}

Graph::Graph(std::vector<Label> labels) : labels_(std::move(labels)) {
  const int n = size();
  adj_.assign(n, Row(n));
  index_.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw InvalidArgument("duplicate vertex label " + std::to_string(labels_[i]));
  }
}

int Graph::index_of(Label l) const {
  auto it = index_.find(l);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto u = adj_[v].find_first(); u != Row::npos; u = adj_[v].find_next(u))
    out.push_back(static_cast<int>(u));
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (const auto& r : adj_) s += r.count();
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (auto v = adj_[u].find_next(u); v != Row::npos; v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<int>(v));
  return out;
}

void Graph::add_edge(int u, int v) {
  DHLRW_CHECK(u != v, "self-loop");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u].reset(v);
  adj_[v].reset(u);
}

void Graph::toggle_edge(int u, int v) {
  DHLRW_CHECK(u != v, "self-loop");
  adj_[u].flip(v);
  adj_[v].flip(u);
}

void Graph::swap_labels(int u, int v) {
  std::swap(labels_[u], labels_[v]);
  index_[labels_[u]] = u;
  index_[labels_[v]] = v;
}

bool Graph::operator==(const Graph& o) const {
  return labels_ == o.labels_ && adj_ == o.adj_;
}

bool same_labelled(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> map(a.size());
  for (int i = 0; i < a.size(); ++i) {
    map[i] = b.index_of(a.label(i));
    if (map[i] < 0) return false;
  }
  for (int i = 0; i < a.size(); ++i) {
    if (a.degree(i) != b.degree(map[i])) return false;
    for (int j : a.neighbors(i))
      if (!b.adjacent(map[i], map[j])) return false;
  }
  return true;
}

int gf2_rank(std::vector<Row> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto p = rows[i].find_first();
    if (p == Row::npos) continue;
    ++rank;
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j][p]) rows[j] ^= rows[i];
  }
  return rank;
}

int cut_rank(const Graph& g, const VertexSet& x) {
  const int n = g.size();
  Row in(n);
  for (int v : x) {
    DHLRW_CHECK(v >= 0 && v < n, "vertex index out of range");
    in.set(v);
  }
  Row out = ~in;
  const Row* side = &in;
  const Row* other = &out;
  if (in.count() * 2 > static_cast<std::size_t>(n)) std::swap(side, other);
  std::vector<Row> rows;
  for (auto v = side->find_first(); v != Row::npos; v = side->find_next(v))
    rows.push_back(g.row(static_cast<int>(v)) & *other);
  return gf2_rank(std::move(rows));
}

Graph local_complement(const Graph& g, int v) {
  Graph h = g;
  const Row& nv = g.row(v);
  for (auto u = nv.find_first(); u != Row::npos; u = nv.find_next(u)) {
    for (auto w = nv.find_next(u); w != Row::npos; w = nv.find_next(w))
      h.toggle_edge(static_cast<int>(u), static_cast<int>(w));
  }
  return h;
}

Graph pivot(const Graph& g, int x, int y) {
  if (x == y || !g.adjacent(x, y)) throw InvalidArgument("pivot on a non-edge");
  const Row& nx = g.row(x);
  const Row& ny = g.row(y);
  Row w1 = nx & ny;
  Row w2 = nx - ny;
  w2.reset(y);
  Row w3 = ny - nx;
  w3.reset(x);
  Graph h = g;
  auto cross = [&](const Row& a, const Row& b) {
    for (auto u = a.find_first(); u != Row::npos; u = a.find_next(u))
      for (auto w = b.find_first(); w != Row::npos; w = b.find_next(w))
        h.toggle_edge(static_cast<int>(u), static_cast<int>(w));
  };
  cross(w1, w2);
  cross(w1, w3);
  cross(w2, w3);
  // exchange the neighbourhoods of x and y
  for (int u = 0; u < g.size(); ++u) {
    if (u == x || u == y) continue;
    bool ax = h.adjacent(u, x), ay = h.adjacent(u, y);
    if (ax != ay) {
      h.toggle_edge(u, x);
      h.toggle_edge(u, y);
    }
  }
  return h;
}

int layout_width(const Graph& g, const LinearLayout& order) {
  const int n = g.size();
  if (n < 1) throw InvalidArgument("layout_width needs at least one vertex");
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("layout is not a permutation");
  Row seen(n);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) throw InvalidArgument("layout is not a permutation");
    seen.set(v);
  }
  // basis of prefix rows restricted to the suffix columns
  Row suffix(n);
  suffix.set();
  std::vector<Row> basis;
  int best = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int v = order[i];
    suffix.reset(v);
    std::vector<Row> rows;
    rows.reserve(basis.size() + 1);
    for (auto& b : basis) {
      b.reset(v);
      rows.push_back(std::move(b));
    }
    rows.push_back(g.row(v) & suffix);
    basis.clear();
    for (std::size_t a = 0; a < rows.size(); ++a) {
      auto p = rows[a].find_first();
      if (p == Row::npos) continue;
      for (std::size_t b = a + 1; b < rows.size(); ++b)
        if (rows[b][p]) rows[b] ^= rows[a];
      basis.push_back(std::move(rows[a]));
    }
    best = std::max(best, static_cast<int>(basis.size()));
  }
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    VertexSet c{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t h = 0; h < c.size(); ++h) {
      const Row& r = g.row(c[h]);
      for (auto u = r.find_first(); u != Row::npos; u = r.find_next(u)) {
        if (comp[u] < 0) {
          comp[u] = comp[s];
          c.push_back(static_cast<int>(u));
        }
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph induce(const Graph& g, const VertexSet& x) {
  std::vector<Label> l;
  l.reserve(x.size());
  for (int v : x) l.push_back(g.label(v));
  Graph h(std::move(l));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (g.adjacent(x[i], x[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph graph_from_edges(const std::vector<Label>& labels,
                       const std::vector<std::pair<Label, Label>>& edges) {
  Graph g(labels);
  for (auto [a, b] : edges) {
    int u = g.index_of(a), v = g.index_of(b);
    if (u < 0 || v < 0) throw InvalidArgument("edge refers to an unknown vertex");
    if (u == v) throw InvalidArgument("self-loop");
    g.add_edge(u, v);
  }
  return g;
}

LinearLayout labels_to_layout(const Graph& g, const std::vector<Label>& seq) {
  LinearLayout out;
  out.reserve(seq.size());
  for (Label l : seq) {
    int v = g.index_of(l);
    if (v < 0) throw InvalidArgument("unknown label " + std::to_string(l) + " in layout");
    out.push_back(v);
  }
  return out;
}

std::vector<Label> layout_to_labels(const Graph& g, const LinearLayout& order) {
  std::vector<Label> out;
  out.reserve(order.size());
  for (int v : order) out.push_back(g.label(v));
  return out;
}

}  // namespace dhlrw
