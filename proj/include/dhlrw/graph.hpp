#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dhlrw {

using Label = std::int64_t;
using Row = boost::dynamic_bitset<std::uint64_t>;
using VertexSet = std::vector<int>;
using LinearLayout = std::vector<int>;

// Simple undirected graph on indices 0..n-1 carrying external labels.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  explicit Graph(std::vector<Label> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<Label>& labels() const { return labels_; }
  Label label(int v) const { return labels_[v]; }
  // -1 when absent
  int index_of(Label l) const;
  bool has_label(Label l) const { return index_of(l) >= 0; }

  bool adjacent(int u, int v) const { return adj_[u][v]; }
  const Row& row(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }
  std::vector<int> neighbors(int v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);
  void swap_labels(int u, int v);

  // same labels at the same indices and identical adjacency
  bool operator==(const Graph& o) const;

 private:
  std::vector<Label> labels_;
  std::vector<Row> adj_;
  std::unordered_map<Label, int> index_;
};

// identical up to the index order, matching vertices by label
bool same_labelled(const Graph& a, const Graph& b);

int gf2_rank(std::vector<Row> rows);

int cut_rank(const Graph& g, const VertexSet& x);
Graph local_complement(const Graph& g, int v);
Graph pivot(const Graph& g, int x, int y);
int layout_width(const Graph& g, const LinearLayout& order);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
Graph induce(const Graph& g, const VertexSet& x);
Graph graph_from_edges(const std::vector<Label>& labels,
                       const std::vector<std::pair<Label, Label>>& edges);

LinearLayout labels_to_layout(const Graph& g, const std::vector<Label>& seq);
std::vector<Label> layout_to_labels(const Graph& g, const LinearLayout& order);

}  // namespace dhlrw
