#include "dhlrw/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "dhlrw/decomposition.hpp"
#include "dhlrw/errors.hpp"
#include "dhlrw/lrw.hpp"

namespace dhlrw {

BinaryMatroid::BinaryMatroid(int rows, std::vector<Row> columns, std::vector<std::string> names)
    : rows_(rows), cols_(std::move(columns)), names_(std::move(names)) {
  for (const auto& c : cols_)
    if (static_cast<int>(c.size()) != rows_) throw InvalidArgument("column length differs from the row count");
  if (names_.empty())
    for (int i = 0; i < size(); ++i) names_.push_back("e" + std::to_string(i + 1));
  if (static_cast<int>(names_.size()) != size()) throw InvalidArgument("one name per column required");
}

int BinaryMatroid::rank_of(const std::vector<int>& x) const {
  std::vector<Row> rs;
  rs.reserve(x.size());
  for (int e : x) rs.push_back(cols_.at(e));
  return gf2_rank(std::move(rs));
}

int BinaryMatroid::rank() const {
  std::vector<int> all(size());
  std::iota(all.begin(), all.end(), 0);
  return rank_of(all);
}

IndependenceOracle oracle_of(const BinaryMatroid& m) {
  IndependenceOracle o;
  o.ground = m.names();
  o.independent = [m](const std::vector<int>& x) { return m.rank_of(x) == static_cast<int>(x.size()); };
  return o;
}

int oracle_rank(const IndependenceOracle& o, const std::vector<int>& x) {
  std::vector<int> kept;
  for (int e : x) {
    kept.push_back(e);
    if (!o.independent(kept)) kept.pop_back();
  }
  return static_cast<int>(kept.size());
}

std::vector<int> greedy_base(const IndependenceOracle& o) {
  std::vector<int> scan(o.size());
  std::iota(scan.begin(), scan.end(), 0);
  return greedy_base(o, scan);
}

std::vector<int> greedy_base(const IndependenceOracle& o, const std::vector<int>& scan) {
  if (!o.independent({})) throw OracleInconsistent("the empty set is reported dependent");
  std::vector<int> base;
  for (int e : scan) {
    base.push_back(e);
    if (!o.independent(base)) base.pop_back();
  }
  if (!o.independent(base)) throw OracleInconsistent("greedy base is reported dependent");
  std::sort(base.begin(), base.end());
  return base;
}

Graph fundamental_graph(const IndependenceOracle& o, const std::vector<int>& base) {
  const int n = o.size();
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  Graph g(labels);
  std::vector<char> in(n, 0);
  for (int e : base) in[e] = 1;
  for (int e : base) {
    std::vector<int> rest;
    for (int f : base)
      if (f != e) rest.push_back(f);
    for (int f = 0; f < n; ++f) {
      if (in[f]) continue;
      rest.push_back(f);
      if (o.independent(rest)) g.add_edge(e, f);
      rest.pop_back();
    }
  }
  return g;
}

namespace {

std::vector<int> complement_of(int n, const std::vector<int>& x) {
  std::vector<char> in(n, 0);
  for (int e : x) in.at(e) = 1;
  std::vector<int> out;
  for (int e = 0; e < n; ++e)
    if (!in[e]) out.push_back(e);
  return out;
}

template <class RankFn>
int lambda_with(int n, const std::vector<int>& x, RankFn rank) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return rank(x) + rank(complement_of(n, x)) - rank(all) + 1;
}

template <class RankFn>
int layout_width_with(int n, const std::vector<int>& order, RankFn rank) {
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("layout does not list every element");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const int total = rank(all);
  int w = 0;
  std::vector<int> prefix;
  for (int i = 0; i + 1 < n; ++i) {
    prefix.push_back(order[i]);
    std::vector<int> rest(order.begin() + i + 1, order.end());
    w = std::max(w, rank(prefix) + rank(rest) - total + 1);
  }
  return w;
}

}  // namespace

int connectivity_lambda(const BinaryMatroid& m, const std::vector<int>& x) {
  return lambda_with(m.size(), x, [&](const std::vector<int>& s) { return m.rank_of(s); });
}

int connectivity_lambda(const IndependenceOracle& o, const std::vector<int>& x) {
  return lambda_with(o.size(), x, [&](const std::vector<int>& s) { return oracle_rank(o, s); });
}

int matroid_layout_width(const BinaryMatroid& m, const std::vector<int>& order) {
  return layout_width_with(m.size(), order, [&](const std::vector<int>& s) { return m.rank_of(s); });
}

int matroid_layout_width(const IndependenceOracle& o, const std::vector<int>& order) {
  return layout_width_with(o.size(), order, [&](const std::vector<int>& s) { return oracle_rank(o, s); });
}

MatroidLayout pathwidth_bw2(const IndependenceOracle& o) {
  MatroidLayout r;
  const int n = o.size();
  if (n <= 1) {
    r.order.assign(n, 0);
    return r;
  }
  Graph g = fundamental_graph(o, greedy_base(o));
  if (!is_distance_hereditary(g)) throw BranchWidthTooLarge("fundamental graph is not distance-hereditary");
  LayoutResult lr = extract_layout(g);
  r.width = lr.k + 1;
  for (int v : lr.order) r.order.push_back(static_cast<int>(g.label(v)));
  if (matroid_layout_width(o, r.order) != r.width)
    throw InternalError("matroid layout width differs from the computed path-width");
  return r;
}

}  // namespace dhlrw
