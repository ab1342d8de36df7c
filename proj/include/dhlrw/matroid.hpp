#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dhlrw/graph.hpp"

namespace dhlrw {

// column matroid over GF(2); elements are column indices
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  BinaryMatroid(int rows, std::vector<Row> columns, std::vector<std::string> names = {});

  int size() const { return static_cast<int>(cols_.size()); }
  int rows() const { return rows_; }
  const Row& column(int e) const { return cols_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  int rank_of(const std::vector<int>& x) const;
  int rank() const;

 private:
  int rows_ = 0;
  std::vector<Row> cols_;
  std::vector<std::string> names_;
};

struct IndependenceOracle {
  std::vector<std::string> ground;
  std::function<bool(const std::vector<int>&)> independent;
  int size() const { return static_cast<int>(ground.size()); }
};

IndependenceOracle oracle_of(const BinaryMatroid& m);
// rank of x through oracle queries
int oracle_rank(const IndependenceOracle& o, const std::vector<int>& x);

std::vector<int> greedy_base(const IndependenceOracle& o);
std::vector<int> greedy_base(const IndependenceOracle& o, const std::vector<int>& scan);
// vertex labels are element indices; base elements and the rest form the bipartition
Graph fundamental_graph(const IndependenceOracle& o, const std::vector<int>& base);

int connectivity_lambda(const BinaryMatroid& m, const std::vector<int>& x);
int connectivity_lambda(const IndependenceOracle& o, const std::vector<int>& x);
// max of lambda over proper nonempty prefixes; 0 for at most one element
int matroid_layout_width(const BinaryMatroid& m, const std::vector<int>& order);
int matroid_layout_width(const IndependenceOracle& o, const std::vector<int>& order);

struct MatroidLayout {
  int width = 0;
  std::vector<int> order;
};

MatroidLayout pathwidth_bw2(const IndependenceOracle& o);

}  // namespace dhlrw
