#pragma once

#include <vector>

#include "dhlrw/limbs.hpp"

namespace dhlrw {

struct ModifiedDecomposition {
  Decomposition dec;
  int root_bag = kNone;    // R: unmarked center r0 and one marked leaf
  int attach_bag = kNone;  // R'
  Label root_label = 0;    // label of r0, one above every input label
};

ModifiedDecomposition modify_with_root_bag(const Decomposition& d);

struct RootedDecTree {
  Root root;
  int root_a = kNone, root_b = kNone;  // bag ids
  std::vector<int> order;              // live bags, parents before children
  std::vector<int> parent;             // per bag id; root-edge ends point at each other
  std::vector<std::vector<int>> children;  // tree children, root-edge partner excluded
  std::vector<int> up;                 // marked vertex facing the parent

  bool is_root_node(int bag) const { return !root.is_edge() && bag == root_a; }
  bool is_root_end(int bag) const { return root.is_edge() && (bag == root_a || bag == root_b); }
};

RootedDecTree root_tree(const Decomposition& d, const Root& r);

struct DecState {
  Decomposition dec;
  Root root;
};

struct NodeTables {
  int eta = 0;
  std::vector<std::vector<int>> beta;                  // per node, levels 0..eta
  std::vector<std::vector<std::pair<int, int>>> steps; // per node: (level, critical node)
  int node_count() const { return static_cast<int>(beta.size()); }
};

// Limb at the parent bag of w (z = 1) or at the bag of w towards its parent (z = 2)
DecState algorithm_limb(const Decomposition& d, const Root& root, const RootedDecTree& t, int w_bag, int z,
                        int& next_node);

struct LrwRun {
  int k = 0;
  ModifiedDecomposition md;
  Root root;
  NodeTables tables;
  int next_node = 0;
};

LrwRun compute_lrw_connected(const Graph& g);
int compute_lrw(const Graph& g);

std::vector<Label> compose_layout(Label x, const std::vector<std::vector<Label>>& limbs,
                                  const std::vector<Label>& spare, Label y);

struct LayoutResult {
  int k = 0;
  LinearLayout order;
};

// layout over the vertices of g, width verified equal to k
LayoutResult extract_layout(const Graph& g);
std::vector<Label> extract_layout_connected(const LrwRun& run);

}  // namespace dhlrw
