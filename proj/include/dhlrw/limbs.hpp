#pragma once

#include <functional>

#include "dhlrw/decomposition.hpp"

namespace dhlrw {

// root of a decomposition tree, as tree-node ids (Bag::node); b != kNone for a root edge
struct Root {
  int a = kNone;
  int b = kNone;
  bool is_edge() const { return b != kNone; }
  bool operator==(const Root&) const = default;
};

struct Limb {
  Decomposition dec;
  int source_bag = kNone;   // bag B of the source decomposition
  int zeta_b = kNone;       // marked vertex of B facing the component
  Label witness = kVirtual; // y
  int t_bag = kNone;        // bag of dec that held zeta_t
  int t_node = kNone;
};

enum class Cleanup { Kept, Absorbed, Joined, Merged, SingleVertex };

struct CanonicalLimb {
  Decomposition dec;
  Cleanup event = Cleanup::Kept;
  int t_node = kNone;
  int absorbed_into = kNone;  // node receiving the unmarked vertex
  int n1 = kNone, n2 = kNone; // nodes joined by the new marked edge
  int merged_bag = kNone;     // bag of dec after a merge

  bool single_vertex() const { return event == Cleanup::SingleVertex; }
};

// limb at bag b towards the component entered through its marked vertex w
Limb compute_limb_at(const Decomposition& d, int b, int w);
Limb compute_limb_at(const Decomposition& d, int b, int w, Label y);
// y must be represented by a marked vertex of b
Limb compute_limb(const Decomposition& d, int b, Label y);

CanonicalLimb canonicalize_limb(Limb l);
Graph limb_hat(const Limb& l);
Graph limb_hat(const CanonicalLimb& l);

// Chooses the root of the canonical limb's tree and names a merged node.
// t_parent is the old parent of t_node (kNone when t_node was the root node).
Root assign_root(const Root& old_root, int t_parent, CanonicalLimb& cl, int& next_node);

bool has_node(const Decomposition& d, int node);

using LrwFunction = std::function<int(const Graph&)>;
int f_value(const Decomposition& d, int b, int w, const LrwFunction& lrw);

}  // namespace dhlrw
