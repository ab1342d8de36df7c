#pragma once

#include <cstdint>
#include <vector>

#include "dhlrw/decomposition.hpp"

namespace dhlrw {

struct GenSpec {
  int n = 1;
  std::uint64_t seed = 0;
  double pendant = 0.3;
  double true_twin = 0.35;
  double false_twin = 0.35;
};

void validate(const GenSpec& s);
// connected distance-hereditary graph labelled 0..n-1
Graph gen_random_dh(const GenSpec& s);

// subcubic tree; leaf nodes carry a vertex label, inner nodes kVirtual
struct RankDecomposition {
  std::vector<std::vector<int>> adj;
  std::vector<Label> leaf;
  int size() const { return static_cast<int>(adj.size()); }
};

RankDecomposition rank_decomposition_width1(const Decomposition& d);
// max cut-rank over tree edges; throws when the leaves are not the vertices of g
int rank_decomposition_width(const Graph& g, const RankDecomposition& rd);
bool is_subcubic(const RankDecomposition& rd);
LinearLayout log_bound_layout(const Graph& g, const RankDecomposition& rd);

}  // namespace dhlrw
