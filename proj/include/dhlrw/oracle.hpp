#pragma once

#include "dhlrw/graph.hpp"
#include "dhlrw/matroid.hpp"

namespace dhlrw {

struct OracleBudget {
  int max_graph = 14;
  int max_matroid = 8;
  int max_permutation = 8;
};

struct ExactLayout {
  int k = 0;
  LinearLayout order;
};

ExactLayout lrw_exact_layout(const Graph& g, const OracleBudget& b = {});
int lrw_exact(const Graph& g, const OracleBudget& b = {});
// minimum over all n! orders
int lrw_bruteforce_perm(const Graph& g, const OracleBudget& b = {});
int matroid_pw_exact(const BinaryMatroid& m, const OracleBudget& b = {});
// every bag has at most two limbs of width exactly k and all others below k
bool characterization_check(const Graph& g, int k, const OracleBudget& b = {});

}  // namespace dhlrw
