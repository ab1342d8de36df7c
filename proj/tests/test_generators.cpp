#include <doctest.h>

#include <algorithm>
#include <bit>

#include "dhlrw/errors.hpp"
#include "dhlrw/generators.hpp"
#include "dhlrw/lrw.hpp"
#include "fixtures.hpp"

using namespace dhlrw;

namespace {

int floor_log2(int n) { return std::bit_width(static_cast<unsigned>(n)) - 1; }

int leaf_count(const RankDecomposition& rd) {
  int c = 0;
  for (Label l : rd.leaf) c += l != kVirtual;
  return c;
}

}  // namespace

TEST_CASE("generator outputs") {
  Graph one = gen_random_dh({1, 3});
  CHECK(one.size() == 1);
  CHECK(one.edge_count() == 0);
  Graph two = gen_random_dh({2, 3});
  CHECK(two.edge_count() == 1);
  Graph g = gen_random_dh({50, 7});
  CHECK(g.size() == 50);
  CHECK(is_connected(g));
  CHECK(is_distance_hereditary(g));
  std::vector<Label> ls;
  for (int v = 0; v < g.size(); ++v) ls.push_back(g.label(v));
  std::sort(ls.begin(), ls.end());
  for (int v = 0; v < 50; ++v) CHECK(ls[v] == v);
}

TEST_CASE("generator is deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(same_labelled(gen_random_dh({30, seed}), gen_random_dh({30, seed})));
  }
  CHECK_FALSE(same_labelled(gen_random_dh({30, 1}), gen_random_dh({30, 2})));
}

TEST_CASE("mix validation") {
  CHECK_THROWS_AS(validate({5, 1, 0.5, 0.5, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(validate({5, 1, -0.1, 0.6, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(validate({0, 1}), InvalidArgument);
  CHECK_NOTHROW(validate({5, 1, 1.0, 0.0, 0.0}));
  CHECK_NOTHROW(validate({5, 1, 0.1, 0.2, 0.7}));
  CHECK_NOTHROW(validate({5, 1, 0.5, 0.5, 1e-10}));
  CHECK_THROWS_AS(validate({5, 1, 0.5, 0.5, 1e-8}), InvalidArgument);
  Graph tree = gen_random_dh({40, 5, 1.0, 0.0, 0.0});
  CHECK(tree.edge_count() == 39);
  Graph clique = gen_random_dh({12, 5, 0.0, 1.0, 0.0});
  CHECK(clique.edge_count() == 66);
}

TEST_CASE("width one rank decompositions") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 2 + static_cast<int>(seed * 3 % 120);
    Graph g = gen_random_dh({n, seed});
    RankDecomposition rd = rank_decomposition_width1(build_canonical(g));
    CHECK(is_subcubic(rd));
    CHECK(leaf_count(rd) == n);
    CHECK(rank_decomposition_width(g, rd) == 1);
  }
  RankDecomposition single = rank_decomposition_width1(build_canonical(Graph(1)));
  CHECK(leaf_count(single) == 1);
}

TEST_CASE("logarithmic layout bound") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 2 + static_cast<int>(seed * 7 % 300);
    Graph g = gen_random_dh({n, seed});
    LinearLayout l = log_bound_layout(g, rank_decomposition_width1(build_canonical(g)));
    int w = layout_width(g, l);
    CHECK(w <= floor_log2(n));
    CHECK(compute_lrw(g) <= w);
  }
  Graph p = fixtures::path(2);
  CHECK(layout_width(p, log_bound_layout(p, rank_decomposition_width1(build_canonical(p)))) == 1);
}
