#include <doctest.h>

#include <bit>
#include <random>

#include "dhlrw/decomposition.hpp"
#include "dhlrw/errors.hpp"
#include "dhlrw/generators.hpp"
#include "dhlrw/lrw.hpp"
#include "dhlrw/oracle.hpp"
#include "fixtures.hpp"

using namespace dhlrw;

namespace {

void check_against_oracle(const Graph& g) {
  int k = compute_lrw(g);
  CHECK(k == lrw_exact(g));
  LayoutResult r = extract_layout(g);
  CHECK(r.k == k);
  CHECK(layout_width(g, r.order) == k);
}

}  // namespace

TEST_CASE("complete graphs and caterpillars have width one") {
  for (int n = 2; n <= 9; ++n) {
    CHECK(compute_lrw(fixtures::complete(n)) == 1);
    CHECK(compute_lrw(fixtures::path(n)) == 1);
    CHECK(compute_lrw(fixtures::star(n)) == 1);
  }
  Graph cat = fixtures::path(6);
  for (int v = 0; v < 6; ++v) {
    Graph h(cat.size() + 2);
    for (auto [a, b] : cat.edges()) h.add_edge(a, b);
    h.add_edge(v, 6);
    h.add_edge(v, 7);
    CHECK(compute_lrw(h) == 1);
    CHECK(layout_width(h, extract_layout(h).order) == 1);
  }
}

TEST_CASE("degenerate inputs") {
  CHECK(compute_lrw(Graph(0)) == 0);
  CHECK(compute_lrw(Graph(1)) == 0);
  CHECK(compute_lrw(Graph(4)) == 0);
  CHECK(extract_layout(Graph(1)).order == LinearLayout{0});
  Graph k3k1 = fixtures::complete(3);
  Graph h(4);
  for (auto [a, b] : k3k1.edges()) h.add_edge(a, b);
  CHECK(compute_lrw(h) == 1);
  CHECK_THROWS_AS(compute_lrw(fixtures::cycle(5)), NotDistanceHereditary);
}

TEST_CASE("disjoint union takes the maximum") {
  Graph t = fixtures::binary_tree(4);
  Graph g(t.size() + 3);
  for (auto [a, b] : t.edges()) g.add_edge(a, b);
  g.add_edge(15, 16);
  g.add_edge(16, 17);
  OracleBudget big;
  big.max_graph = 15;
  int expect = lrw_exact(t, big);
  CHECK(expect == 2);
  CHECK(compute_lrw(g) == expect);
  LayoutResult r = extract_layout(g);
  CHECK(layout_width(g, r.order) == expect);
}

TEST_CASE("P6 layout has width one") {
  Graph p = fixtures::path(6);
  LayoutResult r = extract_layout(p);
  CHECK(r.k == 1);
  CHECK(layout_width(p, r.order) == 1);
}

TEST_CASE("modified decomposition reproduces the original through the root limb") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = gen_random_dh({10, seed});
    Decomposition d = build_canonical(g);
    ModifiedDecomposition md = modify_with_root_bag(d);
    CHECK(validate_canonical(md.dec, md.root_bag).value_or("") == "");
    Root root{md.dec.bag(md.root_bag).node, kNone};
    RootedDecTree t = root_tree(md.dec, root);
    int next = 1000;
    DecState s = algorithm_limb(md.dec, root, t, md.attach_bag, 1, next);
    CHECK(same_labelled(recompose(s.dec), g));
    CHECK(s.dec.bag_count() == d.bag_count());
  }
}

TEST_CASE("z=2 limb keeps the parent side") {
  // path of three bags: pendant chain a-b-c-d-e gives a star chain
  Graph g = fixtures::path(6);
  Decomposition d = build_canonical(g);
  ModifiedDecomposition md = modify_with_root_bag(d);
  Root root{md.dec.bag(md.root_bag).node, kNone};
  RootedDecTree t = root_tree(md.dec, root);
  for (int b : t.order) {
    if (b == md.root_bag || t.parent[b] == md.root_bag) continue;
    int next = 1000;
    DecState s = algorithm_limb(md.dec, root, t, b, 2, next);
    CHECK(validate_canonical(s.dec, s.dec.bag_of_node(root.a)).value_or("") == "");
    CHECK(has_node(s.dec, root.a));
  }
}

TEST_CASE("small graphs agree with the exact oracle") {
  for (int n = 2; n <= 6; ++n) {
    int pairs = n * (n - 1) / 2;
    for (unsigned long long m = 0; m < (1ull << pairs); m += 7) {
      Graph g = fixtures::from_mask(n, m);
      if (!is_connected(g) || !is_distance_hereditary(g)) continue;
      check_against_oracle(g);
    }
  }
}

TEST_CASE("random distance-hereditary graphs agree with the exact oracle") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int n = 7 + static_cast<int>(seed % 6);
    Graph g = gen_random_dh({n, seed});
    check_against_oracle(g);
  }
}

TEST_CASE("random trees agree with the exact oracle") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Graph t = fixtures::random_tree(4 + i % 11, rng);
    check_against_oracle(t);
  }
}

TEST_CASE("width stays within the logarithmic bound") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 40 + static_cast<int>(seed) * 7;
    Graph g = gen_random_dh({n, seed, 0.5, 0.1, 0.4});
    int k = compute_lrw(g);
    CHECK(k <= std::bit_width(static_cast<unsigned>(n)) - 1);
    CHECK(layout_width(g, extract_layout(g).order) == k);
  }
}

TEST_CASE("compose_layout concatenation") {
  std::vector<std::vector<Label>> limbs{{4, 5}, {6}};
  CHECK(compose_layout(1, limbs, {2, 3}, 9) == std::vector<Label>{1, 4, 5, 6, 2, 3, 9});
  CHECK(compose_layout(kVirtual, {}, {2}, kVirtual) == std::vector<Label>{2});
}

namespace {

// replays the stored steps of every node and compares each defined level value
// with the exact width of the limb it describes
void check_level_values(const Graph& g) {
  LrwRun run = compute_lrw_connected(g);
  RootedDecTree t0 = root_tree(run.md.dec, run.root);
  for (int b : t0.order) {
    if (b == run.md.root_bag) continue;
    int node = run.md.dec.bag(b).node;
    int next = run.next_node;
    DecState s = algorithm_limb(run.md.dec, run.root, t0, b, 1, next);
    for (int i = run.tables.eta; i >= 0; --i) {
      for (auto [level, c] : run.tables.steps[node]) {
        if (level != i + 1) continue;
        RootedDecTree t = root_tree(s.dec, s.root);
        s = algorithm_limb(s.dec, s.root, t, s.dec.bag_of_node(c), 2, next);
      }
      int beta = run.tables.beta[node][i];
      Graph h = recompose(s.dec);
      if (beta > i || h.size() > 14) continue;
      CHECK(beta == lrw_exact(h));
    }
  }
}

}  // namespace

TEST_CASE("stored level values match the limbs they describe") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) check_level_values(gen_random_dh({9 + static_cast<int>(seed % 6), seed}));
  check_level_values(gen_random_dh({29, 1981}));
  Graph g = gen_random_dh({29, 1981});
  LayoutResult r = extract_layout(g);
  CHECK(r.k == compute_lrw(g));
  CHECK(layout_width(g, r.order) == r.k);
}
