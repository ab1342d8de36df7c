#pragma once

#include <random>
#include <vector>

#include "dhlrw/graph.hpp"

namespace fixtures {

inline dhlrw::Graph edges(int n, const std::vector<std::pair<int, int>>& es) {
  dhlrw::Graph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

inline dhlrw::Graph complete(int n) {
  dhlrw::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline dhlrw::Graph path(int n) {
  dhlrw::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline dhlrw::Graph cycle(int n) {
  dhlrw::Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline dhlrw::Graph star(int leaves) {
  dhlrw::Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// complete binary tree with the given number of levels
inline dhlrw::Graph binary_tree(int levels) {
  int n = (1 << levels) - 1;
  dhlrw::Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, (v - 1) / 2);
  return g;
}

inline dhlrw::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  dhlrw::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline dhlrw::Graph random_tree(int n, std::mt19937_64& rng) {
  dhlrw::Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
  return g;
}

// graph on all n-vertex labelled graphs indexed by the edge bitmask
inline dhlrw::Graph from_mask(int n, unsigned long long mask) {
  dhlrw::Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

}  // namespace fixtures
