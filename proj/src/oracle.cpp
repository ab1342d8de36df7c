#include "dhlrw/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "dhlrw/decomposition.hpp"
#include "dhlrw/errors.hpp"
#include "dhlrw/limbs.hpp"

namespace dhlrw {

namespace {

using Mask = std::uint32_t;

int mask_rank(std::vector<Mask> rows) {
  int r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i]) continue;
    ++r;
    Mask p = rows[i] & -rows[i];
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & p) rows[j] ^= rows[i];
  }
  return r;
}

// best[s] = minimal width of an order of s counting the prefixes ending in s
// and c(s) itself; the answer skips c(full)
struct SubsetDp {
  std::vector<int> best;
  std::vector<signed char> last;
};

template <class CutFn>
SubsetDp run_dp(int n, CutFn cut) {
  SubsetDp dp;
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  dp.best.assign(std::size_t{full} + 1, 0);
  dp.last.assign(std::size_t{full} + 1, -1);
  for (Mask s = 1; s < full; ++s) {
    int inner = 1 << 30;
    for (int e = 0; e < n; ++e) {
      if (!(s >> e & 1)) continue;
      int v = dp.best[s & ~(Mask{1} << e)];
      if (v < inner) inner = v, dp.last[s] = static_cast<signed char>(e);
    }
    dp.best[s] = std::max(inner, cut(s));
  }
  int inner = 1 << 30;
  for (int e = 0; e < n; ++e) {
    int v = dp.best[full & ~(Mask{1} << e)];
    if (v < inner) inner = v, dp.last[full] = static_cast<signed char>(e);
  }
  dp.best[full] = inner;
  return dp;
}

std::vector<int> backtrack(const SubsetDp& dp, int n) {
  std::vector<int> order;
  Mask s = (Mask{1} << n) - 1;
  while (s) {
    int e = dp.last[s];
    order.push_back(e);
    s &= ~(Mask{1} << e);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

ExactLayout lrw_exact_layout(const Graph& g, const OracleBudget& b) {
  const int n = g.size();
  if (n > b.max_graph || n > 24) throw BudgetExceeded("graph exceeds the exact oracle budget");
  ExactLayout r;
  if (n <= 1) {
    r.order.assign(n, 0);
    return r;
  }
  std::vector<Mask> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v)) adj[u] |= Mask{1} << v;
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> rows;
  auto cut = [&](Mask s) {
    rows.clear();
    Mask side = s, other = full & ~s;
    if (__builtin_popcount(side) > __builtin_popcount(other)) std::swap(side, other);
    for (int v = 0; v < n; ++v)
      if (side >> v & 1) rows.push_back(adj[v] & other);
    return mask_rank(rows);
  };
  SubsetDp dp = run_dp(n, cut);
  r.k = dp.best[full];
  r.order = backtrack(dp, n);
  DHLRW_CHECK(layout_width(g, r.order) == r.k, "oracle layout disagrees with its value");
  return r;
}

int lrw_exact(const Graph& g, const OracleBudget& b) { return lrw_exact_layout(g, b).k; }

int lrw_bruteforce_perm(const Graph& g, const OracleBudget& b) {
  const int n = g.size();
  if (n > b.max_permutation) throw BudgetExceeded("graph exceeds the permutation oracle budget");
  if (n <= 1) return 0;
  LinearLayout order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    best = std::min(best, layout_width(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

int matroid_pw_exact(const BinaryMatroid& m, const OracleBudget& b) {
  const int n = m.size();
  if (n > b.max_matroid) throw BudgetExceeded("matroid exceeds the exact oracle budget");
  if (n <= 1) return 0;
  const Mask full = (Mask{1} << n) - 1;
  auto rank = [&](Mask s) {
    std::vector<int> x;
    for (int e = 0; e < n; ++e)
      if (s >> e & 1) x.push_back(e);
    return m.rank_of(x);
  };
  const int total = rank(full);
  auto lambda = [&](Mask s) { return rank(s) + rank(full & ~s) - total + 1; };
  return run_dp(n, lambda).best[full];
}

bool characterization_check(const Graph& g, int k, const OracleBudget& b) {
  const int n = g.size();
  if (n > b.max_graph) throw BudgetExceeded("graph exceeds the exact oracle budget");
  if (k <= 0) return n <= 1;
  if (n <= 1) return true;
  Decomposition d = build_canonical(g);
  for (int bag : d.live_bags()) {
    int exact = 0;
    for (int w : d.bag(bag).members) {
      if (!d.marked(w)) continue;
      int f = lrw_exact(limb_hat(compute_limb_at(d, bag, w)), b);
      if (f > k) return false;
      if (f == k && ++exact > 2) return false;
    }
  }
  return true;
}

}  // namespace dhlrw
