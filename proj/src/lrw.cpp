#include "dhlrw/lrw.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "dhlrw/errors.hpp"

namespace dhlrw {

ModifiedDecomposition modify_with_root_bag(const Decomposition& d) {
  ModifiedDecomposition m;
  m.dec = d;
  Decomposition& dec = m.dec;
  int best = kNone, max_node = -1;
  for (int b : dec.live_bags()) max_node = std::max(max_node, dec.bag(b).node);
  Label top = kVirtual;
  for (int v : dec.unmarked_vertices()) {
    if (best == kNone || dec.vertex(v).label < dec.vertex(best).label) best = v;
    top = std::max(top, dec.vertex(v).label);
  }
  DHLRW_CHECK(best != kNone, "decomposition without unmarked vertices");
  DHLRW_CHECK(top < std::numeric_limits<Label>::max(), "no label left for the root vertex");
  m.root_label = top + 1;
  m.attach_bag = dec.vertex(best).bag;
  m.root_bag = dec.add_bag(BagType::S, max_node + 1);
  int r0 = dec.add_vertex(m.root_bag, m.root_label);
  int r1 = dec.add_vertex(m.root_bag, kVirtual);
  dec.set_type(m.root_bag, BagType::S, r0);
  int vp = dec.add_vertex(m.attach_bag, kVirtual);
  dec.link(r1, vp);
  return m;
}

RootedDecTree root_tree(const Decomposition& d, const Root& r) {
  RootedDecTree t;
  t.root = r;
  const int cap = d.bag_capacity();
  t.parent.assign(cap, kNone);
  t.children.assign(cap, {});
  t.up.assign(cap, kNone);
  std::vector<char> seen(cap, 0);
  t.root_a = d.bag_of_node(r.a);
  DHLRW_CHECK(t.root_a != kNone, "root node missing from the decomposition");
  seen[t.root_a] = 1;
  t.order.push_back(t.root_a);
  auto facing = [&](int from, int to) {
    for (int m : d.bag(from).members)
      if (d.marked(m) && d.vertex(d.vertex(m).partner).bag == to) return m;
    return kNone;
  };
  if (r.is_edge()) {
    t.root_b = d.bag_of_node(r.b);
    DHLRW_CHECK(t.root_b != kNone, "root edge end missing from the decomposition");
    seen[t.root_b] = 1;
    t.order.push_back(t.root_b);
    t.parent[t.root_a] = t.root_b;
    t.parent[t.root_b] = t.root_a;
    t.up[t.root_a] = facing(t.root_a, t.root_b);
    t.up[t.root_b] = facing(t.root_b, t.root_a);
    DHLRW_CHECK(t.up[t.root_a] != kNone && t.up[t.root_b] != kNone, "root edge ends are not adjacent");
  }
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    int b = t.order[i];
    for (int m : d.bag(b).members) {
      if (!d.marked(m)) continue;
      int pm = d.vertex(m).partner;
      int pb = d.vertex(pm).bag;
      if (seen[pb]) continue;
      seen[pb] = 1;
      t.parent[pb] = b;
      t.up[pb] = pm;
      t.children[b].push_back(pb);
      t.order.push_back(pb);
    }
  }
  DHLRW_CHECK(static_cast<int>(t.order.size()) == d.bag_count(), "decomposition tree is not connected");
  return t;
}

DecState algorithm_limb(const Decomposition& d, const Root& root, const RootedDecTree& t, int w, int z,
                        int& next_node) {
  DHLRW_CHECK(!t.is_root_node(w), "limb requested at the root node");
  int b, zeta, t_parent = kNone;
  if (z == 1) {
    b = t.parent[w];
    zeta = d.vertex(t.up[w]).partner;
    t_parent = d.bag(b).node;
  } else {
    DHLRW_CHECK(z == 2, "limb selector must be 1 or 2");
    b = w;
    zeta = t.up[w];
    int pp = t.parent[t.parent[w]];
    if (pp != kNone) t_parent = d.bag(pp).node;
  }
  CanonicalLimb cl = canonicalize_limb(compute_limb_at(d, b, zeta));
  Root nr = assign_root(root, t_parent, cl, next_node);
  return DecState{std::move(cl.dec), nr};
}

namespace {

struct Analysis {
  bool empty = true;
  int unmarked = 0;
  int alpha = -1;
  bool three = false;
  bool incomparable = false;
  int critical = 0;
  int critical_bag = kNone;
};

std::vector<int> values(const Decomposition& d, const RootedDecTree& t, const NodeTables& tab, int i) {
  std::vector<int> val(d.bag_capacity(), -1);
  for (int b : t.order) {
    if (t.is_root_node(b)) continue;
    int node = d.bag(b).node;
    DHLRW_CHECK(node >= 0 && node < tab.node_count(), "value requested for an unnamed node");
    int x = tab.beta[node][i];
    DHLRW_CHECK(x >= 0, "value requested before the node was processed");
    val[b] = x;
  }
  return val;
}

Analysis analyze(const Decomposition& d, const RootedDecTree& t, const std::vector<int>& val, int i) {
  Analysis a;
  if (t.order.size() == 1) {
    for (int m : d.bag(t.order[0]).members) a.unmarked += !d.marked(m);
    return a;
  }
  a.empty = false;
  const int cap = d.bag_capacity();
  // cnt counts heavy tree children; a root-edge end also sees its partner as a
  // heavy direction, but that side is its own upward limb and never makes it critical
  std::vector<int> cnt(cap, 0), sub(cap, 0), anc(cap, 0);
  int total = 0;
  for (int b : t.order) {
    a.alpha = std::max(a.alpha, val[b]);
    total += val[b] == i;
    for (int c : t.children[b]) cnt[b] += val[c] == i;
  }
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    sub[*it] += val[*it] == i;
    if (t.parent[*it] != kNone && !t.is_root_end(*it)) sub[t.parent[*it]] += sub[*it];
  }
  for (int b : t.order) {
    if (t.is_root_node(b) || t.is_root_end(b)) continue;
    int p = t.parent[b];
    anc[b] = anc[p] + (val[p] == i);
    if (t.is_root_end(p)) {
      int other = p == t.root_a ? t.root_b : t.root_a;
      anc[b] += val[other] == i;
    }
  }
  for (int b : t.order) {
    int dirs = cnt[b];
    if (t.is_root_end(b)) dirs += val[t.parent[b]] == i;
    if (dirs >= 3) a.three = true;
    if (val[b] == i && cnt[b] >= 2) {
      ++a.critical;
      a.critical_bag = b;
      if (!t.is_root_end(b) && total - sub[b] - anc[b] > 0) a.incomparable = true;
    }
  }
  if (a.critical >= 2) a.incomparable = true;
  return a;
}

void process_node(const ModifiedDecomposition& md, const Root& root, const RootedDecTree& t0, int vbag,
                  NodeTables& tab, int& next_node) {
  const int eta = tab.eta;
  const int vnode = md.dec.bag(vbag).node;
  DecState s = algorithm_limb(md.dec, root, t0, vbag, 1, next_node);
  RootedDecTree t = root_tree(s.dec, s.root);
  std::vector<Analysis> info(eta + 1);
  std::vector<char> stepped(eta + 1, 0);
  for (int i = eta;; --i) {
    info[i] = analyze(s.dec, t, values(s.dec, t, tab, i), i);
    if (i == 0) break;
    const Analysis& a = info[i];
    if (!a.empty && a.alpha == i && !a.three && !a.incomparable && a.critical == 1) {
      tab.steps[vnode].emplace_back(i, s.dec.bag(a.critical_bag).node);
      stepped[i] = 1;
      s = algorithm_limb(s.dec, s.root, t, a.critical_bag, 2, next_node);
      t = root_tree(s.dec, s.root);
    }
  }
  auto& beta = tab.beta[vnode];
  for (int i = 0; i <= eta; ++i) {
    const Analysis& a = info[i];
    if (a.empty) {
      beta[i] = a.unmarked >= 2 ? 1 : 0;
      continue;
    }
    if (a.alpha <= i && i < eta)
      DHLRW_CHECK(info[i + 1].empty || info[i + 1].alpha <= i + 1, "cascade levels are not monotone");
    if (i > 0 && a.alpha <= i) {
      if (!stepped[i] && !info[i - 1].empty && info[i - 1].alpha <= i - 1)
        DHLRW_CHECK(info[i - 1].alpha == a.alpha, "unchanged limb with different level values");
    }
    if (a.alpha > i) {
      beta[i] = a.alpha;  // lower bound only
    } else if (a.alpha < i) {
      beta[i] = beta[i - 1];
    } else if (a.three || a.incomparable) {
      beta[i] = i + 1;
    } else if (a.critical == 0) {
      beta[i] = i;
    } else {
      DHLRW_CHECK(i > 0 && stepped[i], "unique critical node without a recorded step");
      beta[i] = beta[i - 1] >= i ? i + 1 : i;
    }
    if (a.alpha <= i)
      DHLRW_CHECK(beta[i] == a.alpha || beta[i] == a.alpha + 1, "level value outside its admissible range");
  }
}

int max_node_id(const Decomposition& d) {
  int m = -1;
  for (int b : d.live_bags()) m = std::max(m, d.bag(b).node);
  return m;
}

std::vector<Label> unmarked_labels(const Decomposition& d, int b) {
  std::vector<Label> out;
  for (int m : d.bag(b).members)
    if (!d.marked(m)) out.push_back(d.vertex(m).label);
  return out;
}

class LayoutBuilder {
 public:
  explicit LayoutBuilder(const LrwRun& run)
      : run_(run), t0_(root_tree(run.md.dec, run.root)), next_node_(run.next_node) {}

  std::vector<Label> layout_of(int node, int i) {
    const int k = run_.tables.beta[node][i];
    DHLRW_CHECK(k >= 0 && k <= i, "layout requested for an undetermined level");
    const int vbag = run_.md.dec.bag_of_node(node);
    DHLRW_CHECK(vbag != kNone, "layout requested for an unknown node");
    DecState s = algorithm_limb(run_.md.dec, run_.root, t0_, vbag, 1, next_node_);
    bool step_at_k = false;
    int step_node = kNone;
    for (auto [lvl, c] : run_.tables.steps[node]) {
      if (lvl == k) step_at_k = true, step_node = c;
      if (lvl <= k) continue;
      RootedDecTree t = root_tree(s.dec, s.root);
      int cb = s.dec.bag_of_node(c);
      DHLRW_CHECK(cb != kNone, "recorded critical node vanished");
      s = algorithm_limb(s.dec, s.root, t, cb, 2, next_node_);
    }
    RootedDecTree t = root_tree(s.dec, s.root);
    std::vector<Label> out;
    if (t.order.size() == 1) {
      out = unmarked_labels(s.dec, t.order[0]);
    } else {
      std::vector<int> val = values(s.dec, t, run_.tables, k);
      Analysis a = analyze(s.dec, t, val, k);
      std::vector<int> path;
      int x = kNone;
      auto chain = [&](int c) {
        std::vector<int> ch;
        while (c != kNone) {
          ch.push_back(c);
          int nxt = kNone;
          for (int cc : t.children[c])
            if (val[cc] == k) {
              DHLRW_CHECK(nxt == kNone, "branching chain of maximal values");
              nxt = cc;
            }
          c = nxt;
        }
        return ch;
      };
      auto join = [&](int mid_a, int mid_b, const std::vector<int>& c1, const std::vector<int>& c2) {
        path.assign(c1.rbegin(), c1.rend());
        path.push_back(mid_a);
        if (mid_b != kNone) path.push_back(mid_b);
        path.insert(path.end(), c2.begin(), c2.end());
      };
      auto heavy = [&](int b) {
        std::vector<int> hs;
        for (int c : t.children[b])
          if (val[c] == k) hs.push_back(c);
        return hs;
      };
      if (a.alpha < k) {
        path.push_back(t.root_a);
        if (t.root.is_edge()) path.push_back(t.root_b);
      } else if (a.alpha == k && a.critical == 0) {
        if (t.root.is_edge()) {
          auto ha = heavy(t.root_a), hb = heavy(t.root_b);
          DHLRW_CHECK(ha.size() <= 1 && hb.size() <= 1, "root edge end with two heavy children");
          join(t.root_a, t.root_b, ha.empty() ? std::vector<int>{} : chain(ha[0]),
               hb.empty() ? std::vector<int>{} : chain(hb[0]));
        } else {
          auto h = heavy(t.root_a);
          DHLRW_CHECK(h.size() <= 2, "root node with three heavy children");
          join(t.root_a, kNone, h.size() > 0 ? chain(h[0]) : std::vector<int>{},
               h.size() > 1 ? chain(h[1]) : std::vector<int>{});
        }
      } else {
        DHLRW_CHECK(a.alpha == k && a.critical == 1 && !a.three && !a.incomparable,
                    "no path structure for the limb");
        x = a.critical_bag;
        DHLRW_CHECK(step_at_k && s.dec.bag(x).node == step_node, "critical node differs from the recorded step");
        auto h = heavy(x);
        DHLRW_CHECK(h.size() == 2, "critical node without two heavy children");
        join(x, kNone, chain(h[0]), chain(h[1]));
      }
      for (std::size_t j = 0; j < path.size(); ++j) {
        const int u = path[j];
        const int prev = j > 0 ? path[j - 1] : kNone;
        const int next = j + 1 < path.size() ? path[j + 1] : kNone;
        std::vector<std::vector<Label>> pend;
        for (int m : s.dec.bag(u).members) {
          if (!s.dec.marked(m)) continue;
          int pb = s.dec.vertex(s.dec.vertex(m).partner).bag;
          if (pb == prev || pb == next) continue;
          if (pb == t.parent[u]) {
            DHLRW_CHECK(u == x, "pending limb above the path");
            pend.push_back(layout_of(node, k - 1));
          } else {
            pend.push_back(layout_of(s.dec.bag(pb).node, k));
          }
        }
        std::vector<Label> un = unmarked_labels(s.dec, u);
        std::vector<Label> part;
        if (j == 0) {
          Label first = un.empty() ? kVirtual : un[0];
          std::vector<Label> rest(un.begin() + (un.empty() ? 0 : 1), un.end());
          part = compose_layout(first, pend, rest, kVirtual);
        } else {
          part = compose_layout(kVirtual, pend, un, kVirtual);
        }
        out.insert(out.end(), part.begin(), part.end());
      }
    }
    std::vector<Label> expect;
    for (int v : s.dec.unmarked_vertices()) expect.push_back(s.dec.vertex(v).label);
    std::vector<Label> got = out;
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    DHLRW_CHECK(got == expect, "composed layout does not cover the limb");
    return out;
  }

 private:
  const LrwRun& run_;
  RootedDecTree t0_;
  int next_node_;
};

}  // namespace

LrwRun compute_lrw_connected(const Graph& g) {
  LrwRun run;
  const int n = g.size();
  if (n <= 1) return run;
  Decomposition d = build_canonical(g);
  run.md = modify_with_root_bag(d);
  const Decomposition& dec = run.md.dec;
  run.root = Root{dec.bag(run.md.root_bag).node, kNone};
  RootedDecTree t0 = root_tree(dec, run.root);
  run.next_node = max_node_id(dec) + 1;
  run.tables.eta = std::bit_width(static_cast<unsigned>(n)) - 1;
  run.tables.beta.assign(run.next_node, std::vector<int>(run.tables.eta + 1, -1));
  run.tables.steps.assign(run.next_node, {});
  for (auto it = t0.order.rbegin(); it != t0.order.rend(); ++it) {
    if (*it == run.md.root_bag) continue;
    process_node(run.md, run.root, t0, *it, run.tables, run.next_node);
  }
  run.k = run.tables.beta[dec.bag(run.md.attach_bag).node][run.tables.eta];
  DHLRW_CHECK(run.k >= 1 && run.k <= run.tables.eta, "width exceeds the logarithmic bound");
  return run;
}

int compute_lrw(const Graph& g) {
  int k = 0;
  for (const auto& comp : components(g)) {
    if (comp.size() <= 1) continue;
    k = std::max(k, compute_lrw_connected(induce(g, comp)).k);
  }
  return k;
}

std::vector<Label> compose_layout(Label x, const std::vector<std::vector<Label>>& limbs,
                                  const std::vector<Label>& spare, Label y) {
  std::vector<Label> out;
  if (x != kVirtual) out.push_back(x);
  for (const auto& l : limbs) out.insert(out.end(), l.begin(), l.end());
  out.insert(out.end(), spare.begin(), spare.end());
  if (y != kVirtual) out.push_back(y);
  return out;
}

std::vector<Label> extract_layout_connected(const LrwRun& run) {
  LayoutBuilder lb(run);
  return lb.layout_of(run.md.dec.bag(run.md.attach_bag).node, run.tables.eta);
}

LayoutResult extract_layout(const Graph& g) {
  LayoutResult r;
  std::vector<Label> labels;
  for (const auto& comp : components(g)) {
    Graph h = induce(g, comp);
    if (comp.size() == 1) {
      labels.push_back(h.label(0));
      continue;
    }
    LrwRun run = compute_lrw_connected(h);
    r.k = std::max(r.k, run.k);
    auto part = extract_layout_connected(run);
    labels.insert(labels.end(), part.begin(), part.end());
  }
  r.order = labels_to_layout(g, labels);
  if (g.size() >= 1 && layout_width(g, r.order) != r.k)
    throw InternalError("extracted layout does not attain the computed width");
  return r;
}

}  // namespace dhlrw
