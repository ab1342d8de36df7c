#include "dhlrw/limbs.hpp"

#include <algorithm>

#include "dhlrw/errors.hpp"

namespace dhlrw {

namespace {

// copies the component of d minus bag b entered through w; the partner of w
// becomes an unlabelled unmarked vertex
Decomposition copy_component(const Decomposition& d, int b, int w, int& v_out) {
  const int v = d.vertex(w).partner;
  std::vector<int> bmap(d.bag_capacity(), kNone), vmap(d.vertex_capacity(), kNone);
  std::vector<int> order{d.vertex(v).bag};
  bmap[b] = -2;
  Decomposition t;
  bmap[order[0]] = t.add_bag(d.bag(order[0]).type, d.bag(order[0]).node);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& B = d.bag(order[i]);
    const int nb = bmap[order[i]];
    for (int u : B.members) {
      int nu = t.add_vertex(nb, d.vertex(u).label);
      vmap[u] = nu;
      if (u == v || !d.marked(u)) continue;
      int pb = d.vertex(d.vertex(u).partner).bag;
      if (bmap[pb] == kNone) {
        bmap[pb] = t.add_bag(d.bag(pb).type, d.bag(pb).node);
        order.push_back(pb);
      }
    }
    if (B.center != kNone) t.bag(nb).center = vmap[B.center];
  }
  for (int ob : order)
    for (int u : d.bag(ob).members)
      if (u != v && d.marked(u) && vmap[u] < vmap[d.vertex(u).partner]) t.link(vmap[u], vmap[d.vertex(u).partner]);
  v_out = vmap[v];
  t.vertex(v_out).label = kVirtual;
  return t;
}

Label smallest_label(const Decomposition& d, const std::vector<int>& vs) {
  Label best = kVirtual;
  for (int u : vs) {
    Label l = d.vertex(u).label;
    if (l != kVirtual && (best == kVirtual || l < best)) best = l;
  }
  return best;
}

}  // namespace

Limb compute_limb_at(const Decomposition& d, int b, int w) {
  DHLRW_CHECK(d.marked(w) && d.vertex(w).bag == b, "limb through a vertex outside the bag");
  Label y = kVirtual;
  if (d.bag(b).type == BagType::S && d.bag(b).center == w) y = smallest_label(d, represented(d, w));
  return compute_limb_at(d, b, w, y);
}

Limb compute_limb_at(const Decomposition& d, int b, int w, Label y) {
  DHLRW_CHECK(d.marked(w) && d.vertex(w).bag == b, "limb through a vertex outside the bag");
  Limb l;
  l.source_bag = b;
  l.zeta_b = w;
  l.witness = y;
  int v;
  l.dec = copy_component(d, b, w, v);
  const auto& B = d.bag(b);
  if (B.type == BagType::K) {
    lc_in_place(l.dec, v);
  } else if (B.type == BagType::S && B.center == w) {
    int yv = l.dec.find_label(y);
    if (yv == kNone) throw InvalidArgument("witness is not in the component");
    pivot_in_place(l.dec, v, yv);
  } else if (B.type == BagType::P) {
    throw InvalidArgument("limb at a prime bag");
  }
  l.t_bag = l.dec.vertex(v).bag;
  l.t_node = l.dec.bag(l.t_bag).node;
  const auto& T = l.dec.bag(l.t_bag);
  DHLRW_CHECK(!(T.type == BagType::S && T.center == v && T.members.size() > 2),
              "deleting a star center disconnects the limb");
  l.dec.remove_vertex(v);
  return l;
}

Limb compute_limb(const Decomposition& d, int b, Label y) {
  for (int w : d.bag(b).members) {
    if (!d.marked(w)) continue;
    auto r = represented(d, w);
    for (int u : r)
      if (d.vertex(u).label == y) return compute_limb_at(d, b, w, y);
  }
  throw InvalidArgument("vertex is not represented by a marked vertex of the bag");
}

CanonicalLimb canonicalize_limb(Limb l) {
  CanonicalLimb c;
  c.t_node = l.t_node;
  Decomposition& d = l.dec;
  const int t = l.t_bag;
  auto& T = d.bag(t);
  if (T.members.size() >= 3 || d.bag_count() == 1) {
    if (T.members.size() == 1) {
      c.event = Cleanup::SingleVertex;
    } else if (T.members.size() == 2) {
      d.set_type(t, BagType::K);
    }
    c.dec = d.compacted();
    return c;
  }
  DHLRW_CHECK(T.members.size() == 2, "limb bag of unexpected size");
  int a = T.members[0], bb = T.members[1];
  if (d.marked(a) && !d.marked(bb)) std::swap(a, bb);
  if (!d.marked(bb)) {
    d.set_type(t, BagType::K);
    c.dec = d.compacted();
    return c;
  }
  if (!d.marked(a)) {
    // a is the unmarked vertex r; it replaces the neighbour's marked vertex
    int v1 = d.vertex(bb).partner;
    int b1 = d.vertex(v1).bag;
    d.unlink(bb);
    auto& mem = d.bag(t).members;
    mem.erase(std::find(mem.begin(), mem.end(), a));
    d.replace_member(b1, v1, a);
    d.kill_bag(t);
    c.event = Cleanup::Absorbed;
    c.absorbed_into = d.bag(b1).node;
    c.dec = d.compacted();
    return c;
  }
  int v1 = d.vertex(a).partner, v2 = d.vertex(bb).partner;
  d.kill_bag(t);
  d.link(v1, v2);
  int b1 = d.vertex(v1).bag, b2 = d.vertex(v2).bag;
  c.n1 = d.bag(b1).node;
  c.n2 = d.bag(b2).node;
  auto& B1 = d.bag(b1);
  auto& B2 = d.bag(b2);
  bool c1 = B1.type == BagType::S && B1.center == v1;
  bool c2 = B2.type == BagType::S && B2.center == v2;
  int keep = kNone, gone = kNone, kv = kNone, gv = kNone;
  if (B1.type == BagType::K && B2.type == BagType::K) {
    keep = b1, gone = b2, kv = v1, gv = v2;
  } else if (B1.type == BagType::S && B2.type == BagType::S && c1 != c2) {
    // the leaf side keeps its center
    if (c1)
      keep = b2, gone = b1, kv = v2, gv = v1;
    else
      keep = b1, gone = b2, kv = v1, gv = v2;
  }
  if (keep == kNone) {
    c.event = Cleanup::Joined;
    c.dec = d.compacted();
    return c;
  }
  std::vector<int> moved;
  for (int u : d.bag(gone).members)
    if (u != gv) moved.push_back(u);
  d.remove_vertex(kv);
  d.vertex(gv).alive = false;
  d.bag(gone).members.clear();
  d.bag(gone).alive = false;
  for (int u : moved) {
    d.vertex(u).bag = keep;
    d.bag(keep).members.push_back(u);
  }
  c.event = Cleanup::Merged;
  Decomposition out = d.compacted();
  // compacted ids are order preserving
  int idx = 0;
  for (int b = 0; b < keep; ++b) idx += d.bag(b).alive;
  c.merged_bag = idx;
  c.dec = std::move(out);
  return c;
}

Graph limb_hat(const Limb& l) { return recompose(l.dec); }
Graph limb_hat(const CanonicalLimb& l) { return recompose(l.dec); }

bool has_node(const Decomposition& d, int node) { return d.bag_of_node(node) != kNone; }

Root assign_root(const Root& old_root, int t_parent, CanonicalLimb& cl, int& next_node) {
  const Decomposition& d = cl.dec;
  auto alive = [&](int node) {
    if (cl.event == Cleanup::Merged && (node == cl.n1 || node == cl.n2)) return true;
    return has_node(d, node);
  };
  bool old_alive = alive(old_root.a) && (!old_root.is_edge() || alive(old_root.b));
  if (cl.event == Cleanup::Merged) {
    int label;
    if (old_alive) {
      DHLRW_CHECK(t_parent == cl.n1 || t_parent == cl.n2, "merge away from the parent of the removed bag");
      label = t_parent;
    } else {
      label = next_node++;
    }
    cl.dec.bag(cl.merged_bag).node = label;
    if (old_alive) return old_root;
    return Root{label, kNone};
  }
  if (old_alive) return old_root;
  if (has_node(d, cl.t_node)) return Root{cl.t_node, kNone};
  switch (cl.event) {
    case Cleanup::Absorbed: return Root{cl.absorbed_into, kNone};
    case Cleanup::Joined: return Root{cl.n1, cl.n2};
    default: break;
  }
  throw InternalError("no root for the canonical limb");
}

int f_value(const Decomposition& d, int b, int w, const LrwFunction& lrw) {
  Limb l = compute_limb_at(d, b, w);
  return lrw(limb_hat(l));
}

}  // namespace dhlrw
