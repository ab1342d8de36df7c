#include "dhlrw/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "dhlrw/errors.hpp"

namespace dhlrw {

char bag_type_char(BagType t) {
  switch (t) {
    case BagType::K: return 'K';
    case BagType::S: return 'S';
    default: return 'P';
  }
}

int Decomposition::add_bag(BagType t, int node) {
  Bag b;
  b.type = t;
  b.node = node;
  bags_.push_back(std::move(b));
  return static_cast<int>(bags_.size()) - 1;
}

int Decomposition::add_vertex(int bag, Label label) {
  Vertex v;
  v.label = label;
  v.bag = bag;
  verts_.push_back(v);
  int id = static_cast<int>(verts_.size()) - 1;
  bags_[bag].members.push_back(id);
  return id;
}

void Decomposition::link(int a, int b) {
  verts_[a].partner = b;
  verts_[b].partner = a;
  verts_[a].label = kVirtual;
  verts_[b].label = kVirtual;
}

void Decomposition::unlink(int a) {
  int b = verts_[a].partner;
  verts_[a].partner = kNone;
  if (b != kNone) verts_[b].partner = kNone;
}

void Decomposition::set_type(int bag, BagType t, int center) {
  bags_[bag].type = t;
  bags_[bag].center = t == BagType::S ? center : kNone;
}

void Decomposition::remove_vertex(int v) {
  Bag& b = bags_[verts_[v].bag];
  auto it = std::find(b.members.begin(), b.members.end(), v);
  DHLRW_CHECK(it != b.members.end(), "vertex missing from its bag");
  b.members.erase(it);
  if (b.center == v) b.center = kNone;
  verts_[v].alive = false;
  verts_[v].bag = kNone;
}

void Decomposition::move_vertex(int v, int bag) {
  Bag& b = bags_[verts_[v].bag];
  auto it = std::find(b.members.begin(), b.members.end(), v);
  DHLRW_CHECK(it != b.members.end(), "vertex missing from its bag");
  b.members.erase(it);
  verts_[v].bag = bag;
  bags_[bag].members.push_back(v);
}

void Decomposition::kill_bag(int b) {
  for (int v : bags_[b].members) {
    verts_[v].alive = false;
    verts_[v].bag = kNone;
  }
  bags_[b].members.clear();
  bags_[b].alive = false;
}

void Decomposition::replace_member(int bag, int old_v, int new_v) {
  Bag& b = bags_[bag];
  auto it = std::find(b.members.begin(), b.members.end(), old_v);
  DHLRW_CHECK(it != b.members.end(), "vertex missing from its bag");
  *it = new_v;
  if (b.center == old_v) b.center = new_v;
  verts_[new_v].bag = bag;
  verts_[old_v].alive = false;
  verts_[old_v].bag = kNone;
}

bool Decomposition::is_center(int v) const {
  const Bag& b = bags_[verts_[v].bag];
  return b.type == BagType::S && b.center == v;
}

std::vector<int> Decomposition::live_bags() const {
  std::vector<int> out;
  for (int b = 0; b < bag_capacity(); ++b)
    if (bags_[b].alive) out.push_back(b);
  return out;
}

std::vector<int> Decomposition::live_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_capacity(); ++v)
    if (verts_[v].alive) out.push_back(v);
  return out;
}

std::vector<int> Decomposition::unmarked_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_capacity(); ++v)
    if (verts_[v].alive && verts_[v].partner == kNone) out.push_back(v);
  return out;
}

int Decomposition::bag_count() const {
  int c = 0;
  for (const auto& b : bags_) c += b.alive;
  return c;
}

int Decomposition::find_label(Label l) const {
  for (int v = 0; v < vertex_capacity(); ++v)
    if (verts_[v].alive && verts_[v].partner == kNone && verts_[v].label == l) return v;
  return kNone;
}

int Decomposition::bag_of_node(int node) const {
  for (int b = 0; b < bag_capacity(); ++b)
    if (bags_[b].alive && bags_[b].node == node) return b;
  return kNone;
}

bool Decomposition::bag_adjacent(int a, int b) const {
  if (a == b) return false;
  int ba = verts_[a].bag;
  if (ba != verts_[b].bag || ba == kNone) return false;
  const Bag& bag = bags_[ba];
  if (bag.type == BagType::K) return true;
  if (bag.type == BagType::S) return bag.center == a || bag.center == b;
  return false;
}

std::vector<int> Decomposition::bag_neighbors(int v) const {
  const Bag& b = bags_[verts_[v].bag];
  std::vector<int> out;
  if (b.type == BagType::S && b.center != v) {
    if (b.center != kNone) out.push_back(b.center);
    return out;
  }
  if (b.type == BagType::P) return out;
  out.reserve(b.members.size());
  for (int u : b.members)
    if (u != v) out.push_back(u);
  return out;
}

std::vector<int> Decomposition::neighbor_bags(int b) const {
  std::vector<int> out;
  for (int v : bags_[b].members)
    if (verts_[v].partner != kNone) out.push_back(verts_[verts_[v].partner].bag);
  return out;
}

Decomposition Decomposition::compacted() const {
  Decomposition out;
  std::vector<int> vmap(verts_.size(), kNone), bmap(bags_.size(), kNone);
  for (int b = 0; b < bag_capacity(); ++b)
    if (bags_[b].alive) bmap[b] = static_cast<int>(out.bags_.size()), out.bags_.push_back(Bag{});
  for (int v = 0; v < vertex_capacity(); ++v)
    if (verts_[v].alive) vmap[v] = static_cast<int>(out.verts_.size()), out.verts_.push_back(verts_[v]);
  for (auto& v : out.verts_) {
    v.bag = bmap[v.bag];
    if (v.partner != kNone) v.partner = vmap[v.partner];
  }
  for (int b = 0; b < bag_capacity(); ++b) {
    if (!bags_[b].alive) continue;
    Bag& nb = out.bags_[bmap[b]];
    nb.type = bags_[b].type;
    nb.node = bags_[b].node;
    nb.center = bags_[b].center == kNone ? kNone : vmap[bags_[b].center];
    nb.members.reserve(bags_[b].members.size());
    for (int v : bags_[b].members) nb.members.push_back(vmap[v]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// pruning sequence and incremental construction

namespace {

enum class Step { Pendant, TrueTwin, FalseTwin };

struct Pruning {
  struct Item {
    int x, y;
    Step kind;
  };
  std::vector<Item> items;
  int last = kNone;
};

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// g must be connected with at least one vertex
Pruning prune(const Graph& g, const std::vector<long long>& prio) {
  const int n = g.size();
  Pruning out;
  std::vector<std::uint64_t> z(n), ho(n, 0), hc(n);
  std::uint64_t seed = 0x5eed;
  for (int v = 0; v < n; ++v) z[v] = splitmix(seed);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) ho[v] ^= z[u];
    hc[v] = ho[v] ^ z[v];
    deg[v] = g.degree(v);
  }
  Row alive(n);
  alive.set();
  std::unordered_map<std::uint64_t, std::vector<int>> ob, cb;
  std::set<std::pair<long long, int>> cand;
  auto push = [&](int v) { cand.emplace(prio[v], v); };
  auto bucket_add = [&](std::unordered_map<std::uint64_t, std::vector<int>>& m, std::uint64_t h, int v) {
    auto& vec = m[h];
    vec.push_back(v);
    if (vec.size() == 2) push(vec[0]);
    if (vec.size() >= 2) push(v);
  };
  auto bucket_del = [&](std::unordered_map<std::uint64_t, std::vector<int>>& m, std::uint64_t h, int v) {
    auto it = m.find(h);
    auto& vec = it->second;
    vec.erase(std::find(vec.begin(), vec.end(), v));
    if (vec.empty()) m.erase(it);
  };
  for (int v = 0; v < n; ++v) {
    bucket_add(ob, ho[v], v);
    bucket_add(cb, hc[v], v);
    if (deg[v] == 1) push(v);
  }
  int left = n;
  auto twin_of = [&](int v, bool adjacent_pair) -> int {
    auto& m = adjacent_pair ? cb : ob;
    auto it = m.find(adjacent_pair ? hc[v] : ho[v]);
    if (it == m.end()) return kNone;
    for (int u : it->second) {
      if (u == v || g.adjacent(u, v) != adjacent_pair) continue;
      Row diff = (g.row(u) ^ g.row(v)) & alive;
      diff.reset(u);
      diff.reset(v);
      if (diff.none()) return u;
    }
    return kNone;
  };
  while (left > 1) {
    if (cand.empty()) throw NotDistanceHereditary("graph has no pendant vertex or twin pair");
    const int v = cand.begin()->second;
    cand.erase(cand.begin());
    if (!alive[v]) continue;
    Pruning::Item it{v, kNone, Step::Pendant};
    if (deg[v] == 1) {
      it.y = static_cast<int>((g.row(v) & alive).find_first());
    } else if (int u = twin_of(v, true); u != kNone) {
      it.y = u;
      it.kind = Step::TrueTwin;
    } else if (int w = twin_of(v, false); w != kNone) {
      it.y = w;
      it.kind = Step::FalseTwin;
    } else {
      continue;
    }
    out.items.push_back(it);
    alive.reset(v);
    --left;
    bucket_del(ob, ho[v], v);
    bucket_del(cb, hc[v], v);
    const Row nb = g.row(v) & alive;
    for (auto u = nb.find_first(); u != Row::npos; u = nb.find_next(u)) {
      bucket_del(ob, ho[u], static_cast<int>(u));
      bucket_del(cb, hc[u], static_cast<int>(u));
      ho[u] ^= z[v];
      hc[u] ^= z[v];
      --deg[u];
      bucket_add(ob, ho[u], static_cast<int>(u));
      bucket_add(cb, hc[u], static_cast<int>(u));
      if (deg[u] == 1) push(static_cast<int>(u));
    }
  }
  out.last = static_cast<int>(alive.find_first());
  return out;
}

std::vector<long long> default_priority(const Graph& g) {
  std::vector<long long> p(g.size());
  for (int v = 0; v < g.size(); ++v) p[v] = g.label(v);
  return p;
}

}  // namespace

bool is_distance_hereditary(const Graph& g) {
  for (const auto& c : components(g)) {
    if (c.size() <= 3) continue;
    Graph h = induce(g, c);
    try {
      prune(h, default_priority(h));
    } catch (const NotDistanceHereditary&) {
      return false;
    }
  }
  return true;
}

Decomposition build_canonical(const Graph& g) { return build_canonical(g, default_priority(g)); }

Decomposition build_canonical(const Graph& g, const std::vector<long long>& priority) {
  const int n = g.size();
  if (static_cast<int>(priority.size()) != n) throw InvalidArgument("priority size mismatch");
  Decomposition d;
  if (n == 0) return d;
  if (!is_connected(g)) throw NotConnected("graph is not connected");
  if (n == 1) {
    int b = d.add_bag(BagType::K);
    d.add_vertex(b, g.label(0));
    d.bag(b).node = 0;
    return d;
  }
  Pruning pr = prune(g, priority);
  std::vector<int> dv(n, kNone);
  const int r = pr.last;
  auto first = pr.items.back();
  DHLRW_CHECK(first.y == r, "last pruning step must attach to the survivor");
  int b0 = d.add_bag(BagType::K);
  dv[r] = d.add_vertex(b0, g.label(r));
  dv[first.x] = d.add_vertex(b0, g.label(first.x));
  // split y out of its bag into a fresh bag of type t via a new marked edge
  auto split_off = [&](int y, BagType t) -> int {
    int yv = dv[y];
    int b = d.vertex(yv).bag;
    int nb = d.add_bag(t);
    bool was_center = d.bag(b).center == yv;
    d.move_vertex(yv, nb);
    int m = d.add_vertex(b, kVirtual);
    if (was_center) d.bag(b).center = m;
    int m2 = d.add_vertex(nb, kVirtual);
    d.link(m, m2);
    return nb;
  };
  for (int i = static_cast<int>(pr.items.size()) - 2; i >= 0; --i) {
    const auto& st = pr.items[i];
    const int x = st.x, y = st.y;
    const int yv = dv[y];
    const int b = d.vertex(yv).bag;
    Decomposition::Bag& B = d.bag(b);
    if (B.members.size() == 2) {
      int z = B.members[0] == yv ? B.members[1] : B.members[0];
      dv[x] = d.add_vertex(b, g.label(x));
      if (st.kind == Step::FalseTwin) d.set_type(b, BagType::S, z);
      if (st.kind == Step::Pendant) d.set_type(b, BagType::S, yv);
      continue;
    }
    switch (st.kind) {
      case Step::TrueTwin:
        if (B.type == BagType::K) {
          dv[x] = d.add_vertex(b, g.label(x));
        } else {
          int nb = split_off(y, BagType::K);
          dv[x] = d.add_vertex(nb, g.label(x));
        }
        break;
      case Step::FalseTwin:
        if (B.type == BagType::S && B.center != yv) {
          dv[x] = d.add_vertex(b, g.label(x));
        } else {
          int nb = split_off(y, BagType::S);
          Decomposition::Bag& N = d.bag(nb);
          d.set_type(nb, BagType::S, N.members.back());
          dv[x] = d.add_vertex(nb, g.label(x));
        }
        break;
      case Step::Pendant:
        if (B.type == BagType::S && B.center == yv) {
          dv[x] = d.add_vertex(b, g.label(x));
        } else {
          int nb = split_off(y, BagType::S);
          d.set_type(nb, BagType::S, yv);
          dv[x] = d.add_vertex(nb, g.label(x));
        }
        break;
    }
  }
  Decomposition out = d.compacted();
  for (int bb = 0; bb < out.bag_capacity(); ++bb) out.bag(bb).node = bb;
  return out;
}

// ---------------------------------------------------------------------------
// linking and representation

namespace {

// walks alternating paths from the entry vertex e; calls leaf(u) for every
// unmarked vertex reached and entry(b, v) for every bag entered
template <class Leaf, class Entry>
void alternating_walk(const Decomposition& d, int start, Leaf leaf, Entry entry) {
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    entry(d.vertex(e).bag, e);
    for (int q : d.bag_neighbors(e)) {
      if (d.marked(q))
        stack.push_back(d.vertex(q).partner);
      else
        leaf(q);
    }
  }
}

}  // namespace

std::vector<int> linked_set(const Decomposition& d, int x) {
  std::vector<int> out;
  alternating_walk(d, x, [&](int u) { out.push_back(u); }, [](int, int) {});
  return out;
}

bool linked(const Decomposition& d, int x, int y) {
  auto s = linked_set(d, x);
  return std::find(s.begin(), s.end(), y) != s.end();
}

std::vector<int> represented(const Decomposition& d, int v) {
  if (!d.marked(v)) return {v};
  std::vector<int> out;
  alternating_walk(d, d.vertex(v).partner, [&](int u) { out.push_back(u); }, [](int, int) {});
  return out;
}

std::vector<std::pair<int, int>> representatives(const Decomposition& d, int x) {
  std::vector<std::pair<int, int>> out;
  alternating_walk(d, x, [](int) {}, [&](int b, int e) { out.emplace_back(b, e); });
  return out;
}

Graph recompose(const Decomposition& d) {
  std::vector<std::pair<Label, int>> un;
  for (int v : d.unmarked_vertices()) {
    DHLRW_CHECK(d.vertex(v).label != kVirtual, "recompose with an unlabelled unmarked vertex");
    un.emplace_back(d.vertex(v).label, v);
  }
  std::sort(un.begin(), un.end());
  std::vector<Label> labels;
  std::unordered_map<int, int> pos;
  for (auto [l, v] : un) {
    pos[v] = static_cast<int>(labels.size());
    labels.push_back(l);
  }
  Graph g(labels);
  for (auto [l, v] : un) {
    int a = pos[v];
    for (int u : linked_set(d, v)) {
      int b = pos.at(u);
      if (a < b) g.add_edge(a, b);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// validation

std::optional<std::string> validate_canonical(const Decomposition& d, int exempt_bag) {
  auto bags = d.live_bags();
  if (bags.empty()) return std::nullopt;
  std::set<Label> labels;
  int medges = 0;
  for (int b : bags) {
    const auto& B = d.bag(b);
    if (B.type == BagType::P) return "prime bag " + std::to_string(b);
    if (B.members.empty()) return "empty bag " + std::to_string(b);
    if (B.type == BagType::S) {
      if (B.center == kNone || d.vertex(B.center).bag != b) return "star bag without center " + std::to_string(b);
    } else if (B.center != kNone) {
      return "complete bag with a center " + std::to_string(b);
    }
    if (bags.size() > 1 && B.members.size() < 3 && b != exempt_bag)
      return "bag of size " + std::to_string(B.members.size()) + ": " + std::to_string(b);
    for (int v : B.members) {
      const auto& V = d.vertex(v);
      if (!V.alive || V.bag != b) return "vertex/bag mismatch at " + std::to_string(v);
      if (V.partner == kNone) {
        if (V.label == kVirtual) return "unmarked vertex without label " + std::to_string(v);
        if (!labels.insert(V.label).second) return "duplicate label " + std::to_string(V.label);
        continue;
      }
      const auto& P = d.vertex(V.partner);
      if (!P.alive || P.partner != v) return "marked edges do not form a matching at " + std::to_string(v);
      if (P.bag == b) return "marked edge inside a bag at " + std::to_string(v);
      ++medges;
      const auto& Q = d.bag(P.bag);
      bool vc = B.type == BagType::S && B.center == v;
      bool pc = Q.type == BagType::S && Q.center == V.partner;
      if (B.type == BagType::K && Q.type == BagType::K) return "KK edge at " + std::to_string(v);
      if (B.type == BagType::S && Q.type == BagType::S && !vc && pc)
        return "S_pS_c edge at " + std::to_string(v);
    }
  }
  medges /= 2;
  // connected with |bags|-1 marked edges means every marked edge is a cut-edge
  std::set<int> seen{bags[0]};
  std::vector<int> st{bags[0]};
  while (!st.empty()) {
    int b = st.back();
    st.pop_back();
    for (int nb : d.neighbor_bags(b))
      if (seen.insert(nb).second) st.push_back(nb);
  }
  if (seen.size() != bags.size()) return std::string("decomposition is not connected");
  if (medges != static_cast<int>(bags.size()) - 1) return std::string("a marked edge is not a cut-edge");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// local complementation and pivoting

namespace {

void bag_lc(Decomposition& d, int b, int w) {
  auto& B = d.bag(b);
  if (B.members.size() <= 2) {
    return;
  }
  if (B.type == BagType::K)
    d.set_type(b, BagType::S, w);
  else if (B.type == BagType::S && B.center == w)
    d.set_type(b, BagType::K);
}

void bag_pivot(Decomposition& d, int b, int u, int w) {
  auto& B = d.bag(b);
  if (B.type == BagType::S) {
    DHLRW_CHECK(B.center == u || B.center == w, "pivot on a non-edge of a star bag");
    B.center = B.center == u ? w : u;
  }
}

}  // namespace

void lc_in_place(Decomposition& d, int x) {
  DHLRW_CHECK(!d.marked(x), "local complementation at a marked vertex");
  for (auto [b, w] : representatives(d, x)) bag_lc(d, b, w);
}

void pivot_in_place(Decomposition& d, int x, int y) {
  DHLRW_CHECK(!d.marked(x) && !d.marked(y), "pivot at a marked vertex");
  const int bx = d.vertex(x).bag, by = d.vertex(y).bag;
  // parent pointers over the bag tree, rooted at the bag of x
  std::unordered_map<int, int> entry_of;  // bag -> entry vertex
  entry_of[bx] = x;
  std::vector<int> st{bx};
  while (!st.empty() && !entry_of.count(by)) {
    int b = st.back();
    st.pop_back();
    for (int v : d.bag(b).members) {
      if (!d.marked(v)) continue;
      int p = d.vertex(v).partner;
      int nb = d.vertex(p).bag;
      if (entry_of.count(nb)) continue;
      entry_of[nb] = p;
      st.push_back(nb);
    }
  }
  DHLRW_CHECK(entry_of.count(by), "vertices lie in different decompositions");
  std::vector<std::pair<int, int>> path;  // (entry, exit) per bag, from y back to x
  int exit = y;
  for (int b = by;;) {
    int e = entry_of[b];
    path.emplace_back(e, exit);
    if (b == bx) break;
    exit = d.vertex(e).partner;
    b = d.vertex(exit).bag;
  }
  for (auto [e, f] : path)
    if (!d.bag_adjacent(e, f)) throw InvalidArgument("pivot on vertices that are not linked");
  for (auto [e, f] : path) bag_pivot(d, d.vertex(e).bag, e, f);
}

Decomposition lc_on_decomposition(const Decomposition& d, int x) {
  Decomposition out = d;
  lc_in_place(out, x);
  return out;
}

Decomposition pivot_on_decomposition(const Decomposition& d, int x, int y) {
  Decomposition out = d;
  pivot_in_place(out, x, y);
  return out;
}

std::vector<int> component_bags(const Decomposition& d, int b, int w) {
  DHLRW_CHECK(d.marked(w) && d.vertex(w).bag == b, "not a marked vertex of the bag");
  int start = d.vertex(d.vertex(w).partner).bag;
  std::vector<int> out{start};
  std::set<int> seen{b, start};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int nb : d.neighbor_bags(out[i]))
      if (seen.insert(nb).second) out.push_back(nb);
  return out;
}

Zeta zeta(const Decomposition& d, int b, const std::vector<int>& component) {
  std::set<int> comp(component.begin(), component.end());
  for (int w : d.bag(b).members) {
    if (!d.marked(w)) continue;
    int p = d.vertex(w).partner;
    if (!comp.count(d.vertex(p).bag)) continue;
    auto cb = component_bags(d, b, w);
    if (std::set<int>(cb.begin(), cb.end()) != comp) break;
    return {w, p};
  }
  throw InvalidArgument("not a component of the decomposition minus the bag");
}

// ---------------------------------------------------------------------------
// text form

void write_decomposition(std::ostream& os, const Decomposition& d) {
  auto bags = d.live_bags();
  std::unordered_map<int, int> bid, vname;
  int k = 0;
  for (int b : bags) {
    bid[b] = static_cast<int>(bid.size());
    for (int v : d.bag(b).members)
      if (d.marked(v) || d.vertex(v).label == kVirtual) vname[v] = ++k;
  }
  auto name = [&](int v) {
    auto it = vname.find(v);
    return it != vname.end() ? "~" + std::to_string(it->second) : std::to_string(d.vertex(v).label);
  };
  for (int b : bags) {
    const auto& B = d.bag(b);
    os << "bag " << bid[b] << " type=" << bag_type_char(B.type)
       << " center=" << (B.type == BagType::S && B.center != kNone ? name(B.center) : "-") << "\n";
    for (int v : B.members)
      os << "v " << name(v) << " bag=" << bid[b] << " marked=" << (d.marked(v) ? 1 : 0) << "\n";
  }
  for (int b : bags)
    for (int v : d.bag(b).members)
      if (d.marked(v) && v < d.vertex(v).partner) os << "m " << name(v) << " " << name(d.vertex(v).partner) << "\n";
}

Decomposition read_decomposition(std::istream& is) {
  Decomposition d;
  std::map<int, int> bag_ids;
  std::map<std::string, int> names;
  std::vector<std::pair<int, std::string>> centers;
  std::string line;
  int ln = 0;
  auto field = [&](const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) throw ParseError(ln, "expected " + key + "=");
    return tok.substr(key.size() + 1);
  };
  while (std::getline(is, line)) {
    ++ln;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue;
    try {
      if (kind == "bag") {
        int id;
        std::string t, c;
        if (!(ss >> id >> t >> c)) throw ParseError(ln, "malformed bag line");
        std::string ty = field(t, "type");
        BagType bt = ty == "K" ? BagType::K : ty == "S" ? BagType::S : ty == "P" ? BagType::P
                                                          : throw ParseError(ln, "bad bag type");
        if (bag_ids.count(id)) throw ParseError(ln, "duplicate bag id");
        int b = d.add_bag(bt);
        d.bag(b).node = b;
        bag_ids[id] = b;
        centers.emplace_back(b, field(c, "center"));
      } else if (kind == "v") {
        std::string nm, bt, mk;
        if (!(ss >> nm >> bt >> mk)) throw ParseError(ln, "malformed vertex line");
        int id = std::stoi(field(bt, "bag"));
        if (!bag_ids.count(id)) throw ParseError(ln, "unknown bag");
        std::string m = field(mk, "marked");
        bool virt = !nm.empty() && nm[0] == '~';
        if (virt != (m == "1")) throw ParseError(ln, "marked flag disagrees with the vertex name");
        if (names.count(nm)) throw ParseError(ln, "duplicate vertex");
        names[nm] = d.add_vertex(bag_ids[id], virt ? kVirtual : std::stoll(nm));
      } else if (kind == "m") {
        std::string a, b;
        if (!(ss >> a >> b)) throw ParseError(ln, "malformed marked edge");
        if (!names.count(a) || !names.count(b)) throw ParseError(ln, "unknown vertex in marked edge");
        d.link(names[a], names[b]);
      } else if (kind == "component") {
        continue;
      } else {
        throw ParseError(ln, "unknown record '" + kind + "'");
      }
    } catch (const std::invalid_argument&) {
      throw ParseError(ln, "bad number");
    } catch (const std::out_of_range&) {
      throw ParseError(ln, "number out of range");
    }
  }
  for (auto [b, c] : centers) {
    if (c == "-") continue;
    if (!names.count(c)) throw ParseError(ln, "unknown center " + c);
    d.bag(b).center = names[c];
  }
  for (int v : d.live_vertices())
    if (d.vertex(v).label == kVirtual && !d.marked(v)) throw ParseError(ln, "virtual vertex without a marked edge");
  return d;
}

}  // namespace dhlrw
