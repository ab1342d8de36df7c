#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dhlrw/graph.hpp"

namespace dhlrw {

enum class BagType { K, S, P };

constexpr int kNone = -1;
// label carried by marked vertices
constexpr Label kVirtual = std::numeric_limits<Label>::min();

char bag_type_char(BagType t);

// Marked graph whose bags are complete graphs or stars. Bag edges are
// implicit: a K bag is complete, an S bag joins its center to every other
// member. Ids are stable under deletion until compacted().
class Decomposition {
 public:
  struct Vertex {
    Label label = kVirtual;
    int bag = kNone;
    int partner = kNone;
    bool alive = true;
  };
  struct Bag {
    BagType type = BagType::K;
    int center = kNone;
    std::vector<int> members;
    int node = kNone;
    bool alive = true;
  };

  int add_bag(BagType t, int node = kNone);
  int add_vertex(int bag, Label label);
  void link(int a, int b);
  void unlink(int a);
  void set_type(int bag, BagType t, int center = kNone);
  void remove_vertex(int v);
  void move_vertex(int v, int bag);
  void kill_bag(int b);
  void replace_member(int bag, int old_v, int new_v);

  const Vertex& vertex(int v) const { return verts_[v]; }
  Vertex& vertex(int v) { return verts_[v]; }
  const Bag& bag(int b) const { return bags_[b]; }
  Bag& bag(int b) { return bags_[b]; }
  int vertex_capacity() const { return static_cast<int>(verts_.size()); }
  int bag_capacity() const { return static_cast<int>(bags_.size()); }

  bool marked(int v) const { return verts_[v].partner != kNone; }
  bool is_center(int v) const;
  std::vector<int> live_bags() const;
  std::vector<int> live_vertices() const;
  std::vector<int> unmarked_vertices() const;
  int bag_count() const;
  int find_label(Label l) const;
  int bag_of_node(int node) const;

  bool bag_adjacent(int a, int b) const;
  std::vector<int> bag_neighbors(int v) const;
  // bags reachable through marked edges from b
  std::vector<int> neighbor_bags(int b) const;

  // copy with dead entries dropped; ids renumbered in increasing order
  Decomposition compacted() const;

 private:
  std::vector<Vertex> verts_;
  std::vector<Bag> bags_;
};

Decomposition build_canonical(const Graph& g);
// priority[v] orders the pruning choices; smaller removes first
Decomposition build_canonical(const Graph& g, const std::vector<long long>& priority);
bool is_distance_hereditary(const Graph& g);

Graph recompose(const Decomposition& d);
// unmarked vertices linked to the unmarked (or virtual) vertex x
std::vector<int> linked_set(const Decomposition& d, int x);
bool linked(const Decomposition& d, int x, int y);
// unmarked vertices represented by v
std::vector<int> represented(const Decomposition& d, int v);
// (bag, representative) pairs for the unmarked vertex x
std::vector<std::pair<int, int>> representatives(const Decomposition& d, int x);

// empty when canonical; exempt_bag may have size 2
std::optional<std::string> validate_canonical(const Decomposition& d, int exempt_bag = kNone);

void lc_in_place(Decomposition& d, int x);
void pivot_in_place(Decomposition& d, int x, int y);
Decomposition lc_on_decomposition(const Decomposition& d, int x);
Decomposition pivot_on_decomposition(const Decomposition& d, int x, int y);

// bags of the component of d minus bag b entered through the marked vertex w of b
std::vector<int> component_bags(const Decomposition& d, int b, int w);
struct Zeta {
  int zeta_b;
  int zeta_t;
};
Zeta zeta(const Decomposition& d, int b, const std::vector<int>& component);

void write_decomposition(std::ostream& os, const Decomposition& d);
Decomposition read_decomposition(std::istream& is);

}  // namespace dhlrw
