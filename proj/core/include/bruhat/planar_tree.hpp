#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bruhat/hasse.hpp"
#include "bruhat/order.hpp"

namespace bruhat {

// A planar rooted tree: a leaf, or an internal vertex with >= 2 ordered
// subtrees. Degree = leaves - 1. Values are immutable and share structure,
// so copies are cheap.
class PlanarTree {
 public:
  PlanarTree() = default;  // the leaf

  static PlanarTree leaf() { return PlanarTree{}; }
  static PlanarTree node(std::vector<PlanarTree> children);  // TooFewParts if < 2

  bool is_leaf() const { return rep_ == nullptr; }
  const std::vector<PlanarTree>& children() const;  // LeafHasNoWedge on a leaf
  int degree() const { return rep_ ? rep_->degree : 0; }
  int vertex_count() const { return rep_ ? rep_->vertices : 0; }
  int arity() const { return rep_ ? static_cast<int>(rep_->children.size()) : 0; }

  bool operator==(const PlanarTree& o) const;
  bool operator!=(const PlanarTree& o) const { return !(*this == o); }
  // Canonical order: degree first, then the order of the textual form.
  bool operator<(const PlanarTree& o) const;

  std::string to_string() const;  // leaf ".", node "(" children ")"
  static PlanarTree parse(const std::string& text);

 private:
  struct Rep {
    std::vector<PlanarTree> children;
    int degree = 0;
    int vertices = 0;
  };
  std::shared_ptr<const Rep> rep_;
};

PlanarTree corolla(int n);  // one vertex, n+1 leaves; OutOfRange for n < 1
bool is_binary(const PlanarTree& t);

// Joining the roots of the parts under a new vertex; inverse of unwedge.
PlanarTree tree_wedge(std::vector<PlanarTree> parts);          // TooFewParts
std::vector<PlanarTree> tree_unwedge(const PlanarTree& t);     // LeafHasNoWedge

// All trees of degree n in canonical order. Counts are the little Schroeder
// numbers 1, 1, 3, 11, 45, 197, ...
inline constexpr int kMaxTreeDegree = 8;
std::vector<PlanarTree> enumerate_trees(int n);

// Internal edges, addressed by the path of child indices from the root to
// the child vertex; depth-first, left to right.
std::vector<std::vector<int>> internal_edges(const PlanarTree& t);

// Contract one internal edge: the child's subtrees are spliced into the
// parent at the child's slot.
PlanarTree contract(const PlanarTree& t, const std::vector<int>& edge);  // NotInternalEdge

// t is below z when z is reachable from t by contractions.
bool tree_inclusion_leq(const PlanarTree& t, const PlanarTree& z);

// Generating relations of the tree Bruhat order at t:
//  1. a relation inside one subtree,
//  2. the first subtree opens into its parts (upward),
//  3. a proper tail of the subtrees closes into one part (upward).
std::vector<std::pair<PlanarTree, Direction>> tree_bruhat_relations(const PlanarTree& t);

std::vector<PlanarTree> tree_up_neighbors(const PlanarTree& t, OrderKind kind);
std::vector<PlanarTree> tree_down_neighbors(const PlanarTree& t, OrderKind kind);

bool tree_leq(const PlanarTree& a, const PlanarTree& b, OrderKind kind);
std::vector<PlanarTree> tree_interval(const PlanarTree& a, const PlanarTree& b, OrderKind kind);

Poset<PlanarTree> build_tree_order(int n, OrderKind kind, int cap = 6);

// Grafting: the root of t replaces leaf j of z (leaves counted 0..degree
// left to right).
PlanarTree graft(const PlanarTree& t, int j, const PlanarTree& z);  // LeafIndexOutOfRange
PlanarTree over(const PlanarTree& t, const PlanarTree& z);   // t on the first leaf of z
PlanarTree under(const PlanarTree& t, const PlanarTree& z);  // z on the last leaf of t

// Graphviz rendering of one tree: vertices as points, leaves as stubs.
std::string tree_to_dot(const PlanarTree& t);

}  // namespace bruhat
