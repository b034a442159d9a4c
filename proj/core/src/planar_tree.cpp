#include "bruhat/planar_tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <set>

namespace bruhat {

PlanarTree PlanarTree::node(std::vector<PlanarTree> children) {
  if (children.size() < 2) fail(Errc::TooFewParts, "an internal vertex needs >= 2 subtrees");
  auto rep = std::make_shared<Rep>();
  rep->degree = static_cast<int>(children.size()) - 1;
  rep->vertices = 1;
  for (auto& c : children) {
    rep->degree += c.degree();
    rep->vertices += c.vertex_count();
  }
  rep->children = std::move(children);
  PlanarTree t;
  t.rep_ = std::move(rep);
  return t;
}

const std::vector<PlanarTree>& PlanarTree::children() const {
  if (!rep_) fail(Errc::LeafHasNoWedge, "a leaf has no subtrees");
  return rep_->children;
}

bool PlanarTree::operator==(const PlanarTree& o) const {
  if (rep_ == o.rep_) return true;
  if (is_leaf() || o.is_leaf()) return is_leaf() == o.is_leaf();
  if (degree() != o.degree() || arity() != o.arity()) return false;
  for (int i = 0; i < arity(); ++i)
    if (!(rep_->children[static_cast<std::size_t>(i)] == o.rep_->children[static_cast<std::size_t>(i)]))
      return false;
  return true;
}

namespace {

// Mirrors comparison of the textual forms: '(' sorts before '.', and when one
// child list is a prefix of the other the longer list sorts first.
int structural_cmp(const PlanarTree& a, const PlanarTree& b) {
  if (a.is_leaf() && b.is_leaf()) return 0;
  if (a.is_leaf()) return 1;
  if (b.is_leaf()) return -1;
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
    if (int c = structural_cmp(ca[i], cb[i]); c != 0) return c;
  if (ca.size() == cb.size()) return 0;
  return ca.size() > cb.size() ? -1 : 1;
}

}  // namespace

bool PlanarTree::operator<(const PlanarTree& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return structural_cmp(*this, o) < 0;
}

std::string PlanarTree::to_string() const {
  if (is_leaf()) return ".";
  std::string out = "(";
  for (std::size_t i = 0; i < rep_->children.size(); ++i) {
    if (i) out += ' ';
    out += rep_->children[i].to_string();
  }
  out += ')';
  return out;
}

namespace {

PlanarTree parse_tree(const std::string& text, std::size_t& i) {
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip();
  if (i >= text.size()) fail(Errc::ParseError, "unexpected end of tree: " + text);
  if (text[i] == '.') {
    ++i;
    return PlanarTree::leaf();
  }
  if (text[i] != '(') fail(Errc::ParseError, "expected '.' or '(' in tree: " + text);
  ++i;
  std::vector<PlanarTree> children;
  while (true) {
    skip();
    if (i >= text.size()) fail(Errc::ParseError, "unbalanced '(' in tree: " + text);
    if (text[i] == ')') {
      ++i;
      break;
    }
    children.push_back(parse_tree(text, i));
  }
  if (children.size() < 2) fail(Errc::ParseError, "vertex with fewer than two subtrees: " + text);
  return PlanarTree::node(std::move(children));
}

}  // namespace

PlanarTree PlanarTree::parse(const std::string& text) {
  std::size_t i = 0;
  PlanarTree t = parse_tree(text, i);
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size()) fail(Errc::ParseError, "trailing characters after tree: " + text);
  return t;
}

PlanarTree corolla(int n) {
  if (n < 1) fail(Errc::OutOfRange, "corolla needs n >= 1");
  return PlanarTree::node(std::vector<PlanarTree>(static_cast<std::size_t>(n) + 1));
}

bool is_binary(const PlanarTree& t) {
  if (t.is_leaf()) return true;
  if (t.arity() != 2) return false;
  for (auto& c : t.children())
    if (!is_binary(c)) return false;
  return true;
}

PlanarTree tree_wedge(std::vector<PlanarTree> parts) { return PlanarTree::node(std::move(parts)); }

std::vector<PlanarTree> tree_unwedge(const PlanarTree& t) { return t.children(); }

std::vector<PlanarTree> enumerate_trees(int n) {
  if (n < 0) fail(Errc::OutOfRange, "degree must be >= 0");
  if (n > kMaxTreeDegree)
    fail(Errc::CapExceeded, "tree degree above the ceiling " + std::to_string(kMaxTreeDegree));
  std::vector<std::vector<PlanarTree>> table(static_cast<std::size_t>(n) + 1);
  table[0] = {PlanarTree::leaf()};
  for (int d = 1; d <= n; ++d) {
    std::vector<PlanarTree>& out = table[static_cast<std::size_t>(d)];
    // d = sum of part degrees + number of junctions k, parts = k + 1.
    for (int k = 1; k <= d; ++k) {
      std::vector<PlanarTree> cur(static_cast<std::size_t>(k) + 1);
      std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == k + 1) {
          if (remaining == 0) out.push_back(PlanarTree::node(cur));
          return;
        }
        for (int part = 0; part <= remaining; ++part)
          for (auto& sub : table[static_cast<std::size_t>(part)]) {
            cur[static_cast<std::size_t>(slot)] = sub;
            rec(slot + 1, remaining - part);
          }
      };
      rec(0, d - k);
    }
    std::sort(out.begin(), out.end());
  }
  return table[static_cast<std::size_t>(n)];
}

namespace {

void collect_edges(const PlanarTree& t, std::vector<int>& path,
                   std::vector<std::vector<int>>& out) {
  if (t.is_leaf()) return;
  const auto& cs = t.children();
  for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
    path.push_back(i);
    if (!cs[static_cast<std::size_t>(i)].is_leaf()) {
      out.push_back(path);
      collect_edges(cs[static_cast<std::size_t>(i)], path, out);
    }
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> internal_edges(const PlanarTree& t) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  collect_edges(t, path, out);
  return out;
}

PlanarTree contract(const PlanarTree& t, const std::vector<int>& edge) {
  if (edge.empty() || t.is_leaf()) fail(Errc::NotInternalEdge, "bad edge address");
  const auto& cs = t.children();
  int i = edge.front();
  if (i < 0 || i >= static_cast<int>(cs.size())) fail(Errc::NotInternalEdge, "bad edge address");
  std::vector<PlanarTree> next(cs);
  if (edge.size() > 1) {
    next[static_cast<std::size_t>(i)] = contract(
        cs[static_cast<std::size_t>(i)], std::vector<int>(edge.begin() + 1, edge.end()));
    return PlanarTree::node(std::move(next));
  }
  const PlanarTree& child = cs[static_cast<std::size_t>(i)];
  if (child.is_leaf()) fail(Errc::NotInternalEdge, "edge does not end at a vertex");
  std::vector<PlanarTree> spliced;
  for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
    if (k == i)
      for (auto& g : child.children()) spliced.push_back(g);
    else
      spliced.push_back(cs[static_cast<std::size_t>(k)]);
  }
  return PlanarTree::node(std::move(spliced));
}

bool tree_inclusion_leq(const PlanarTree& t, const PlanarTree& z) {
  if (t.degree() != z.degree()) fail(Errc::SizeMismatch, "inclusion compares equal degrees");
  std::set<PlanarTree> seen{t};
  std::queue<PlanarTree> q;
  q.push(t);
  while (!q.empty()) {
    PlanarTree cur = q.front();
    q.pop();
    if (cur == z) return true;
    for (auto& e : internal_edges(cur)) {
      PlanarTree c = contract(cur, e);
      if (seen.insert(c).second) q.push(c);
    }
  }
  return false;
}

namespace {

std::vector<PlanarTree> replace_child(const std::vector<PlanarTree>& cs, std::size_t i,
                                      PlanarTree sub) {
  std::vector<PlanarTree> out(cs);
  out[i] = std::move(sub);
  return out;
}

}  // namespace

std::vector<std::pair<PlanarTree, Direction>> tree_bruhat_relations(const PlanarTree& t) {
  if (t.is_leaf()) fail(Errc::LeafHasNoRelations, "a leaf has no relations");
  std::vector<std::pair<PlanarTree, Direction>> out;
  const auto& cs = t.children();
  // 1: a step inside one subtree.
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_leaf()) continue;
    for (auto& [sub, d] : tree_bruhat_relations(cs[i]))
      out.emplace_back(PlanarTree::node(replace_child(cs, i, sub)), d);
  }
  // 2 upward: the first subtree opens into its parts.
  if (!cs.front().is_leaf()) {
    std::vector<PlanarTree> opened;
    for (auto& g : cs.front().children()) opened.push_back(g);
    opened.insert(opened.end(), cs.begin() + 1, cs.end());
    out.emplace_back(PlanarTree::node(std::move(opened)), Direction::Up);
  }
  // 2 downward: a proper prefix of >= 2 subtrees closes into one part.
  for (std::size_t p = 2; p < cs.size(); ++p) {
    std::vector<PlanarTree> grouped;
    grouped.push_back(PlanarTree::node(std::vector<PlanarTree>(cs.begin(), cs.begin() + static_cast<long>(p))));
    grouped.insert(grouped.end(), cs.begin() + static_cast<long>(p), cs.end());
    out.emplace_back(PlanarTree::node(std::move(grouped)), Direction::Down);
  }
  // 3 upward: a proper tail of >= 2 subtrees closes into one part.
  for (std::size_t b = 1; b + 2 <= cs.size(); ++b) {
    std::vector<PlanarTree> grouped(cs.begin(), cs.begin() + static_cast<long>(b));
    grouped.push_back(PlanarTree::node(std::vector<PlanarTree>(cs.begin() + static_cast<long>(b), cs.end())));
    out.emplace_back(PlanarTree::node(std::move(grouped)), Direction::Up);
  }
  // 3 downward: the last subtree opens into its parts.
  if (!cs.back().is_leaf()) {
    std::vector<PlanarTree> opened(cs.begin(), cs.end() - 1);
    for (auto& g : cs.back().children()) opened.push_back(g);
    out.emplace_back(PlanarTree::node(std::move(opened)), Direction::Down);
  }
  return out;
}

namespace {

// The rank-preserving step: the first subtree opens, its last part closes
// with all remaining subtrees into the new last part.
std::vector<std::pair<PlanarTree, Direction>> tree_c_relations(const PlanarTree& t) {
  if (t.is_leaf()) fail(Errc::LeafHasNoRelations, "a leaf has no relations");
  std::vector<std::pair<PlanarTree, Direction>> out;
  const auto& cs = t.children();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_leaf()) continue;
    for (auto& [sub, d] : tree_c_relations(cs[i]))
      out.emplace_back(PlanarTree::node(replace_child(cs, i, sub)), d);
  }
  if (!cs.front().is_leaf()) {
    const auto& parts = cs.front().children();
    std::vector<PlanarTree> tail{parts.back()};
    tail.insert(tail.end(), cs.begin() + 1, cs.end());
    std::vector<PlanarTree> next(parts.begin(), parts.end() - 1);
    next.push_back(PlanarTree::node(std::move(tail)));
    out.emplace_back(PlanarTree::node(std::move(next)), Direction::Up);
  }
  if (!cs.back().is_leaf()) {
    const auto& parts = cs.back().children();
    std::vector<PlanarTree> head(cs.begin(), cs.end() - 1);
    head.push_back(parts.front());
    std::vector<PlanarTree> prev{PlanarTree::node(std::move(head))};
    prev.insert(prev.end(), parts.begin() + 1, parts.end());
    out.emplace_back(PlanarTree::node(std::move(prev)), Direction::Down);
  }
  return out;
}

void inclusion_expansions(const PlanarTree& t, std::vector<PlanarTree>& out) {
  if (t.is_leaf()) return;
  const auto& cs = t.children();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_leaf()) continue;
    std::vector<PlanarTree> subs;
    inclusion_expansions(cs[i], subs);
    for (auto& s : subs) out.push_back(PlanarTree::node(replace_child(cs, i, s)));
  }
  // Group a consecutive run of >= 2 children under a new vertex, keeping at
  // least one child outside the run.
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (j - i + 1 == cs.size()) continue;
      std::vector<PlanarTree> grouped(cs.begin(), cs.begin() + static_cast<long>(i));
      grouped.push_back(PlanarTree::node(std::vector<PlanarTree>(
          cs.begin() + static_cast<long>(i), cs.begin() + static_cast<long>(j) + 1)));
      grouped.insert(grouped.end(), cs.begin() + static_cast<long>(j) + 1, cs.end());
      out.push_back(PlanarTree::node(std::move(grouped)));
    }
}

}  // namespace

std::vector<PlanarTree> tree_up_neighbors(const PlanarTree& t, OrderKind kind) {
  std::vector<PlanarTree> out;
  if (t.is_leaf()) return out;
  switch (kind) {
    case OrderKind::Inclusion:
      for (auto& e : internal_edges(t)) out.push_back(contract(t, e));
      break;
    case OrderKind::Bruhat:
      for (auto& [v, d] : tree_bruhat_relations(t))
        if (d == Direction::Up) out.push_back(v);
      break;
    case OrderKind::C:
      for (auto& [v, d] : tree_c_relations(t))
        if (d == Direction::Up) out.push_back(v);
      break;
  }
  return out;
}

std::vector<PlanarTree> tree_down_neighbors(const PlanarTree& t, OrderKind kind) {
  std::vector<PlanarTree> out;
  if (t.is_leaf()) return out;
  switch (kind) {
    case OrderKind::Inclusion:
      inclusion_expansions(t, out);
      break;
    case OrderKind::Bruhat:
      for (auto& [v, d] : tree_bruhat_relations(t))
        if (d == Direction::Down) out.push_back(v);
      break;
    case OrderKind::C:
      for (auto& [v, d] : tree_c_relations(t))
        if (d == Direction::Down) out.push_back(v);
      break;
  }
  return out;
}

bool tree_leq(const PlanarTree& a, const PlanarTree& b, OrderKind kind) {
  if (a.degree() != b.degree()) fail(Errc::SizeMismatch, "orders compare equal degrees");
  if (kind == OrderKind::Inclusion) return tree_inclusion_leq(a, b);
  if (a == b) return true;
  std::set<PlanarTree> seen{a};
  std::queue<PlanarTree> q;
  q.push(a);
  while (!q.empty()) {
    PlanarTree cur = q.front();
    q.pop();
    for (auto& x : tree_up_neighbors(cur, kind)) {
      if (x == b) return true;
      if (seen.insert(x).second) q.push(x);
    }
  }
  return false;
}

std::vector<PlanarTree> tree_interval(const PlanarTree& a, const PlanarTree& b, OrderKind kind) {
  if (a.degree() != b.degree()) fail(Errc::SizeMismatch, "orders compare equal degrees");
  std::vector<PlanarTree> out;
  if (kind == OrderKind::Inclusion) {
    if (!tree_inclusion_leq(a, b)) return out;
    for (auto& t : enumerate_trees(a.degree()))
      if (tree_inclusion_leq(a, t) && tree_inclusion_leq(t, b)) out.push_back(t);
    return out;
  }
  std::set<PlanarTree> up{a};
  {
    std::queue<PlanarTree> q;
    q.push(a);
    while (!q.empty()) {
      PlanarTree cur = q.front();
      q.pop();
      for (auto& x : tree_up_neighbors(cur, kind))
        if (up.insert(x).second) q.push(x);
    }
  }
  if (!up.count(b)) return out;
  std::set<PlanarTree> down{b};
  {
    std::queue<PlanarTree> q;
    q.push(b);
    while (!q.empty()) {
      PlanarTree cur = q.front();
      q.pop();
      for (auto& x : tree_down_neighbors(cur, kind))
        if (down.insert(x).second) q.push(x);
    }
  }
  for (auto& t : up)
    if (down.count(t)) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

Poset<PlanarTree> build_tree_order(int n, OrderKind kind, int cap) {
  if (n > cap || n > kMaxTreeDegree)
    fail(Errc::CapExceeded, "tree poset degree " + std::to_string(n) + " above cap");
  Poset<PlanarTree> poset;
  poset.elements = enumerate_trees(n);
  for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i)
    poset.index.emplace(poset.elements[static_cast<std::size_t>(i)], i);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i)
    for (auto& up : tree_up_neighbors(poset.elements[static_cast<std::size_t>(i)], kind))
      edges.emplace_back(i, poset.index.at(up));
  poset.diagram = HasseDiagram(static_cast<int>(poset.elements.size()), edges);
  return poset;
}

PlanarTree graft(const PlanarTree& t, int j, const PlanarTree& z) {
  if (j < 0 || j > z.degree()) fail(Errc::LeafIndexOutOfRange, "leaf index outside the tree");
  if (z.is_leaf()) return t;
  const auto& cs = z.children();
  int offset = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    int leaves = cs[i].degree() + 1;
    if (j < offset + leaves)
      return PlanarTree::node(replace_child(cs, i, graft(t, j - offset, cs[i])));
    offset += leaves;
  }
  fail(Errc::LeafIndexOutOfRange, "leaf index outside the tree");
}

PlanarTree over(const PlanarTree& t, const PlanarTree& z) { return graft(t, 0, z); }

PlanarTree under(const PlanarTree& t, const PlanarTree& z) { return graft(z, t.degree(), t); }

namespace {

void dot_rec(const PlanarTree& t, int parent, int& next, std::string& out) {
  int me = next++;
  out += "  n" + std::to_string(me) +
         (t.is_leaf() ? " [shape=none,label=\"\",width=0.05,height=0.05];\n"
                      : " [shape=point];\n");
  if (parent >= 0) out += "  n" + std::to_string(parent) + " -> n" + std::to_string(me) + ";\n";
  if (!t.is_leaf())
    for (auto& c : t.children()) dot_rec(c, me, next, out);
}

}  // namespace

std::string tree_to_dot(const PlanarTree& t) {
  std::string out = "digraph tree {\n  rankdir=TB;\n  edge [arrowhead=none];\n";
  int next = 0;
  dot_rec(t, -1, next, out);
  out += "}\n";
  return out;
}

}  // namespace bruhat
