#include "bruhat/projection.hpp"

#include <unordered_map>

#include "bruhat/shuffle.hpp"

namespace bruhat {

namespace {

PlanarTree to_tree_memo(const PackedWord& w,
                        std::unordered_map<PackedWord, PlanarTree, PackedWordHash>& memo) {
  if (w.empty()) return PlanarTree::leaf();
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  WedgeDecomposition d = wedge_decompose(w);
  std::vector<PlanarTree> parts;
  parts.reserve(d.parts.size());
  for (auto& p : d.parts) parts.push_back(to_tree_memo(p, memo));
  PlanarTree t = tree_wedge(std::move(parts));
  memo.emplace(w, t);
  return t;
}

}  // namespace

PlanarTree to_tree(const PackedWord& w) {
  std::unordered_map<PackedWord, PlanarTree, PackedWordHash> memo;  // per-call
  return to_tree_memo(w, memo);
}

PackedWord min_word(const PlanarTree& t) {
  if (t.is_leaf()) return PackedWord{};
  std::vector<PackedWord> parts;
  int total_rank = 0;
  for (auto& c : t.children()) {
    parts.push_back(min_word(c));
    total_rank += parts.back().rank();
  }
  return wedge(identity_word(total_rank), parts);
}

PackedWord max_word(const PlanarTree& t) {
  if (t.is_leaf()) return PackedWord{};
  std::vector<PackedWord> parts;
  std::vector<int> ranks;
  for (auto& c : t.children()) {
    parts.push_back(max_word(c));
    ranks.push_back(parts.back().rank());
  }
  return wedge(xi(Composition(std::move(ranks))), parts);
}

std::vector<PackedWord> fiber(const PlanarTree& t) {
  if (t.is_leaf()) return {PackedWord{}};
  return pword_interval(min_word(t), max_word(t), OrderKind::Bruhat);
}

bool order_transport_check(int n, OrderKind kind) {
  Poset<PackedWord> words = build_order(n, kind, kMaxPosetDegree);
  Poset<PlanarTree> trees = build_tree_order(n, kind, kMaxTreeDegree);

  std::vector<int> image(words.elements.size());
  for (std::size_t i = 0; i < words.elements.size(); ++i)
    image[i] = trees.index_of(to_tree(words.elements[i]));

  // (a) monotonicity over the generating relation of the word order.
  std::vector<std::pair<int, int>> pushed;
  for (std::size_t i = 0; i < words.elements.size(); ++i) {
    const PackedWord& w = words.elements[i];
    if (w.empty()) continue;
    for (auto& up : up_neighbors(w, kind)) {
      int j = words.index_of(up);
      if (!trees.diagram.leq(image[i], image[static_cast<std::size_t>(j)])) return false;
      pushed.emplace_back(image[i], image[static_cast<std::size_t>(j)]);
    }
  }

  // (b) the pushed-forward relation generates exactly the tree order.
  HasseDiagram induced(static_cast<int>(trees.elements.size()), pushed);
  return induced.same_relation(trees.diagram);
}

}  // namespace bruhat
