#include "bruhat/hasse.hpp"

#include <algorithm>
#include <queue>

namespace bruhat {

HasseDiagram::HasseDiagram(int count, const std::vector<std::pair<int, int>>& generator_edges)
    : count_(count), words_(static_cast<std::size_t>((count + 63) / 64)) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
  std::vector<int> indeg(static_cast<std::size_t>(count), 0);
  {
    std::vector<std::pair<int, int>> edges(generator_edges);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto& [a, b] : edges) {
      if (a == b) { acyclic_ = false; continue; }
      adj[static_cast<std::size_t>(a)].push_back(b);
      ++indeg[static_cast<std::size_t>(b)];
    }
  }

  // Topological order; processing it back to front lets each row be the
  // union of its successors' rows.
  std::vector<int> topo;
  topo.reserve(static_cast<std::size_t>(count));
  std::queue<int> q;
  for (int i = 0; i < count; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) q.push(i);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    topo.push_back(a);
    for (int b : adj[static_cast<std::size_t>(a)])
      if (--indeg[static_cast<std::size_t>(b)] == 0) q.push(b);
  }
  if (static_cast<int>(topo.size()) != count) acyclic_ = false;

  rows_.assign(static_cast<std::size_t>(count) * words_, 0);
  if (acyclic_) {
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      int a = *it;
      auto* row = &rows_[static_cast<std::size_t>(a) * words_];
      for (int b : adj[static_cast<std::size_t>(a)]) {
        row[b >> 6] |= std::uint64_t{1} << (b & 63);
        const auto* src = &rows_[static_cast<std::size_t>(b) * words_];
        for (std::size_t wd = 0; wd < words_; ++wd) row[wd] |= src[wd];
      }
    }
  } else {
    // Cycles should not occur for the orders in this library; fall back to
    // plain BFS so the object stays queryable and tests can report.
    for (int s = 0; s < count; ++s) {
      std::vector<char> seen(static_cast<std::size_t>(count), 0);
      std::queue<int> bfs;
      bfs.push(s);
      while (!bfs.empty()) {
        int a = bfs.front();
        bfs.pop();
        for (int b : adj[static_cast<std::size_t>(a)])
          if (!seen[static_cast<std::size_t>(b)]) {
            seen[static_cast<std::size_t>(b)] = 1;
            set_reach(s, b);
            bfs.push(b);
          }
      }
    }
  }

  // Transitive reduction: a generator edge (a,b) is redundant iff some other
  // first step a -> c already reaches b.
  for (int a = 0; a < count; ++a)
    for (int b : adj[static_cast<std::size_t>(a)]) {
      bool cover = true;
      for (int c : adj[static_cast<std::size_t>(a)])
        if (c != b && reach(c, b)) { cover = false; break; }
      if (cover) covers_.emplace_back(a, b);
    }
  std::sort(covers_.begin(), covers_.end());
}

bool HasseDiagram::leq(int a, int b) const {
  if (a < 0 || b < 0 || a >= count_ || b >= count_) fail(Errc::UnknownElement, "index out of range");
  return a == b || reach(a, b);
}

std::vector<int> HasseDiagram::interval(int a, int b) const {
  std::vector<int> out;
  if (!leq(a, b)) return out;
  for (int x = 0; x < count_; ++x)
    if ((x == a || reach(a, x)) && (x == b || reach(x, b))) out.push_back(x);
  return out;
}

bool HasseDiagram::same_relation(const HasseDiagram& other) const {
  return count_ == other.count_ && rows_ == other.rows_;
}

}  // namespace bruhat
