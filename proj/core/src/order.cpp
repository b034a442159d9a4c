#include "bruhat/order.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_set>

namespace bruhat {

FiberOrder fiber_order(const PackedWord& w, int i) {
  int min_i1 = 0, max_i = 0;  // positions
  int min_i = 0, max_i1 = 0;
  for (int p = 1; p <= w.degree(); ++p) {
    int v = w(p);
    if (v == i) {
      if (!min_i) min_i = p;
      max_i = p;
    } else if (v == i + 1) {
      if (!min_i1) min_i1 = p;
      max_i1 = p;
    }
  }
  if (max_i < min_i1) return FiberOrder::Ordered;
  if (max_i1 < min_i) return FiberOrder::Reversed;
  return FiberOrder::Mixed;
}

std::vector<std::pair<PackedWord, Direction>> bruhat_relations(const PackedWord& w) {
  if (w.empty()) fail(Errc::EmptyWord, "the empty word has no relations");
  std::vector<std::pair<PackedWord, Direction>> out;
  for (int i = 1; i <= w.rank() - 1; ++i) {
    FiberOrder f = fiber_order(w, i);
    if (f == FiberOrder::Mixed) continue;
    PackedWord m = compose(t_map(i, w.rank()), w);
    out.emplace_back(std::move(m), f == FiberOrder::Ordered ? Direction::Up : Direction::Down);
  }
  return out;
}

std::vector<std::pair<PackedWord, Direction>> c_relations(const PackedWord& w) {
  if (w.empty()) fail(Errc::EmptyWord, "the empty word has no relations");
  std::vector<std::pair<PackedWord, Direction>> out;
  for (int i = 1; i <= w.rank() - 1; ++i) {
    FiberOrder f = fiber_order(w, i);
    if (f == FiberOrder::Mixed) continue;
    PackedWord m = compose(s_map(i, w.rank()), w);
    out.emplace_back(std::move(m), f == FiberOrder::Ordered ? Direction::Up : Direction::Down);
  }
  return out;
}

namespace {

// Words obtained by splitting the fiber of value v into a prefix and a
// suffix; `prefix_high` puts the new value v+1 on the prefix (the refinement
// then sits above w in the Bruhat order), otherwise on the suffix (below).
void fiber_splits(const PackedWord& w, bool prefix_high, std::vector<PackedWord>& out) {
  for (int v = 1; v <= w.rank(); ++v) {
    std::vector<int> fib = w.fiber(v);
    if (fib.size() < 2) continue;
    for (std::size_t cut = 1; cut < fib.size(); ++cut) {
      std::vector<int> nv(w.values());
      for (int& x : nv)
        if (x > v) ++x;
      for (std::size_t k = 0; k < fib.size(); ++k) {
        bool high = prefix_high ? (k < cut) : (k >= cut);
        nv[static_cast<std::size_t>(fib[k] - 1)] = high ? v + 1 : v;
      }
      out.push_back(PackedWord::unchecked(std::move(nv)));
    }
  }
}

}  // namespace

std::vector<PackedWord> up_neighbors(const PackedWord& w, OrderKind kind) {
  std::vector<PackedWord> out;
  if (w.empty()) return out;
  switch (kind) {
    case OrderKind::Inclusion:
      for (int i = 1; i <= w.rank() - 1; ++i) out.push_back(compose(t_map(i, w.rank()), w));
      break;
    case OrderKind::Bruhat:
      for (auto& [v, d] : bruhat_relations(w))
        if (d == Direction::Up) out.push_back(v);
      fiber_splits(w, /*prefix_high=*/true, out);
      break;
    case OrderKind::C:
      for (auto& [v, d] : c_relations(w))
        if (d == Direction::Up) out.push_back(v);
      break;
  }
  return out;
}

std::vector<PackedWord> down_neighbors(const PackedWord& w, OrderKind kind) {
  std::vector<PackedWord> out;
  if (w.empty()) return out;
  switch (kind) {
    case OrderKind::Inclusion: {
      // Refinements: every split of one fiber into two non-empty classes.
      const int r = w.rank();
      for (int v = 1; v <= r; ++v) {
        std::vector<int> fib = w.fiber(v);
        if (fib.size() < 2) continue;
        for (unsigned mask = 1; mask + 1 < (1u << fib.size()); ++mask) {
          std::vector<int> nv(w.values());
          for (int& x : nv)
            if (x > v) ++x;
          for (std::size_t k = 0; k < fib.size(); ++k)
            nv[static_cast<std::size_t>(fib[k] - 1)] = (mask >> k & 1) ? v + 1 : v;
          out.push_back(PackedWord::unchecked(std::move(nv)));
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
    }
    case OrderKind::Bruhat:
      for (auto& [v, d] : bruhat_relations(w))
        if (d == Direction::Down) out.push_back(v);
      fiber_splits(w, /*prefix_high=*/false, out);
      break;
    case OrderKind::C:
      for (auto& [v, d] : c_relations(w))
        if (d == Direction::Down) out.push_back(v);
      break;
  }
  return out;
}

bool inclusion_leq(const PackedWord& w, const PackedWord& v) {
  if (w.degree() != v.degree()) fail(Errc::SizeMismatch, "inclusion compares equal degrees");
  for (int j = 1; j <= w.degree(); ++j)
    for (int k = 1; k <= w.degree(); ++k) {
      if (w(j) == w(k) && v(j) != v(k)) return false;
      if (w(j) < w(k) && v(j) > v(k)) return false;
    }
  return true;
}

namespace {

void check_search_degree(const PackedWord& a) {
  if (a.degree() > kMaxSearchDegree)
    fail(Errc::CapExceeded, "degree above the search ceiling " + std::to_string(kMaxSearchDegree));
}

using WordSet = std::unordered_set<PackedWord, PackedWordHash>;

WordSet reachable(const PackedWord& from, OrderKind kind, bool upward) {
  WordSet seen{from};
  std::queue<PackedWord> q;
  q.push(from);
  while (!q.empty()) {
    PackedWord w = q.front();
    q.pop();
    auto next = upward ? up_neighbors(w, kind) : down_neighbors(w, kind);
    for (auto& x : next)
      if (seen.insert(x).second) q.push(x);
  }
  return seen;
}

}  // namespace

bool pword_leq(const PackedWord& a, const PackedWord& b, OrderKind kind) {
  if (a.degree() != b.degree()) fail(Errc::SizeMismatch, "orders compare equal degrees");
  check_search_degree(a);
  if (a == b) return true;
  if (kind == OrderKind::Inclusion) return inclusion_leq(a, b);
  if (kind == OrderKind::C && a.rank() != b.rank()) return false;
  WordSet seen{a};
  std::queue<PackedWord> q;
  q.push(a);
  while (!q.empty()) {
    PackedWord w = q.front();
    q.pop();
    for (auto& x : up_neighbors(w, kind)) {
      if (x == b) return true;
      if (seen.insert(x).second) q.push(x);
    }
  }
  return false;
}

std::vector<PackedWord> pword_interval(const PackedWord& a, const PackedWord& b, OrderKind kind) {
  if (a.degree() != b.degree()) fail(Errc::SizeMismatch, "orders compare equal degrees");
  check_search_degree(a);
  std::vector<PackedWord> out;
  if (kind == OrderKind::Inclusion) {
    if (!inclusion_leq(a, b)) return out;
    for (auto& w : enumerate_pwords(a.degree()))
      if (inclusion_leq(a, w) && inclusion_leq(w, b)) out.push_back(w);
    return out;
  }
  WordSet up = reachable(a, kind, true);
  if (!up.count(b)) return out;
  WordSet down = reachable(b, kind, false);
  for (auto& w : up)
    if (down.count(w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

Poset<PackedWord> build_order(int n, OrderKind kind, int cap) {
  if (n > cap || n > kMaxPosetDegree)
    fail(Errc::CapExceeded, "poset degree " + std::to_string(n) + " above cap");
  Poset<PackedWord> poset;
  poset.elements = enumerate_pwords(n);
  for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i)
    poset.index.emplace(poset.elements[static_cast<std::size_t>(i)], i);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i) {
    const PackedWord& w = poset.elements[static_cast<std::size_t>(i)];
    if (w.empty()) continue;
    auto add = [&](const PackedWord& to, Direction d) {
      int j = poset.index.at(to);
      if (d == Direction::Up)
        edges.emplace_back(i, j);
      else
        edges.emplace_back(j, i);
    };
    switch (kind) {
      case OrderKind::Inclusion:
        for (int t = 1; t <= w.rank() - 1; ++t) add(compose(t_map(t, w.rank()), w), Direction::Up);
        break;
      case OrderKind::Bruhat:
        for (auto& [v, d] : bruhat_relations(w)) add(v, d);
        break;
      case OrderKind::C:
        for (auto& [v, d] : c_relations(w)) add(v, d);
        break;
    }
  }
  poset.diagram = HasseDiagram(static_cast<int>(poset.elements.size()), edges);
  return poset;
}

bool shuffle_downset_check(const Composition& c) {
  PackedWord top = xi(c);
  check_search_degree(top);
  std::set<PackedWord> downset;
  for (auto& w : reachable(top, OrderKind::Bruhat, false)) downset.insert(w);
  std::set<PackedWord> sh;
  for (auto& w : enumerate_sh(c)) sh.insert(w);
  return downset == sh;
}

bool coclass_interval_check(const PackedWord& w) {
  if (w.empty()) fail(Errc::EmptyWord, "needs a non-empty word");
  check_search_degree(w);
  std::vector<PackedWord> target = coclass_elements(w);
  std::set<PackedWord> containment;
  for (auto& d : enumerate_pwords(w.degree())) {
    std::vector<PackedWord> elems = coclass_elements(d);
    if (std::includes(target.begin(), target.end(), elems.begin(), elems.end()))
      containment.insert(d);
  }

  Coclass c = to_coclass(w);
  PackedWord omega_j;  // blockwise longest element
  for (int b = 0; b < c.blocks.length(); ++b) omega_j = cross(omega_j, longest_word(c.blocks[b]));
  PackedWord lo = c.perm;
  PackedWord hi = compose(omega_j, c.perm);
  std::set<PackedWord> interval;
  for (auto& x : pword_interval(lo, hi, OrderKind::Bruhat)) interval.insert(x);
  return containment == interval;
}

namespace {

// All tuples of packed words with prescribed degrees.
void word_tuples(const std::vector<int>& degrees,
                 const std::function<void(const std::vector<PackedWord>&)>& visit) {
  std::vector<std::vector<PackedWord>> pools;
  for (int d : degrees) pools.push_back(enumerate_pwords(d));
  std::vector<PackedWord> cur(degrees.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == degrees.size()) {
      visit(cur);
      return;
    }
    for (auto& w : pools[i]) {
      cur[i] = w;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

CheckReport monotonicity_checks(int cap) {
  CheckReport report;

  // Cross products: factorwise comparability is preserved.
  for (int n = 1; n < cap && report.ok; ++n)
    for (int m = 1; n + m <= cap && report.ok; ++m) {
      Poset<PackedWord> pn = build_order(n, OrderKind::Bruhat, cap);
      for (auto& a : pn.elements)
        for (auto& b : pn.elements) {
          if (!pn.leq(a, b)) continue;
          for (auto& t : enumerate_pwords(m)) {
            ++report.instances;
            if (!pword_leq(cross(a, t), cross(b, t), OrderKind::Bruhat) ||
                !pword_leq(cross(t, a), cross(t, b), OrderKind::Bruhat)) {
              report.record_failure("cross monotonicity at " + a.to_string() + " <= " +
                                    b.to_string() + " with " + t.to_string());
            }
          }
        }
    }

  // Post-composition by comparable shuffles, and the same through wedges.
  for (int total = 0; total <= cap - 1 && report.ok; ++total) {
    for (int k = 2; k <= 3 && report.ok; ++k) {
      std::vector<std::vector<int>> degree_tuples;
      std::vector<int> cur(static_cast<std::size_t>(k));
      std::function<void(int, int)> gen = [&](int i, int rest) {
        if (i == k) {
          if (rest == 0) degree_tuples.push_back(cur);
          return;
        }
        for (int d = 0; d <= rest; ++d) {
          cur[static_cast<std::size_t>(i)] = d;
          gen(i + 1, rest - d);
        }
      };
      gen(0, total);
      for (auto& degs : degree_tuples) {
        word_tuples(degs, [&](const std::vector<PackedWord>& parts) {
          if (!report.ok) return;
          std::vector<int> ranks;
          for (auto& p : parts) ranks.push_back(p.rank());
          Composition rc{std::vector<int>(ranks)};
          auto shuffles = enumerate_sh(rc);
          PackedWord prod;
          for (auto& p : parts) prod = cross(prod, p);
          for (auto& w1 : shuffles)
            for (auto& w2 : shuffles) {
              if (w1.empty() || !pword_leq(w1, w2, OrderKind::Bruhat)) continue;
              ++report.instances;
              if (!pword_leq(compose(w1, prod), compose(w2, prod), OrderKind::Bruhat))
                report.record_failure("shuffle post-composition at " + w1.to_string() + " <= " +
                                      w2.to_string());
              if (!pword_leq(wedge(w1, parts), wedge(w2, parts), OrderKind::Bruhat))
                report.record_failure("wedge monotonicity in omega at " + w1.to_string() +
                                      " <= " + w2.to_string());
            }
        });
      }
    }
  }

  // Single-part wedge steps over a permutation shuffle with consecutive
  // values at the affected slots.
  for (int total = 1; total <= cap - 1 && report.ok; ++total) {
    std::vector<std::vector<int>> degree_tuples;
    std::vector<int> cur(2);
    for (int d0 = 0; d0 <= total; ++d0) {
      cur[0] = d0;
      cur[1] = total - d0;
      degree_tuples.push_back(cur);
    }
    for (auto& degs : degree_tuples) {
      word_tuples(degs, [&](const std::vector<PackedWord>& parts) {
        if (!report.ok) return;
        std::vector<int> ranks;
        for (auto& p : parts) ranks.push_back(p.rank());
        Composition rc{std::vector<int>(ranks)};
        for (auto& w : enumerate_sh(rc)) {
          if (!w.is_permutation()) continue;
          int offset = 0;
          for (std::size_t l = 0; l < parts.size(); ++l) {
            const PackedWord& g = parts[l];
            for (int j = 1; j <= g.rank() - 1; ++j) {
              if (w(offset + j + 1) != w(offset + j) + 1) continue;
              FiberOrder f = fiber_order(g, j);
              if (f == FiberOrder::Mixed) continue;
              // Consecutive values at slots j, j+1 of block l collapse into
              // a wedge over one fewer slot, with the part absorbing t_j.
              WedgeDecomposition moved = tj_into_wedge(w(offset + j), w, parts);
              ++report.instances;
              bool good =
                  f == FiberOrder::Ordered
                      ? pword_leq(wedge(w, parts), wedge(moved.omega, moved.parts),
                                  OrderKind::Bruhat)
                      : pword_leq(wedge(moved.omega, moved.parts), wedge(w, parts),
                                  OrderKind::Bruhat);
              if (!good)
                report.record_failure("wedge part step at omega=" + w.to_string() +
                                      " part=" + g.to_string() + " j=" + std::to_string(j));
            }
            offset += ranks[l];
          }
        }
      });
    }
  }

  return report;
}

}  // namespace bruhat
