#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bruhat/error.hpp"

namespace bruhat {

// A finite poset presented by generating relations on indexed elements.
// Construction computes the reflexive-transitive closure and the transitive
// reduction (the cover relation); all queries are then table lookups.
class HasseDiagram {
 public:
  HasseDiagram() = default;
  HasseDiagram(int count, const std::vector<std::pair<int, int>>& generator_edges);

  int size() const { return count_; }
  bool acyclic() const { return acyclic_; }

  bool leq(int a, int b) const;                 // reflexive reachability
  std::vector<int> interval(int a, int b) const;  // { x : a <= x <= b }, ascending indices
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // True iff both diagrams present the same relation on the same index set.
  bool same_relation(const HasseDiagram& other) const;

 private:
  bool reach(int a, int b) const {
    return rows_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b >> 6)] >>
               (b & 63) &
           1u;
  }
  void set_reach(int a, int b) {
    rows_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b >> 6)] |=
        std::uint64_t{1} << (b & 63);
  }

  int count_ = 0;
  std::size_t words_ = 0;
  bool acyclic_ = true;
  std::vector<std::uint64_t> rows_;  // closure bitsets, row-major, excludes self
  std::vector<std::pair<int, int>> covers_;
};

// A poset over concrete elements: canonical element list plus the diagram.
template <typename T>
struct Poset {
  std::vector<T> elements;  // sorted canonically; indices refer to this list
  std::map<T, int> index;
  HasseDiagram diagram;

  int index_of(const T& x) const {
    auto it = index.find(x);
    if (it == index.end()) fail(Errc::UnknownElement, "element not in poset");
    return it->second;
  }
  bool leq(const T& a, const T& b) const { return diagram.leq(index_of(a), index_of(b)); }
  std::vector<T> interval(const T& a, const T& b) const {
    std::vector<T> out;
    for (int i : diagram.interval(index_of(a), index_of(b)))
      out.push_back(elements[static_cast<std::size_t>(i)]);
    return out;
  }
};

}  // namespace bruhat
