#pragma once

#include <utility>
#include <vector>

#include "bruhat/hasse.hpp"
#include "bruhat/packed_word.hpp"
#include "bruhat/shuffle.hpp"

namespace bruhat {

// The three partial orders carried by the packed words of a fixed degree.
//  Inclusion: w <= t_i o w for every i (coarsening of faces).
//  Bruhat:    w <  t_i o w when the fiber of i precedes the fiber of i+1,
//             t_i o w < w when it follows; nothing when they interleave.
//  C:         w <= s_i o w (values i, i+1 exchanged) when the fiber of i
//             precedes the fiber of i+1. Preserves rank.
enum class OrderKind { Inclusion, Bruhat, C };

enum class Direction { Up, Down };

// How the fibers of two consecutive values sit relative to each other.
enum class FiberOrder { Ordered, Reversed, Mixed };
FiberOrder fiber_order(const PackedWord& w, int i);

// The generating Bruhat relations at w: (t_i o w, Up) when w < t_i o w,
// (t_i o w, Down) when t_i o w < w.
std::vector<std::pair<PackedWord, Direction>> bruhat_relations(const PackedWord& w);

// Same for the rank-preserving order.
std::vector<std::pair<PackedWord, Direction>> c_relations(const PackedWord& w);

// One-step neighbours in the chosen order, complete in both directions
// (used for on-demand reachability without materializing the poset).
std::vector<PackedWord> up_neighbors(const PackedWord& w, OrderKind kind);
std::vector<PackedWord> down_neighbors(const PackedWord& w, OrderKind kind);

// w <= v in the inclusion order, decided directly: equal fibers may merge
// and the order of distinct values may not reverse.
bool inclusion_leq(const PackedWord& w, const PackedWord& v);

// Reachability / closed interval, via search. Degrees above kMaxSearchDegree
// are refused (CapExceeded).
inline constexpr int kMaxSearchDegree = 8;
bool pword_leq(const PackedWord& a, const PackedWord& b, OrderKind kind);
std::vector<PackedWord> pword_interval(const PackedWord& a, const PackedWord& b, OrderKind kind);

// Materialized poset on all of P_n. Hard ceiling 7 (the degree-7 diagram is
// slow but fits; degree 8 does not).
inline constexpr int kMaxPosetDegree = 7;
Poset<PackedWord> build_order(int n, OrderKind kind, int cap = 6);

// SH(c) equals the Bruhat down-set of xi(c).
bool shuffle_downset_check(const Composition& c);

// Coset containment realized on sets of permutations equals the Bruhat
// interval from the minimal representative to the parabolic-longest shift.
bool coclass_interval_check(const PackedWord& w);

struct CheckReport {
  bool ok = true;
  long long instances = 0;
  std::string counterexample;
  void record_failure(const std::string& what) {
    if (ok) counterexample = what;
    ok = false;
  }
};

// Exhaustive monotonicity sweeps at total degree <= cap:
//  cross products, post-composition by comparable shuffles, wedges in the
//  shuffle slot, and single-part wedge steps.
CheckReport monotonicity_checks(int cap);

}  // namespace bruhat
