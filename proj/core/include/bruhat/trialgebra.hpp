#pragma once

#include <optional>
#include <string>

#include "bruhat/lincomb.hpp"
#include "bruhat/packed_word.hpp"
#include "bruhat/planar_tree.hpp"
#include "bruhat/projection.hpp"

namespace bruhat {

// The three operations splitting the associative product, plus their sum.
enum class TriOp { Succ, Dot, Prec, Star };

// Star of basis words admits the empty word as a two-sided unit; the three
// partial operations do not and raise UnitUndefined instead.
enum class PwordMethod {
  Shuffle,   // sum over the matching split of the binary shuffles
  Interval,  // sum over a Bruhat interval with explicit endpoints
};

enum class TreeMethod {
  Fiber,      // transport the word products through the projection
  Recursion,  // structural recursion on wedges
  Interval,   // sum over a tree Bruhat interval
};

LinComb<PackedWord> pword_product(const PackedWord& a, const PackedWord& b, TriOp op,
                                  PwordMethod method = PwordMethod::Shuffle);
LinComb<PackedWord> pword_product(const LinComb<PackedWord>& a, const LinComb<PackedWord>& b,
                                  TriOp op, PwordMethod method = PwordMethod::Shuffle);

LinComb<PlanarTree> tree_product(const PlanarTree& a, const PlanarTree& b, TriOp op,
                                 TreeMethod method = TreeMethod::Recursion);
LinComb<PlanarTree> tree_product(const LinComb<PlanarTree>& a, const LinComb<PlanarTree>& b,
                                 TriOp op, TreeMethod method = TreeMethod::Recursion);

// The image of any fiber pair under cross is over(t, z); under the maximal
// shuffle it is under(t, z).
bool over_under_check(const PlanarTree& t, const PlanarTree& z);

enum class Basis { PWord, Tree };

struct AxiomsReport {
  long long triples = 0;
  std::optional<std::string> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

// The seven defining identities, checked on all basis triples of total
// degree <= degree_cap with every argument non-unit.
AxiomsReport axioms_check(Basis basis, int degree_cap);

struct SpanReport {
  int rank_found = 0;
  int expected = 0;  // the number of trees of that degree
  bool ok() const { return rank_found == expected; }
};

// Rank over the rationals of all degree-n bracketings of the one-vertex
// generator under the three operations. Capped at n <= 4.
SpanReport freeness_span_check(int n);

}  // namespace bruhat
