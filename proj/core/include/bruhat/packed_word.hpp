#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bruhat/error.hpp"

namespace bruhat {

// A packed word of degree n and rank r is a surjection {1..n} -> {1..r},
// stored as its value sequence. The empty word (n = r = 0) is a first-class
// value: it is the unit for `cross` and absorbs mismatched compositions.
// Packed words of degree n index the faces of the (n-1)-permutahedron.
class PackedWord {
 public:
  PackedWord() = default;  // the empty word

  // Validates that `values` is packed (image an initial segment of Z>0).
  static PackedWord make(std::vector<int> values);

  // Trusted constructor for values already known to be packed.
  static PackedWord unchecked(std::vector<int> values);

  int degree() const { return static_cast<int>(values_.size()); }
  int rank() const { return rank_; }
  bool empty() const { return values_.empty(); }
  bool is_permutation() const { return rank_ == degree(); }

  // 1-based application gamma(i).
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const { return values_; }

  // Positions (1-based, increasing) with value v.
  std::vector<int> fiber(int v) const;

  bool operator==(const PackedWord& o) const { return values_ == o.values_; }
  // Canonical order: degree first, then lexicographic on values.
  std::strong_ordering operator<=>(const PackedWord& o) const;

  std::string to_string() const;           // e.g. "[2,1,2]"; empty word is "[]"
  static PackedWord parse(const std::string& text);

 private:
  std::vector<int> values_;
  int rank_ = 0;
};

struct PackedWordHash {
  std::size_t operator()(const PackedWord& w) const noexcept;
};

// A composition: finite sequence of non-negative integers. Zero parts are
// meaningful (empty wedge slots, empty shuffle blocks).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  int sum() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }  // 0-based
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Composition& o) const = default;

  std::string to_string() const;  // e.g. "1,2,0"
  static Composition parse(const std::string& text);

 private:
  std::vector<int> parts_;
};

// A parabolic right coset S_{n1,...,nr} o sigma, in its packed-word
// incarnation: block sizes plus the minimal-length representative.
struct Coclass {
  Composition blocks;  // strictly positive parts summing to the degree
  PackedWord perm;     // minimal-length coset representative
};

// --- constructors of named elements ------------------------------------

PackedWord identity_word(int n);   // 1_n
PackedWord t_map(int i, int n);    // the rank-lowering word: j for j<=i, j-1 after
PackedWord s_map(int i, int n);    // adjacent transposition, as a word
PackedWord longest_word(int n);    // (n, n-1, ..., 1)
PackedWord one_block(int n);       // (1, 1, ..., 1)

// --- monoid operations ---------------------------------------------------

// Pointwise composition: defined when outer.degree() == inner.rank(),
// otherwise the empty word.
PackedWord compose(const PackedWord& outer, const PackedWord& inner);

// Concatenation with the right factor shifted up by left.rank().
PackedWord cross(const PackedWord& left, const PackedWord& right);

PackedWord invert(const PackedWord& permutation);  // NotPermutation otherwise

// --- structure -----------------------------------------------------------

struct MonotoneFactorization {
  PackedWord nondecreasing;  // the sorted word
  PackedWord sigma;          // minimal permutation with nondecreasing o sigma == input
};

// gamma = gamma' o sigma with gamma' weakly increasing and sigma of minimal
// length; minimality is equivalent to sigma increasing inside each fiber.
MonotoneFactorization monotone_factorize(const PackedWord& w);

Coclass to_coclass(const PackedWord& w);
PackedWord from_coclass(const Coclass& c);

// All permutations tau with sorted(w) o tau == w; this is the coset
// S_{n1,...,nr} o sigma realized as a set. Size = prod of fiber factorials.
std::vector<PackedWord> coclass_elements(const PackedWord& w);

// --- enumeration ---------------------------------------------------------

// All packed words of degree n in lexicographic order on the value sequence.
std::vector<PackedWord> enumerate_pwords(int n);
std::vector<PackedWord> enumerate_pwords_rank(int n, int r);

// Number of pairs i < j with w(i) > w(j); requires a permutation.
int inversions(const PackedWord& w);

}  // namespace bruhat
