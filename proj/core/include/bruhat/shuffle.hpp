#pragma once

#include <utility>
#include <vector>

#include "bruhat/packed_word.hpp"

namespace bruhat {

// SH(n1,...,nr) is the set of packed words strictly increasing on each
// consecutive block. For binary types the set splits three ways by comparing
// the last letter of each block; an empty block loses the comparison, so
// SH(0,m) is all Greater and SH(n,0) all Less, matching the unit behaviour
// of the three products.
enum class ShuffleSplit { Greater, Bullet, Less, All };

// True iff w is strictly increasing on each block of c. Requires
// c.sum() == w.degree().
bool is_shuffle(const PackedWord& w, const Composition& c);

// Split membership for a two-part composition (a, b) with a + b == degree.
ShuffleSplit split_of(const PackedWord& w, int a, int b);

// All elements of SH(c), filtered by `split` when c has two parts,
// in canonical order. SplitUnsupported if split != All and c is not binary.
std::vector<PackedWord> enumerate_sh(const Composition& c, ShuffleSplit split = ShuffleSplit::All);

// SH(c) restricted to rank r.
std::vector<PackedWord> enumerate_sh_rank(const Composition& c, int r);

// The maximal shuffle of type c: blocks of consecutive values placed in
// reverse order. A permutation of degree c.sum().
PackedWord xi(const Composition& c);

// The connecting permutation with xi(c) == xi(merge(c,k)) o alpha(c,k),
// where merge(c,k) adds parts k and k+1 (1-based k).
PackedWord alpha(const Composition& c, int k);

struct ShFactorization {
  PackedWord connector;  // element of SH(i, j), degree i + j
  PackedWord left;       // packed restriction to positions 1..p
  PackedWord right;      // packed restriction to positions p+1..n
};

// Unique factorization w = connector o (left x right) at cut position p.
ShFactorization sh_factorize(const PackedWord& w, int p);

// Multiway version over the position blocks of c; the connector lies in
// SH(rank(left_0), ..., rank(left_k)).
std::pair<PackedWord, std::vector<PackedWord>> sh_factorize_blocks(const PackedWord& w,
                                                                   const Composition& c);

// z(n0,...,nk): runs of 1..n split by the blocks, with the new maximal
// value n+1 inserted at each of the k junctions. Degree n+k, rank n+1.
PackedWord z_word(const Composition& c);

// The wedge of parts over a shuffle of their ranks:
//   (omega o (g0 x ... x gk) x 1_1) o z(n0,...,nk).
// Needs >= 2 parts and omega in SH(rank g0, ..., rank gk).
PackedWord wedge(const PackedWord& omega, const std::vector<PackedWord>& parts);

struct WedgeDecomposition {
  PackedWord omega;
  std::vector<PackedWord> parts;
};

// Inverse of `wedge`: the positions of the maximal value cut the word into
// blocks; unique for every non-empty word.
WedgeDecomposition wedge_decompose(const PackedWord& w);

// Rewrites t_j o wedge(omega, parts) as a wedge: either t_j o omega is still
// a shuffle of the same type (parts unchanged), or the blocks containing both
// values j and j+1 each lose a slot and their parts absorb a t-step.
// Valid for 1 <= j <= rank(omega) - 1; the top merge j = rank(omega) is the
// caller's business (plain composition plus re-decomposition).
WedgeDecomposition tj_into_wedge(int j, const PackedWord& omega,
                                 const std::vector<PackedWord>& parts);

// SH(n,m,r) computed three ways (directly and through each bracketing)
// must coincide and each union must be multiplicity-free.
bool sh_associativity_check(int n, int m, int r);

// The seven splitting identities relating the Greater/Bullet/Less parts of
// iterated binary shuffles.
bool sh_split_identities_check(int n, int m, int r);

// The three multi-block shuffle identities; sweeps all block tuples with
// entry sums <= cap and at most three parts per side.
bool varios_identities_check(int cap);

// Individual multi-block identities, exposed for targeted tests.
bool multi_identity1(int r, const Composition& s);
bool multi_identity2(const Composition& r, const Composition& s);
bool multi_identity3(const Composition& r, int s);

}  // namespace bruhat
