#pragma once

#include <vector>

#include "bruhat/packed_word.hpp"
#include "bruhat/planar_tree.hpp"

namespace bruhat {

// The degree-preserving surjection from packed words onto planar trees:
// the empty word maps to the leaf, and a wedge maps to the wedge of the
// images of its parts (the connecting shuffle is forgotten).
PlanarTree to_tree(const PackedWord& w);

// Endpoints of the preimage of t: the wedge over the identity shuffle of the
// parts' minima, respectively over the maximal shuffle of the parts' maxima.
PackedWord min_word(const PlanarTree& t);
PackedWord max_word(const PlanarTree& t);

// The preimage of t, served as the Bruhat interval [min_word, max_word].
std::vector<PackedWord> fiber(const PlanarTree& t);

// On degree n: (a) the projection is monotone for the chosen order, and
// (b) the relation pushed forward along it regenerates the tree order.
bool order_transport_check(int n, OrderKind kind);

}  // namespace bruhat
