#include "bruhat/shuffle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace bruhat {

bool is_shuffle(const PackedWord& w, const Composition& c) {
  if (c.sum() != w.degree()) fail(Errc::SizeMismatch, "composition does not sum to the degree");
  int pos = 1;
  for (int b = 0; b < c.length(); ++b) {
    for (int k = 1; k < c[b]; ++k)
      if (w(pos + k - 1) >= w(pos + k)) return false;
    pos += c[b];
  }
  return true;
}

ShuffleSplit split_of(const PackedWord& w, int a, int b) {
  assert(a >= 0 && b >= 0 && a + b == w.degree());
  if (a == 0 && b == 0) return ShuffleSplit::Bullet;
  if (a == 0) return ShuffleSplit::Greater;
  if (b == 0) return ShuffleSplit::Less;
  int x = w(a), y = w(a + b);
  if (x < y) return ShuffleSplit::Greater;
  if (x == y) return ShuffleSplit::Bullet;
  return ShuffleSplit::Less;
}

std::vector<PackedWord> enumerate_sh(const Composition& c, ShuffleSplit split) {
  if (split != ShuffleSplit::All && c.length() != 2)
    fail(Errc::SplitUnsupported, "splits are only defined for two-part compositions");
  std::vector<PackedWord> out;
  for (auto& w : enumerate_pwords(c.sum())) {
    if (!is_shuffle(w, c)) continue;
    if (split != ShuffleSplit::All && split_of(w, c[0], c[1]) != split) continue;
    out.push_back(w);
  }
  return out;
}

std::vector<PackedWord> enumerate_sh_rank(const Composition& c, int r) {
  std::vector<PackedWord> out;
  for (auto& w : enumerate_sh(c))
    if (w.rank() == r) out.push_back(w);
  return out;
}

PackedWord xi(const Composition& c) {
  const int n = c.sum();
  std::vector<int> v(static_cast<std::size_t>(n));
  int before = 0;                  // positions consumed by earlier blocks
  int after = n;                   // total size of later blocks (updated per block)
  for (int b = 0; b < c.length(); ++b) {
    after -= c[b];
    for (int k = 1; k <= c[b]; ++k)
      v[static_cast<std::size_t>(before + k - 1)] = k + after;
    before += c[b];
  }
  return PackedWord::unchecked(std::move(v));
}

PackedWord alpha(const Composition& c, int k) {
  if (k < 1 || k > c.length() - 1) fail(Errc::OutOfRange, "alpha needs 1 <= k <= length-1");
  std::vector<int> merged(c.parts());
  merged[static_cast<std::size_t>(k - 1)] += merged[static_cast<std::size_t>(k)];
  merged.erase(merged.begin() + k);
  return compose(invert(xi(Composition(merged))), xi(c));
}

namespace {

// Order-isomorphism data for a segment: packed restriction plus the sorted
// distinct values (phi^{-1} listed in order).
struct Segment {
  PackedWord packed;
  std::vector<int> sorted_values;
};

Segment pack_segment(const PackedWord& w, int first, int last) {  // inclusive, 1-based
  std::vector<int> vals;
  for (int i = first; i <= last; ++i) vals.push_back(w(i));
  std::vector<int> sorted(vals);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> packed(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i)
    packed[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), vals[i]) - sorted.begin()) + 1;
  return {PackedWord::unchecked(std::move(packed)), std::move(sorted)};
}

}  // namespace

ShFactorization sh_factorize(const PackedWord& w, int p) {
  if (p < 0 || p > w.degree()) fail(Errc::OutOfRange, "cut position outside the word");
  Segment left = pack_segment(w, 1, p);
  Segment right = pack_segment(w, p + 1, w.degree());
  std::vector<int> conn;
  conn.reserve(left.sorted_values.size() + right.sorted_values.size());
  for (int v : left.sorted_values) conn.push_back(v);
  for (int v : right.sorted_values) conn.push_back(v);
  return {PackedWord::unchecked(std::move(conn)), left.packed, right.packed};
}

std::pair<PackedWord, std::vector<PackedWord>> sh_factorize_blocks(const PackedWord& w,
                                                                   const Composition& c) {
  if (c.sum() != w.degree()) fail(Errc::SizeMismatch, "composition does not sum to the degree");
  std::vector<PackedWord> parts;
  std::vector<int> conn;
  int pos = 1;
  for (int b = 0; b < c.length(); ++b) {
    Segment seg = pack_segment(w, pos, pos + c[b] - 1);
    parts.push_back(seg.packed);
    for (int v : seg.sorted_values) conn.push_back(v);
    pos += c[b];
  }
  return {PackedWord::unchecked(std::move(conn)), std::move(parts)};
}

PackedWord z_word(const Composition& c) {
  const int n = c.sum();
  const int k = c.length() - 1;
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n + k));
  int next = 1;
  for (int b = 0; b < c.length(); ++b) {
    if (b > 0) v.push_back(n + 1);
    for (int t = 0; t < c[b]; ++t) v.push_back(next++);
  }
  return PackedWord::unchecked(std::move(v));
}

PackedWord wedge(const PackedWord& omega, const std::vector<PackedWord>& parts) {
  if (parts.size() < 2) fail(Errc::TooFewParts, "wedge needs at least two parts");
  std::vector<int> ranks, sizes;
  for (auto& p : parts) {
    ranks.push_back(p.rank());
    sizes.push_back(p.degree());
  }
  Composition rc{std::vector<int>(ranks)};
  if (omega.degree() != rc.sum() || !is_shuffle(omega, rc))
    fail(Errc::NotCompatibleShuffle, "omega is not a shuffle of the part ranks");
  PackedWord prod;
  for (auto& p : parts) prod = cross(prod, p);
  PackedWord inner = compose(omega, prod);
  return compose(cross(inner, identity_word(1)), z_word(Composition(std::move(sizes))));
}

WedgeDecomposition wedge_decompose(const PackedWord& w) {
  if (w.empty()) fail(Errc::EmptyWord, "the empty word has no wedge decomposition");
  const int r = w.rank();
  std::vector<int> tops = w.fiber(r);
  std::vector<int> sizes;
  int prev = 0;
  for (int j : tops) {
    sizes.push_back(j - prev - 1);
    prev = j;
  }
  sizes.push_back(w.degree() - prev);
  std::vector<int> rest;
  for (int i = 1; i <= w.degree(); ++i)
    if (w(i) != r) rest.push_back(w(i));
  auto [omega, parts] = sh_factorize_blocks(PackedWord::unchecked(std::move(rest)),
                                            Composition(std::move(sizes)));
  return {omega, parts};
}

WedgeDecomposition tj_into_wedge(int j, const PackedWord& omega,
                                 const std::vector<PackedWord>& parts) {
  std::vector<int> ranks;
  for (auto& p : parts) ranks.push_back(p.rank());
  Composition rc{std::vector<int>(ranks)};
  if (omega.degree() != rc.sum() || !is_shuffle(omega, rc))
    fail(Errc::NotCompatibleShuffle, "omega is not a shuffle of the part ranks");
  if (j < 1 || j > omega.rank() - 1)
    fail(Errc::OutOfRange, "tj_into_wedge needs 1 <= j <= rank(omega)-1");

  PackedWord tw = compose(t_map(j, omega.rank()), omega);
  if (is_shuffle(tw, rc)) return {tw, parts};

  std::vector<PackedWord> new_parts(parts);
  std::vector<int> nv;
  int pos = 0;
  bool rewrote = false;
  for (int b = 0; b < rc.length(); ++b) {
    bool has_j = false, has_j1 = false;
    int slot = 0;
    for (int k = 0; k < rc[b]; ++k) {
      int v = omega.values()[static_cast<std::size_t>(pos + k)];
      if (v == j) { has_j = true; slot = k + 1; }
      if (v == j + 1) has_j1 = true;
    }
    if (has_j && has_j1) {
      // Block b loses the slot of value j+1; its part absorbs the merge.
      new_parts[static_cast<std::size_t>(b)] =
          compose(t_map(slot, rc[b]), parts[static_cast<std::size_t>(b)]);
      for (int k = 0; k < rc[b]; ++k) {
        int v = omega.values()[static_cast<std::size_t>(pos + k)];
        if (v == j + 1) continue;
        nv.push_back(v <= j ? v : v - 1);
      }
      rewrote = true;
    } else {
      for (int k = 0; k < rc[b]; ++k) {
        int v = omega.values()[static_cast<std::size_t>(pos + k)];
        nv.push_back(v <= j ? v : v - 1);
      }
    }
    pos += rc[b];
  }
  assert(rewrote);
  (void)rewrote;
  return {PackedWord::unchecked(std::move(nv)), std::move(new_parts)};
}

namespace {

struct SetWithCount {
  std::set<PackedWord> elems;
  std::size_t generated = 0;
  void add(PackedWord w) {
    elems.insert(std::move(w));
    ++generated;
  }
  bool multiplicity_free() const { return elems.size() == generated; }
};

// { sigma o (1_n x omega) : omega in SH^is(m, r), sigma in SH^os(n, rank omega) }
SetWithCount assoc_left(int n, int m, int r, ShuffleSplit os, ShuffleSplit is) {
  SetWithCount out;
  for (auto& w : enumerate_sh(Composition{m, r}, is)) {
    PackedWord inner = cross(identity_word(n), w);
    for (auto& s : enumerate_sh(Composition{n, w.rank()}, os)) out.add(compose(s, inner));
  }
  return out;
}

// { sigma o (omega x 1_r) : omega in SH^is(n, m), sigma in SH^os(rank omega, r) }
SetWithCount assoc_right(int n, int m, int r, ShuffleSplit os, ShuffleSplit is) {
  SetWithCount out;
  for (auto& w : enumerate_sh(Composition{n, m}, is)) {
    PackedWord inner = cross(w, identity_word(r));
    for (auto& s : enumerate_sh(Composition{w.rank(), r}, os)) out.add(compose(s, inner));
  }
  return out;
}

}  // namespace

bool sh_associativity_check(int n, int m, int r) {
  std::set<PackedWord> direct;
  for (auto& w : enumerate_sh(Composition{n, m, r})) direct.insert(w);
  SetWithCount lhs = assoc_right(n, m, r, ShuffleSplit::All, ShuffleSplit::All);
  SetWithCount rhs = assoc_left(n, m, r, ShuffleSplit::All, ShuffleSplit::All);
  return lhs.multiplicity_free() && rhs.multiplicity_free() && lhs.elems == direct &&
         rhs.elems == direct;
}

bool sh_split_identities_check(int n, int m, int r) {
  using S = ShuffleSplit;
  const std::pair<std::pair<S, S>, std::pair<S, S>> identities[7] = {
      {{S::Greater, S::Greater}, {S::Greater, S::All}},
      {{S::Greater, S::Less}, {S::Less, S::Greater}},
      {{S::Less, S::All}, {S::Less, S::Less}},
      {{S::Bullet, S::Bullet}, {S::Bullet, S::Bullet}},
      {{S::Greater, S::Bullet}, {S::Bullet, S::Greater}},
      {{S::Bullet, S::Greater}, {S::Bullet, S::Less}},
      {{S::Bullet, S::Less}, {S::Less, S::Bullet}},
  };
  for (auto& [l, rr] : identities) {
    SetWithCount lhs = assoc_left(n, m, r, l.first, l.second);
    SetWithCount rhs = assoc_right(n, m, r, rr.first, rr.second);
    if (!lhs.multiplicity_free() || !rhs.multiplicity_free()) return false;
    if (lhs.elems != rhs.elems) return false;
  }
  return true;
}

bool multi_identity1(int r, const Composition& s) {
  std::vector<int> whole{r};
  for (int p : s.parts()) whole.push_back(p);
  std::set<PackedWord> direct;
  for (auto& w : enumerate_sh(Composition(whole))) direct.insert(w);

  std::set<PackedWord> mid;
  for (auto& w : enumerate_sh(s)) {
    PackedWord inner = cross(identity_word(r), w);
    for (auto& t : enumerate_sh(Composition{r, w.rank()})) mid.insert(compose(t, inner));
  }

  int tail = s.sum() - s[0];
  std::set<PackedWord> rhs;
  for (auto& z : enumerate_sh(Composition{r, s[0]})) {
    PackedWord inner = cross(z, identity_word(tail));
    std::vector<int> outer_type{z.rank()};
    for (int i = 1; i < s.length(); ++i) outer_type.push_back(s[i]);
    for (auto& t : enumerate_sh(Composition(outer_type))) rhs.insert(compose(t, inner));
  }
  return mid == direct && rhs == direct;
}

bool multi_identity2(const Composition& r, const Composition& s) {
  std::set<PackedWord> lhs;
  for (auto& w : enumerate_sh(r))
    for (auto& u : enumerate_sh(s)) {
      PackedWord inner = cross(w, u);
      for (auto& t : enumerate_sh(Composition{w.rank(), u.rank()})) lhs.insert(compose(t, inner));
    }

  const int k = r.length() - 1;
  int head = r.sum() - r[k];
  int tail = s.sum() - s[0];
  std::set<PackedWord> rhs;
  for (auto& z : enumerate_sh(Composition{r[k], s[0]})) {
    PackedWord inner = cross(cross(identity_word(head), z), identity_word(tail));
    std::vector<int> outer_type;
    for (int i = 0; i < k; ++i) outer_type.push_back(r[i]);
    outer_type.push_back(z.rank());
    for (int i = 1; i < s.length(); ++i) outer_type.push_back(s[i]);
    for (auto& t : enumerate_sh(Composition(outer_type))) rhs.insert(compose(t, inner));
  }
  return lhs == rhs;
}

bool multi_identity3(const Composition& r, int s) {
  std::vector<int> whole(r.parts());
  whole.push_back(s);
  std::set<PackedWord> direct;
  for (auto& w : enumerate_sh(Composition(whole))) direct.insert(w);

  std::set<PackedWord> mid;
  for (auto& w : enumerate_sh(r)) {
    PackedWord inner = cross(w, identity_word(s));
    for (auto& t : enumerate_sh(Composition{w.rank(), s})) mid.insert(compose(t, inner));
  }

  const int k = r.length() - 1;
  int head = r.sum() - r[k];
  std::set<PackedWord> rhs;
  for (auto& z : enumerate_sh(Composition{r[k], s})) {
    PackedWord inner = cross(identity_word(head), z);
    std::vector<int> outer_type;
    for (int i = 0; i < k; ++i) outer_type.push_back(r[i]);
    outer_type.push_back(z.rank());
    for (auto& t : enumerate_sh(Composition(outer_type))) rhs.insert(compose(t, inner));
  }
  return mid == direct && rhs == direct;
}

namespace {

void compositions_up_to(int cap, int max_len, std::vector<Composition>& out) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int len, int remaining) {
    if (!cur.empty()) out.emplace_back(std::vector<int>(cur));
    if (len == max_len) return;
    for (int p = 0; p <= remaining; ++p) {
      cur.push_back(p);
      rec(len + 1, remaining - p);
      cur.pop_back();
    }
  };
  rec(0, cap);
}

}  // namespace

bool varios_identities_check(int cap) {
  std::vector<Composition> comps;
  compositions_up_to(cap, 3, comps);
  for (auto& s : comps)
    for (int r = 0; r + s.sum() <= cap; ++r)
      if (!multi_identity1(r, s) || !multi_identity3(s, r)) return false;
  std::vector<Composition> short_comps;
  compositions_up_to(cap, 2, short_comps);
  for (auto& r : short_comps)
    for (auto& s : short_comps)
      if (r.sum() + s.sum() <= cap && !multi_identity2(r, s)) return false;
  return true;
}

}  // namespace bruhat
