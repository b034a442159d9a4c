#include "bruhat/packed_word.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace bruhat {

PackedWord PackedWord::make(std::vector<int> values) {
  int maxv = 0;
  for (int v : values) {
    if (v < 1) fail(Errc::NotPacked, "packed word values must be >= 1");
    maxv = std::max(maxv, v);
  }
  std::vector<char> seen(static_cast<std::size_t>(maxv) + 1, 0);
  for (int v : values) seen[static_cast<std::size_t>(v)] = 1;
  for (int v = 1; v <= maxv; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      fail(Errc::NotPacked, "value " + std::to_string(v) + " missing from image");
  PackedWord w;
  w.values_ = std::move(values);
  w.rank_ = maxv;
  return w;
}

PackedWord PackedWord::unchecked(std::vector<int> values) {
  PackedWord w;
  int maxv = 0;
  for (int v : values) maxv = std::max(maxv, v);
  w.values_ = std::move(values);
  w.rank_ = maxv;
  return w;
}

std::vector<int> PackedWord::fiber(int v) const {
  std::vector<int> out;
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) == v) out.push_back(i);
  return out;
}

std::strong_ordering PackedWord::operator<=>(const PackedWord& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(values_.begin(), values_.end(),
                                                o.values_.begin(), o.values_.end());
}

std::string PackedWord::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  out += ']';
  return out;
}

PackedWord PackedWord::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip();
  if (i >= text.size() || text[i] != '[') fail(Errc::ParseError, "expected '[' in packed word: " + text);
  ++i;
  std::vector<int> vals;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail(Errc::ParseError, "expected integer in packed word: " + text);
      vals.push_back(std::stoi(text.substr(start, i - start)));
      skip();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ']') { ++i; break; }
      fail(Errc::ParseError, "expected ',' or ']' in packed word: " + text);
    }
  }
  skip();
  if (i != text.size()) fail(Errc::ParseError, "trailing characters after packed word: " + text);
  try {
    return make(std::move(vals));
  } catch (const Error&) {
    fail(Errc::ParseError, "not a packed word: " + text);
  }
}

std::size_t PackedWordHash::operator()(const PackedWord& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : w.values()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) fail(Errc::OutOfRange, "composition parts must be >= 0");
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Composition Composition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad composition: " + text);
    }
  }
  if (parts.empty()) fail(Errc::ParseError, "empty composition: " + text);
  for (int p : parts)
    if (p < 0) fail(Errc::ParseError, "negative part in composition: " + text);
  return Composition(std::move(parts));
}

PackedWord identity_word(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return PackedWord::unchecked(std::move(v));
}

PackedWord t_map(int i, int n) {
  if (n < 1 || i < 1 || i > n - 1) fail(Errc::OutOfRange, "t_map requires 1 <= i <= n-1");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) v[static_cast<std::size_t>(j - 1)] = j <= i ? j : j - 1;
  return PackedWord::unchecked(std::move(v));
}

PackedWord s_map(int i, int n) {
  if (n < 1 || i < 1 || i > n - 1) fail(Errc::OutOfRange, "s_map requires 1 <= i <= n-1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return PackedWord::unchecked(std::move(v));
}

PackedWord longest_word(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) v[static_cast<std::size_t>(j - 1)] = n + 1 - j;
  return PackedWord::unchecked(std::move(v));
}

PackedWord one_block(int n) {
  return PackedWord::unchecked(std::vector<int>(static_cast<std::size_t>(n), 1));
}

PackedWord compose(const PackedWord& outer, const PackedWord& inner) {
  if (outer.degree() != inner.rank()) return PackedWord{};
  std::vector<int> v(static_cast<std::size_t>(inner.degree()));
  for (int i = 1; i <= inner.degree(); ++i) v[static_cast<std::size_t>(i - 1)] = outer(inner(i));
  return PackedWord::unchecked(std::move(v));
}

PackedWord cross(const PackedWord& left, const PackedWord& right) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(left.degree() + right.degree()));
  for (int x : left.values()) v.push_back(x);
  for (int x : right.values()) v.push_back(x + left.rank());
  return PackedWord::unchecked(std::move(v));
}

PackedWord invert(const PackedWord& permutation) {
  if (!permutation.is_permutation()) fail(Errc::NotPermutation, "invert needs a permutation");
  std::vector<int> v(static_cast<std::size_t>(permutation.degree()));
  for (int i = 1; i <= permutation.degree(); ++i)
    v[static_cast<std::size_t>(permutation(i) - 1)] = i;
  return PackedWord::unchecked(std::move(v));
}

MonotoneFactorization monotone_factorize(const PackedWord& w) {
  if (w.empty()) fail(Errc::EmptyWord, "monotone_factorize needs a non-empty word");
  const int n = w.degree(), r = w.rank();
  std::vector<int> count(static_cast<std::size_t>(r) + 1, 0);
  for (int v : w.values()) ++count[static_cast<std::size_t>(v)];
  std::vector<int> offset(static_cast<std::size_t>(r) + 1, 0);
  for (int v = 2; v <= r; ++v)
    offset[static_cast<std::size_t>(v)] = offset[static_cast<std::size_t>(v - 1)] + count[static_cast<std::size_t>(v - 1)];
  std::vector<int> sorted(w.values());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> seen(static_cast<std::size_t>(r) + 1, 0);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int v = w(j);
    sigma[static_cast<std::size_t>(j - 1)] = offset[static_cast<std::size_t>(v)] + (++seen[static_cast<std::size_t>(v)]);
  }
  return {PackedWord::unchecked(std::move(sorted)), PackedWord::unchecked(std::move(sigma))};
}

Coclass to_coclass(const PackedWord& w) {
  if (w.empty()) fail(Errc::EmptyWord, "to_coclass needs a non-empty word");
  std::vector<int> blocks(static_cast<std::size_t>(w.rank()), 0);
  for (int v : w.values()) ++blocks[static_cast<std::size_t>(v - 1)];
  return {Composition(std::move(blocks)), monotone_factorize(w).sigma};
}

PackedWord from_coclass(const Coclass& c) {
  const int n = c.perm.degree();
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, 0);
  int pos = 1;
  for (int b = 0; b < c.blocks.length(); ++b)
    for (int k = 0; k < c.blocks[b]; ++k) block_of[static_cast<std::size_t>(pos++)] = b + 1;
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) v[static_cast<std::size_t>(j - 1)] = block_of[static_cast<std::size_t>(c.perm(j))];
  return PackedWord::unchecked(std::move(v));
}

std::vector<PackedWord> coclass_elements(const PackedWord& w) {
  if (w.empty()) fail(Errc::EmptyWord, "coclass_elements needs a non-empty word");
  const int n = w.degree(), r = w.rank();
  // tau runs over all words with the same fibers as w, ordered arbitrarily
  // inside each fiber: assign the values of each block to the fiber's
  // positions in every possible order.
  std::vector<std::vector<int>> fibers;
  fibers.reserve(static_cast<std::size_t>(r));
  for (int v = 1; v <= r; ++v) fibers.push_back(w.fiber(v));
  std::vector<int> base(static_cast<std::size_t>(r) + 1, 0);
  for (int v = 1; v < r; ++v)
    base[static_cast<std::size_t>(v + 1)] = base[static_cast<std::size_t>(v)] + static_cast<int>(fibers[static_cast<std::size_t>(v - 1)].size());
  std::vector<PackedWord> out;
  std::vector<int> tau(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v > r) {
      out.push_back(PackedWord::unchecked(tau));
      return;
    }
    auto& fib = fibers[static_cast<std::size_t>(v - 1)];
    std::vector<int> perm(fib.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t k = 0; k < fib.size(); ++k)
        tau[static_cast<std::size_t>(fib[k] - 1)] = base[static_cast<std::size_t>(v)] + perm[k] + 1;
      rec(v + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PackedWord> enumerate_pwords(int n) {
  if (n < 0) fail(Errc::OutOfRange, "degree must be >= 0");
  std::vector<PackedWord> out;
  std::vector<int> vals(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 2, 0);
  // missing = values below the current maximum not used yet; the word can be
  // completed iff the remaining positions can still cover them.
  std::function<void(int, int, int)> rec = [&](int pos, int maxv, int missing) {
    if (pos == n) {
      if (missing == 0) out.push_back(PackedWord::unchecked(vals));
      return;
    }
    int remaining = n - pos - 1;
    for (int v = 1; v <= n; ++v) {
      int new_max = std::max(maxv, v);
      int new_missing = missing;
      if (v > maxv)
        new_missing += v - maxv - 1;
      else if (!used[static_cast<std::size_t>(v)])
        --new_missing;
      if (new_missing > remaining) {
        if (v > maxv) break;  // larger values only get worse
        continue;
      }
      vals[static_cast<std::size_t>(pos)] = v;
      char saved = used[static_cast<std::size_t>(v)];
      used[static_cast<std::size_t>(v)] = 1;
      rec(pos + 1, new_max, new_missing);
      used[static_cast<std::size_t>(v)] = saved;
    }
  };
  rec(0, 0, 0);
  return out;  // generation order is lexicographic
}

std::vector<PackedWord> enumerate_pwords_rank(int n, int r) {
  if (n < 0 || r < 1 || r > std::max(n, 1)) fail(Errc::OutOfRange, "need 1 <= r <= n");
  std::vector<PackedWord> out;
  for (auto& w : enumerate_pwords(n))
    if (w.rank() == r) out.push_back(w);
  return out;
}

int inversions(const PackedWord& w) {
  if (!w.is_permutation()) fail(Errc::NotPermutation, "inversions needs a permutation");
  int count = 0;
  for (int i = 1; i <= w.degree(); ++i)
    for (int j = i + 1; j <= w.degree(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

}  // namespace bruhat
