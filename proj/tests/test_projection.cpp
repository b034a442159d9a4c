#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "bruhat/projection.hpp"
#include "bruhat/shuffle.hpp"
#include "oracles.hpp"

using namespace bruhat;

namespace {
PackedWord W(const std::string& s) { return PackedWord::parse(s); }
PlanarTree T(const std::string& s) { return PlanarTree::parse(s); }
}  // namespace

TEST_CASE("images of small words") {
  CHECK(to_tree(W("[]")) == PlanarTree::leaf());
  CHECK(to_tree(W("[1,1,1]")) == corolla(3));
  CHECK(to_tree(W("[1,2]")) == T("((. .) .)"));
  CHECK(to_tree(W("[2,1]")) == T("(. (. .))"));
  CHECK(to_tree(W("[1,1]")) == corolla(2));
  CHECK(to_tree(W("[2,1,2]")) == T("(. (. .) .)"));
}

TEST_CASE("surjectivity onto trees") {
  for (int n = 0; n <= 5; ++n) {
    std::set<PlanarTree> image;
    for (auto& w : enumerate_pwords(n)) image.insert(to_tree(w));
    auto trees = enumerate_trees(n);
    CHECK(image == std::set<PlanarTree>(trees.begin(), trees.end()));
  }
}

TEST_CASE("min and max words of small trees") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(min_word(corolla(n)) == one_block(n));
    CHECK(max_word(corolla(n)) == one_block(n));
  }
  CHECK(min_word(T("(. (. .))")) == W("[2,1]"));
  CHECK(max_word(T("(. (. .))")) == W("[2,1]"));
  CHECK(min_word(T("((. .) .)")) == W("[1,2]"));
  CHECK(min_word(PlanarTree::leaf()).empty());
  for (int n = 1; n <= 5; ++n)
    for (auto& t : enumerate_trees(n)) {
      CHECK(to_tree(min_word(t)) == t);
      CHECK(to_tree(max_word(t)) == t);
      CHECK(pword_leq(min_word(t), max_word(t), OrderKind::Bruhat));
      // both endpoints sit at rank = vertex count
      CHECK(min_word(t).rank() == t.vertex_count());
      CHECK(max_word(t).rank() == t.vertex_count());
    }
}

TEST_CASE("fibers are intervals and partition the words") {
  CHECK(fiber(corolla(2)) == std::vector<PackedWord>{W("[1,1]")});
  CHECK(fiber(T("((. .) .)")) == std::vector<PackedWord>{W("[1,2]")});
  for (int n = 1; n <= 5; ++n) {
    std::size_t total = 0;
    std::set<PackedWord> seen;
    for (auto& t : enumerate_trees(n)) {
      auto f = fiber(t);
      auto direct = oracles::direct_preimage(t);
      CHECK(f == direct);
      total += f.size();
      seen.insert(f.begin(), f.end());
    }
    CHECK(total == enumerate_pwords(n).size());
    CHECK(seen.size() == total);
  }
}

TEST_CASE("every word ranks at most the vertex count of its image") {
  // The fiber of a tree mixes ranks; the endpoints realize the maximum.
  for (int n = 1; n <= 5; ++n)
    for (auto& w : enumerate_pwords(n)) CHECK(w.rank() <= to_tree(w).vertex_count());
  // and the bound is strict inside some fiber
  CHECK(W("[1,2,1]").rank() == 2);
  CHECK(to_tree(W("[1,2,1]")) == T("((. .) (. .))"));
  CHECK(to_tree(W("[1,2,1]")).vertex_count() == 3);
}

TEST_CASE("the image forgets the connecting shuffle") {
  for (int n = 1; n <= 5; ++n)
    for (auto& w : enumerate_pwords(n)) {
      auto dec = wedge_decompose(w);
      std::vector<int> ranks;
      for (auto& p : dec.parts) ranks.push_back(p.rank());
      Composition rc{std::move(ranks)};
      for (auto& om : enumerate_sh(rc))
        CHECK(to_tree(wedge(om, dec.parts)) == to_tree(wedge(dec.omega, dec.parts)));
    }
}

TEST_CASE("order transport for all three orders") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(order_transport_check(n, OrderKind::Bruhat));
    CHECK(order_transport_check(n, OrderKind::Inclusion));
    CHECK(order_transport_check(n, OrderKind::C));
  }
}

TEST_CASE("the degree-2 picture") {
  std::map<PlanarTree, PackedWord> expect{
      {T("((. .) .)"), W("[1,2]")},
      {T("(. . .)"), W("[1,1]")},
      {T("(. (. .))"), W("[2,1]")},
  };
  for (auto& [t, w] : expect) {
    auto f = fiber(t);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == w);
  }
}
