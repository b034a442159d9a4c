// Acceptance suite: one line per criterion, exit 0 iff everything passes.
//
// Usage: acceptance <path-to-cli-binary>
//
// The path is needed by the determinism criterion, which runs the binary
// twice and compares bytes.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bruhat/order.hpp"
#include "bruhat/planar_tree.hpp"
#include "bruhat/projection.hpp"
#include "bruhat/shuffle.hpp"
#include "bruhat/trialgebra.hpp"
#include "oracles.hpp"

using namespace bruhat;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

PackedWord W(const std::string& s) { return PackedWord::parse(s); }
PlanarTree T(const std::string& s) { return PlanarTree::parse(s); }

// 1. Counting sanity against the independent recurrences.
void criterion_counts() {
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 6; ++n) {
    long long got = static_cast<long long>(enumerate_pwords(n).size());
    ok = ok && got == oracles::fubini(n);
    detail += (n ? "," : "words ") + std::to_string(got);
  }
  detail += "; ";
  for (int n = 0; n <= 5; ++n) {
    long long got = static_cast<long long>(enumerate_trees(n).size());
    ok = ok && got == oracles::schroeder(n);
    detail += (n ? "," : "trees ") + std::to_string(got);
  }
  report("1 counting sanity", ok, detail);
}

// 2. The degree-2 chain and its fiber partition.
void criterion_degree2() {
  PlanarTree left = T("((. .) .)"), mid = T("(. . .)"), right = T("(. (. .))");
  Poset<PlanarTree> p = build_tree_order(2, OrderKind::Bruhat);
  bool chain = p.leq(left, mid) && p.leq(mid, right) && p.leq(left, right) &&
               !p.leq(mid, left) && !p.leq(right, mid) && !p.leq(right, left);
  chain = chain && p.diagram.covers().size() == 2;
  bool fibers = fiber(left) == std::vector<PackedWord>{W("[1,2]")} &&
                fiber(mid) == std::vector<PackedWord>{W("[1,1]")} &&
                fiber(right) == std::vector<PackedWord>{W("[2,1]")};
  report("2 degree-2 chain and fibers", chain && fibers);
}

// 3. Coset containment equals the Bruhat interval, degree <= 4.
void criterion_coset_interval() {
  bool ok = true;
  long long instances = 0;
  for (int n = 1; n <= 4; ++n)
    for (auto& w : enumerate_pwords(n)) {
      ok = ok && coclass_interval_check(w);
      ++instances;
    }
  report("3 coset containment is the Bruhat interval", ok,
         std::to_string(instances) + " instances");
}

// 4. SH(c) is the down-set of xi(c) for every composition of n <= 5.
void criterion_downset() {
  bool ok = true;
  long long instances = 0;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0 && !parts.empty()) {
      ok = ok && shuffle_downset_check(Composition{std::vector<int>(parts)});
      ++instances;
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      parts.push_back(p);
      rec(rest - p);
      parts.pop_back();
    }
  };
  for (int n = 1; n <= 5; ++n) rec(n);
  report("4 shuffles are down-sets", ok, std::to_string(instances) + " compositions");
}

// 5. Associativity plus the seven split and three multi-block identities.
void criterion_sh_algebra() {
  bool ok = true;
  long long tuples = 0;
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; n + m <= 4; ++m)
      for (int r = 0; n + m + r <= 4; ++r) {
        ok = ok && sh_associativity_check(n, m, r) && sh_split_identities_check(n, m, r);
        ++tuples;
      }
  ok = ok && varios_identities_check(4);
  report("5 shuffle algebra identities", ok, std::to_string(tuples) + " size tuples");
}

// 6. The seven trialgebra identities on both bases, total degree <= 5.
void criterion_axioms() {
  AxiomsReport words = axioms_check(Basis::PWord, 5);
  AxiomsReport trees = axioms_check(Basis::Tree, 5);
  report("6 trialgebra axioms", words.ok() && trees.ok(),
         std::to_string(words.triples) + " word triples, " + std::to_string(trees.triples) +
             " tree triples" +
             (words.ok() && trees.ok()
                  ? ""
                  : "; " + words.counterexample.value_or("") + trees.counterexample.value_or("")));
}

// 7. Method agreement and the operation morphism, total degree <= 5.
void criterion_methods() {
  bool agree = true, morphism = true;
  for (int n = 1; n < 5; ++n)
    for (int m = 1; n + m <= 5; ++m) {
      for (auto& a : enumerate_pwords(n))
        for (auto& b : enumerate_pwords(m))
          for (TriOp op : {TriOp::Succ, TriOp::Dot, TriOp::Prec, TriOp::Star}) {
            LinComb<PackedWord> sh = pword_product(a, b, op, PwordMethod::Shuffle);
            agree = agree && sh == pword_product(a, b, op, PwordMethod::Interval);
            // The induced tree operation is the support of the image: the
            // projection collapses whole fibers onto single trees, so the
            // comparison is multiplicity free by construction.
            std::set<PlanarTree> support;
            for (auto& [w, c] : sh.terms()) {
              (void)c;
              support.insert(to_tree(w));
            }
            LinComb<PlanarTree> collapsed;
            for (auto& t : support) collapsed.add(t, 1);
            morphism = morphism && collapsed == tree_product(to_tree(a), to_tree(b), op);
          }
      for (auto& t : enumerate_trees(n))
        for (auto& z : enumerate_trees(m))
          for (TriOp op : {TriOp::Succ, TriOp::Dot, TriOp::Prec, TriOp::Star}) {
            LinComb<PlanarTree> rec = tree_product(t, z, op, TreeMethod::Recursion);
            agree = agree && rec == tree_product(t, z, op, TreeMethod::Fiber) &&
                    rec == tree_product(t, z, op, TreeMethod::Interval);
          }
    }
  report("7 method agreement and morphism", agree && morphism);
}

// 8. Fiber structure at degree <= 5.
void criterion_fibers() {
  bool intervals = true, partition = true;
  for (int n = 1; n <= 5; ++n) {
    std::size_t total = 0;
    std::set<PackedWord> seen;
    for (auto& t : enumerate_trees(n)) {
      auto f = fiber(t);
      intervals = intervals && f == oracles::direct_preimage(t);
      total += f.size();
      seen.insert(f.begin(), f.end());
    }
    partition = partition && total == enumerate_pwords(n).size() && seen.size() == total;
  }
  report("8a fibers are the min/max intervals", intervals);
  report("8b fibers partition each degree", partition);

  // Literal vertex-count bookkeeping: a word of degree n and rank r should
  // map to a tree with n - r vertices. This is false already for [1,2]
  // (its tree has two vertices, n - r = 0), and no rank-only repair exists:
  // [1,2,1] and [1,3,2] share rank-independent images. Kept as an honest
  // red marker; see the surrounding checks for what does hold.
  bool literal = true;
  std::string counterexample;
  for (int n = 1; n <= 5 && literal; ++n)
    for (auto& w : enumerate_pwords(n)) {
      if (to_tree(w).vertex_count() != n - w.rank()) {
        literal = false;
        counterexample = w.to_string() + " maps to " + to_tree(w).to_string() + " with " +
                         std::to_string(to_tree(w).vertex_count()) + " vertices, n-r = " +
                         std::to_string(n - w.rank());
        break;
      }
    }
  report("8c rank-to-vertex bookkeeping (known defect)", literal, counterexample);

  // The true bookkeeping: ranks never exceed the vertex count, and the
  // fiber endpoints attain it.
  bool repaired = true;
  for (int n = 1; n <= 5; ++n) {
    for (auto& w : enumerate_pwords(n))
      repaired = repaired && w.rank() <= to_tree(w).vertex_count();
    for (auto& t : enumerate_trees(n))
      repaired = repaired && min_word(t).rank() == t.vertex_count() &&
                 max_word(t).rank() == t.vertex_count();
  }
  report("8d rank bounded by vertex count, endpoints attain it", repaired);
}

// 9. Order transport for all three orders, degree <= 4.
void criterion_transport() {
  bool ok = true;
  for (int n = 1; n <= 4; ++n)
    for (auto kind : {OrderKind::Inclusion, OrderKind::Bruhat, OrderKind::C})
      ok = ok && order_transport_check(n, kind);
  report("9 order transport", ok);
}

// 10. Span ranks of the iterated products of the generator.
void criterion_freeness() {
  bool ok = true;
  std::string ranks;
  for (int n = 1; n <= 4; ++n) {
    SpanReport r = freeness_span_check(n);
    ok = ok && r.ok();
    if (!ranks.empty()) ranks += ",";
    ranks += std::to_string(r.rank_found);
  }
  report("10 span ranks", ok, "ranks " + ranks + " expected 1,3,11,45");
}

// 11. Multiplicity freeness of basis products, total degree <= 6.
void criterion_multiplicity() {
  bool ok = true;
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; n + m <= 6; ++m)
      for (TriOp op : {TriOp::Succ, TriOp::Dot, TriOp::Prec, TriOp::Star}) {
        for (auto& a : enumerate_pwords(n))
          for (auto& b : enumerate_pwords(m)) {
            LinComb<PackedWord> prod = pword_product(a, b, op);
            for (auto& [w, c] : prod.terms()) {
              (void)w;
              ok = ok && c == 1;
            }
          }
        for (auto& t : enumerate_trees(n))
          for (auto& z : enumerate_trees(m)) {
            LinComb<PlanarTree> prod = tree_product(t, z, op);
            for (auto& [w, c] : prod.terms()) {
              (void)w;
              ok = ok && c == 1;
            }
          }
      }
  report("11 basis products are multiplicity free", ok);
}

// 12. Byte-identical output across repeated runs of the CLI.
std::string run_cli(const std::string& command, int& exit_code) {
  std::string out;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  exit_code = pclose(pipe);
  return out;
}

void criterion_determinism(const std::string& cli) {
  const std::vector<std::string> commands = {
      cli + " enumerate pword 4 --format json",
      cli + " enumerate tree 3 --format json",
      cli + " hasse pword bruhat 3 --format dot",
      cli + " hasse tree bruhat 3 --format json",
      cli + " product pword star \"[1,2]\" \"[1]\" --format json",
      cli + " product tree star \"(. .)\" \"(. .)\" --format json",
      cli + " fiber \"(. (. .) .)\" --format json",
  };
  bool ok = true;
  for (auto& cmd : commands) {
    int rc1 = 0, rc2 = 0;
    std::string first = run_cli(cmd, rc1);
    std::string second = run_cli(cmd, rc2);
    ok = ok && rc1 == 0 && rc2 == 0 && !first.empty() && first == second;
  }
  report("12 deterministic output", ok, std::to_string(commands.size()) + " commands, two runs each");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli-binary>\n";
    return 2;
  }
  criterion_counts();
  criterion_degree2();
  criterion_coset_interval();
  criterion_downset();
  criterion_sh_algebra();
  criterion_axioms();
  criterion_methods();
  criterion_fibers();
  criterion_transport();
  criterion_freeness();
  criterion_multiplicity();
  criterion_determinism(argv[1]);
  if (failures) {
    std::cout << failures << " criterion line(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
