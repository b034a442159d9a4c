// Command-line surface: enumeration, order queries, Hasse diagrams, the
// three products, the tree projection, and the verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 cap exceeded,
//             3 parse/argument error, 4 undefined operation.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bruhat/order.hpp"
#include "bruhat/planar_tree.hpp"
#include "bruhat/projection.hpp"
#include "bruhat/shuffle.hpp"
#include "bruhat/trialgebra.hpp"

using json = nlohmann::ordered_json;
using namespace bruhat;

namespace {

constexpr int kDefaultCap = 6;
constexpr int kSweepCap = 5;
constexpr int kFreenessCap = 4;

int env_default_cap() {
  if (const char* s = std::getenv("BRUHAT_CAP")) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      return kDefaultCap;
    }
  }
  return kDefaultCap;
}

OrderKind parse_kind(const std::string& s) {
  if (s == "inclusion") return OrderKind::Inclusion;
  if (s == "bruhat") return OrderKind::Bruhat;
  if (s == "c") return OrderKind::C;
  fail(Errc::ParseError, "unknown order: " + s);
}

TriOp parse_op(const std::string& s) {
  if (s == "succ") return TriOp::Succ;
  if (s == "dot") return TriOp::Dot;
  if (s == "prec") return TriOp::Prec;
  if (s == "star") return TriOp::Star;
  fail(Errc::ParseError, "unknown operation: " + s);
}

void require_cap(int n, int cap) {
  if (n > cap)
    fail(Errc::CapExceeded,
         "degree " + std::to_string(n) + " above cap " + std::to_string(cap) + "; raise with --cap");
}

// ---- enumerate ------------------------------------------------------------

int cmd_enumerate(const std::string& basis, int n, int rank, const std::string& format, int cap) {
  require_cap(n, cap);
  std::vector<std::string> lines;
  if (basis == "pword") {
    if (n > kMaxSearchDegree) fail(Errc::CapExceeded, "packed word degree ceiling is 8");
    auto all = rank > 0 ? enumerate_pwords_rank(n, rank) : enumerate_pwords(n);
    for (auto& w : all) lines.push_back(w.to_string());
  } else {
    if (rank > 0) fail(Errc::ParseError, "--rank applies to packed words only");
    for (auto& t : enumerate_trees(n)) lines.push_back(t.to_string());
  }
  if (format == "json") {
    json out;
    out["elements"] = lines;
    out["count"] = lines.size();
    std::cout << out.dump() << "\n";
  } else {
    for (auto& l : lines) std::cout << l << "\n";
    std::cout << "count=" << lines.size() << "\n";
  }
  return 0;
}

// ---- order ----------------------------------------------------------------

int cmd_order(const std::string& basis, const std::string& kind_name, const std::string& a,
              const std::string& b, bool with_interval, const std::string& format, int cap) {
  OrderKind kind = parse_kind(kind_name);
  bool le = false;
  std::vector<std::string> interval;
  if (basis == "pword") {
    PackedWord x = PackedWord::parse(a), y = PackedWord::parse(b);
    require_cap(x.degree(), cap);
    le = pword_leq(x, y, kind);
    if (with_interval)
      for (auto& w : pword_interval(x, y, kind)) interval.push_back(w.to_string());
  } else {
    PlanarTree x = PlanarTree::parse(a), y = PlanarTree::parse(b);
    require_cap(x.degree(), cap);
    le = tree_leq(x, y, kind);
    if (with_interval)
      for (auto& t : tree_interval(x, y, kind)) interval.push_back(t.to_string());
  }
  if (format == "json") {
    json out;
    out["leq"] = le;
    if (with_interval) out["interval"] = interval;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "leq=" << (le ? "true" : "false") << "\n";
    if (with_interval)
      for (auto& l : interval) std::cout << l << "\n";
  }
  return 0;
}

// ---- hasse ----------------------------------------------------------------

template <typename T>
void emit_hasse(const Poset<T>& poset, const std::string& format) {
  if (format == "dot") {
    std::cout << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
      std::cout << "  n" << i << " [label=\"" << poset.elements[i].to_string() << "\"];\n";
    for (auto& [lo, hi] : poset.diagram.covers())
      std::cout << "  n" << lo << " -> n" << hi << ";\n";
    std::cout << "}\n";
    return;
  }
  json out;
  std::vector<std::string> elems;
  for (auto& e : poset.elements) elems.push_back(e.to_string());
  out["elements"] = elems;
  json covers = json::array();
  for (auto& [lo, hi] : poset.diagram.covers()) covers.push_back({lo, hi});
  out["covers"] = covers;
  std::cout << out.dump() << "\n";
}

int cmd_hasse(const std::string& basis, const std::string& kind_name, int n,
              const std::string& format, int cap) {
  OrderKind kind = parse_kind(kind_name);
  require_cap(n, cap);
  if (basis == "pword")
    emit_hasse(build_order(n, kind, cap), format);
  else
    emit_hasse(build_tree_order(n, kind, cap), format);
  return 0;
}

// ---- product ----------------------------------------------------------------

int cmd_product(const std::string& basis, const std::string& op_name, const std::string& method,
                const std::string& a, const std::string& b, const std::string& format, int cap) {
  TriOp op = parse_op(op_name);
  std::string payload;
  if (basis == "pword") {
    PwordMethod m = PwordMethod::Shuffle;
    if (method == "interval")
      m = PwordMethod::Interval;
    else if (!method.empty() && method != "shuffle")
      fail(Errc::ParseError, "packed word methods: shuffle, interval");
    PackedWord x = PackedWord::parse(a), y = PackedWord::parse(b);
    require_cap(x.degree() + y.degree(), cap);
    payload = lincomb_to_json(pword_product(x, y, op, m), "pword");
  } else {
    TreeMethod m = TreeMethod::Recursion;
    if (method == "fiber")
      m = TreeMethod::Fiber;
    else if (method == "interval")
      m = TreeMethod::Interval;
    else if (!method.empty() && method != "recursion")
      fail(Errc::ParseError, "tree methods: recursion, fiber, interval");
    PlanarTree x = PlanarTree::parse(a), y = PlanarTree::parse(b);
    require_cap(x.degree() + y.degree(), cap);
    payload = lincomb_to_json(tree_product(x, y, op, m), "tree");
  }
  if (format == "text") {
    json parsed = json::parse(payload);
    for (auto& term : parsed["terms"])
      std::cout << term["coeff"].get<std::string>() << " * " << term["elem"].get<std::string>()
                << "\n";
  } else {
    std::cout << payload << "\n";
  }
  return 0;
}

// ---- projection verbs -------------------------------------------------------

int cmd_gamma(const std::string& word) {
  std::cout << to_tree(PackedWord::parse(word)).to_string() << "\n";
  return 0;
}

int cmd_fiber(const std::string& tree, const std::string& format, int cap) {
  PlanarTree t = PlanarTree::parse(tree);
  require_cap(t.degree(), cap);
  PackedWord lo = min_word(t), hi = max_word(t);
  auto f = fiber(t);
  if (format == "json") {
    json out;
    out["tree"] = t.to_string();
    std::vector<std::string> words;
    for (auto& w : f) words.push_back(w.to_string());
    out["fiber"] = words;
    out["min"] = lo.to_string();
    out["max"] = hi.to_string();
    std::cout << out.dump() << "\n";
  } else {
    for (auto& w : f) {
      std::cout << w.to_string();
      if (w == lo) std::cout << " (min)";
      if (w == hi) std::cout << " (max)";
      std::cout << "\n";
    }
    std::cout << "count=" << f.size() << "\n";
  }
  return 0;
}

int cmd_minmax(const std::string& tree, const std::string& format) {
  PlanarTree t = PlanarTree::parse(tree);
  PackedWord lo = min_word(t), hi = max_word(t);
  if (format == "json") {
    json out;
    out["tree"] = t.to_string();
    out["min"] = lo.to_string();
    out["max"] = hi.to_string();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "min=" << lo.to_string() << "\nmax=" << hi.to_string() << "\n";
  }
  return 0;
}

// ---- verify -----------------------------------------------------------------

struct VerifyState {
  bool all_ok = true;
  void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    all_ok = all_ok && ok;
  }
};

void verify_shuffles(VerifyState& state, int cap) {
  int sweep = std::min(cap, 4);
  bool assoc = true, splits = true;
  long long instances = 0;
  for (int n = 0; n <= sweep; ++n)
    for (int m = 0; n + m <= sweep; ++m)
      for (int r = 0; n + m + r <= sweep; ++r) {
        assoc = assoc && sh_associativity_check(n, m, r);
        splits = splits && sh_split_identities_check(n, m, r);
        ++instances;
      }
  state.report("shuffle associativity", assoc, std::to_string(instances) + " size tuples");
  state.report("seven split identities", splits, std::to_string(instances) + " size tuples");
  state.report("multi-block identities", varios_identities_check(sweep));

  bool wedge_ok = true, tj_ok = true;
  for (int n = 1; n <= std::min(cap, 6); ++n)
    for (auto& w : enumerate_pwords(n)) {
      auto dec = wedge_decompose(w);
      wedge_ok = wedge_ok && wedge(dec.omega, dec.parts) == w;
      if (n <= 4)
        for (int j = 1; j <= dec.omega.rank() - 1; ++j) {
          auto moved = tj_into_wedge(j, dec.omega, dec.parts);
          tj_ok = tj_ok && compose(t_map(j, w.rank()), w) == wedge(moved.omega, moved.parts);
        }
    }
  state.report("wedge round trip", wedge_ok);
  state.report("t_j into wedge", tj_ok);
}

void verify_orders(VerifyState& state, int cap) {
  int sweep = std::min(cap, kSweepCap);
  bool acyclic = true, downset = true, coset = true, classical = true, bounds = true;
  bool c_contained = true, c_graded = true, reversal = true;
  for (int n = 1; n <= sweep; ++n) {
    Poset<PackedWord> bru = build_order(n, OrderKind::Bruhat, kMaxPosetDegree);
    Poset<PackedWord> inc = build_order(n, OrderKind::Inclusion, kMaxPosetDegree);
    Poset<PackedWord> cor = build_order(n, OrderKind::C, kMaxPosetDegree);
    acyclic = acyclic && bru.diagram.acyclic() && inc.diagram.acyclic() && cor.diagram.acyclic();
    for (auto& w : bru.elements) {
      if (w.empty()) continue;
      bounds = bounds && bru.leq(identity_word(n), w) && bru.leq(w, longest_word(n));
      if (n <= 4) coset = coset && coclass_interval_check(w);
    }
    for (auto& a : cor.elements)
      for (auto& b : cor.elements)
        if (cor.leq(a, b)) {
          c_contained = c_contained && bru.leq(a, b);
          c_graded = c_graded && a.rank() == b.rank();
        }
    if (n <= 4)
      for (auto& a : enumerate_pwords_rank(n, n))
        for (auto& b : enumerate_pwords_rank(n, n)) {
          std::set<std::pair<int, int>> ia, ib;
          for (int p = 1; p <= n; ++p)
            for (int q = p + 1; q <= n; ++q) {
              if (a(p) > a(q)) ia.emplace(p, q);
              if (b(p) > b(q)) ib.emplace(p, q);
            }
          bool incl = std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
          classical = classical && bru.leq(a, b) == incl;
        }
    for (auto& a : bru.elements)
      for (auto& b : bru.elements) {
        if (!bru.leq(a, b)) continue;
        for (int j = 1; j <= n && reversal; ++j)
          for (int k = j + 1; k <= n; ++k) {
            if (b(j) < b(k) && !(a(j) < a(k))) reversal = false;
            if (a(j) > a(k) && !(b(j) > b(k))) reversal = false;
          }
      }
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int rest) {
      if (rest == 0 && !parts.empty()) {
        downset = downset && shuffle_downset_check(Composition{std::vector<int>(parts)});
        return;
      }
      for (int p = 1; p <= rest; ++p) {
        parts.push_back(p);
        rec(rest - p);
        parts.pop_back();
      }
    };
    rec(n);
  }
  state.report("posets are antisymmetric", acyclic);
  state.report("shuffles are the down-set of xi", downset);
  state.report("coset containment is a Bruhat interval", coset);
  state.report("permutation restriction is the weak order", classical);
  state.report("identity and reversal bound every word", bounds);
  state.report("rank-preserving order refines into Bruhat", c_contained);
  state.report("rank-preserving order keeps the rank", c_graded);
  state.report("comparabilities never reverse strict pairs", reversal);

  CheckReport mono = monotonicity_checks(sweep);
  state.report("monotonicity sweeps", mono.ok,
               mono.ok ? std::to_string(mono.instances) + " instances" : mono.counterexample);
}

void verify_gamma(VerifyState& state, int cap) {
  int sweep = std::min(cap, kSweepCap);
  bool surjective = true, fibers = true, partition = true, endpoints = true;
  for (int n = 0; n <= sweep; ++n) {
    std::set<PlanarTree> image;
    std::set<PackedWord> seen;
    std::size_t total = 0;
    for (auto& w : enumerate_pwords(n)) image.insert(to_tree(w));
    auto trees = enumerate_trees(n);
    surjective = surjective && image == std::set<PlanarTree>(trees.begin(), trees.end());
    for (auto& t : trees) {
      auto f = fiber(t);
      std::set<PackedWord> direct;
      for (auto& w : enumerate_pwords(n))
        if (to_tree(w) == t) direct.insert(w);
      fibers = fibers && std::set<PackedWord>(f.begin(), f.end()) == direct;
      endpoints = endpoints && (t.is_leaf() || (to_tree(min_word(t)) == t &&
                                                to_tree(max_word(t)) == t &&
                                                min_word(t).rank() == t.vertex_count() &&
                                                max_word(t).rank() == t.vertex_count()));
      total += f.size();
      seen.insert(f.begin(), f.end());
    }
    partition = partition && total == enumerate_pwords(n).size() && seen.size() == total;
  }
  state.report("projection is onto", surjective);
  state.report("fibers are the min/max intervals", fibers);
  state.report("fibers partition the words", partition);
  state.report("fiber endpoints land at the vertex count", endpoints);

  bool transport = true;
  for (int n = 1; n <= std::min(cap, 4); ++n)
    for (auto kind : {OrderKind::Inclusion, OrderKind::Bruhat, OrderKind::C})
      transport = transport && order_transport_check(n, kind);
  state.report("orders transport along the projection", transport);
}

void verify_axioms(VerifyState& state, int cap) {
  int sweep = std::min(cap, kSweepCap);
  AxiomsReport words = axioms_check(Basis::PWord, sweep);
  state.report("trialgebra axioms on words", words.ok(),
               words.ok() ? std::to_string(words.triples) + " triples" : *words.counterexample);
  AxiomsReport trees = axioms_check(Basis::Tree, sweep);
  state.report("trialgebra axioms on trees", trees.ok(),
               trees.ok() ? std::to_string(trees.triples) + " triples" : *trees.counterexample);

  bool agree = true, morphism = true, multiplicity = true, ou = true;
  for (int n = 1; n < sweep; ++n)
    for (int m = 1; n + m <= sweep; ++m) {
      for (auto& a : enumerate_pwords(n))
        for (auto& b : enumerate_pwords(m))
          for (TriOp op : {TriOp::Succ, TriOp::Dot, TriOp::Prec, TriOp::Star}) {
            LinComb<PackedWord> sh = pword_product(a, b, op, PwordMethod::Shuffle);
            agree = agree && sh == pword_product(a, b, op, PwordMethod::Interval);
            LinComb<PlanarTree> collapsed;
            std::set<PlanarTree> images;
            for (auto& [w, c] : sh.terms()) {
              (void)c;
              images.insert(to_tree(w));
              multiplicity = multiplicity && sh.coeff(w) == 1;
            }
            for (auto& t : images) collapsed.add(t, 1);
            morphism = morphism && collapsed == tree_product(to_tree(a), to_tree(b), op);
          }
      for (auto& t : enumerate_trees(n))
        for (auto& z : enumerate_trees(m)) {
          ou = ou && over_under_check(t, z);
          for (TriOp op : {TriOp::Succ, TriOp::Dot, TriOp::Prec, TriOp::Star}) {
            LinComb<PlanarTree> rec = tree_product(t, z, op, TreeMethod::Recursion);
            agree = agree && rec == tree_product(t, z, op, TreeMethod::Fiber);
            agree = agree && rec == tree_product(t, z, op, TreeMethod::Interval);
            for (auto& [w, c] : rec.terms()) {
              (void)w;
              multiplicity = multiplicity && c == 1;
            }
          }
        }
    }
  state.report("product methods agree", agree);
  state.report("projection is an operation morphism", morphism);
  state.report("basis products are multiplicity free", multiplicity);
  state.report("over/under describe the fibers of a product", ou);
}

void verify_freeness(VerifyState& state, int cap) {
  int top = std::min(cap, kFreenessCap);
  bool ok = true;
  std::string ranks;
  for (int n = 1; n <= top; ++n) {
    SpanReport r = freeness_span_check(n);
    ok = ok && r.ok();
    if (!ranks.empty()) ranks += ",";
    ranks += std::to_string(r.rank_found);
  }
  state.report("iterated products span every degree", ok, "ranks " + ranks);
}

int cmd_verify(const std::string& suite, int cap) {
  VerifyState state;
  if (suite == "shuffles" || suite == "all") verify_shuffles(state, cap);
  if (suite == "orders" || suite == "all") verify_orders(state, cap);
  if (suite == "gamma" || suite == "all") verify_gamma(state, cap);
  if (suite == "axioms" || suite == "all") verify_axioms(state, cap);
  if (suite == "freeness" || suite == "all") verify_freeness(state, cap);
  std::cout << (state.all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  return state.all_ok ? 0 : 1;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::CapExceeded: return 2;
    case Errc::UnitUndefined: return 4;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak order engine on permutahedron faces and planar trees"};
  app.require_subcommand(1);
  int cap = env_default_cap();
  app.add_option("--cap", cap, "degree cap for expensive queries");

  std::string basis, kind, a, b, op, method, suite, format = "text";
  int n = 0, rank = 0;
  bool with_interval = false;

  auto* enumerate = app.add_subcommand("enumerate", "list a graded piece of either basis");
  enumerate->add_option("basis", basis)->required()->check(CLI::IsMember({"pword", "tree"}));
  enumerate->add_option("n", n)->required();
  enumerate->add_option("--rank", rank, "restrict packed words to one rank");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* order = app.add_subcommand("order", "compare two elements");
  order->add_option("basis", basis)->required()->check(CLI::IsMember({"pword", "tree"}));
  order->add_option("kind", kind)->required()->check(CLI::IsMember({"inclusion", "bruhat", "c"}));
  order->add_option("a", a)->required();
  order->add_option("b", b)->required();
  order->add_flag("--interval", with_interval, "also list the closed interval");
  order->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* hasse = app.add_subcommand("hasse", "emit the cover diagram of a graded piece");
  hasse->add_option("basis", basis)->required()->check(CLI::IsMember({"pword", "tree"}));
  hasse->add_option("kind", kind)->required()->check(CLI::IsMember({"inclusion", "bruhat", "c"}));
  hasse->add_option("n", n)->required();
  hasse->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  auto* product = app.add_subcommand("product", "multiply two basis elements");
  product->add_option("basis", basis)->required()->check(CLI::IsMember({"pword", "tree"}));
  product->add_option("op", op)->required()->check(CLI::IsMember({"succ", "dot", "prec", "star"}));
  product->add_option("a", a)->required();
  product->add_option("b", b)->required();
  product->add_option("--method", method,
                      "shuffle|interval (words), recursion|fiber|interval (trees)");
  product->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gamma = app.add_subcommand("gamma", "project a packed word onto its tree");
  gamma->add_option("word", a)->required();

  auto* fiber_cmd = app.add_subcommand("fiber", "list the words over a tree");
  fiber_cmd->add_option("tree", a)->required();
  fiber_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* minmax = app.add_subcommand("minmax", "endpoints of the fiber of a tree");
  minmax->add_option("tree", a)->required();
  minmax->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"axioms", "orders", "gamma", "shuffles", "freeness", "all"}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (*enumerate) return cmd_enumerate(basis, n, rank, format, cap);
    if (*order) return cmd_order(basis, kind, a, b, with_interval, format, cap);
    if (*hasse) return cmd_hasse(basis, kind, n, format == "text" ? "dot" : format, cap);
    if (*product) return cmd_product(basis, op, method, a, b, format, cap);
    if (*gamma) return cmd_gamma(a);
    if (*fiber_cmd) return cmd_fiber(a, format, cap);
    if (*minmax) return cmd_minmax(a, format);
    if (*verify) return cmd_verify(suite, cap);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
