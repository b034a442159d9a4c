#include "bruhat/trialgebra.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <set>
#include <vector>

#include "bruhat/order.hpp"
#include "bruhat/shuffle.hpp"

namespace bruhat {

namespace {

using Rational = boost::multiprecision::cpp_rational;

ShuffleSplit split_for(TriOp op) {
  switch (op) {
    case TriOp::Succ: return ShuffleSplit::Greater;
    case TriOp::Dot: return ShuffleSplit::Bullet;
    case TriOp::Prec: return ShuffleSplit::Less;
    case TriOp::Star: return ShuffleSplit::All;
  }
  return ShuffleSplit::All;
}

void require_non_unit(bool unit_seen, TriOp op) {
  if (unit_seen && op != TriOp::Star)
    fail(Errc::UnitUndefined, "the three partial products are undefined on the unit");
}

LinComb<PackedWord> pword_shuffle_product(const PackedWord& a, const PackedWord& b, TriOp op) {
  LinComb<PackedWord> out;
  PackedWord ab = cross(a, b);
  for (auto& w : enumerate_sh(Composition{a.rank(), b.rank()}, split_for(op)))
    out.add(compose(w, ab), 1);
  return out;
}

LinComb<PackedWord> pword_interval_product(const PackedWord& a, const PackedWord& b, TriOp op) {
  const int r = a.rank(), s = b.rank();
  PackedWord ab = cross(a, b);
  PackedWord lo, hi;
  switch (op) {
    case TriOp::Succ:
      lo = ab;
      hi = compose(cross(xi(Composition{r, s - 1}), identity_word(1)), ab);
      break;
    case TriOp::Dot: {
      PackedWord zc = z_word(Composition{r - 1, s - 1, 0});
      lo = compose(zc, ab);
      hi = compose(cross(xi(Composition{r - 1, s - 1}), identity_word(1)), lo);
      break;
    }
    case TriOp::Prec:
      lo = compose(z_word(Composition{r - 1, s}), ab);
      hi = compose(xi(Composition{r, s}), ab);
      break;
    case TriOp::Star:
      lo = ab;
      hi = compose(xi(Composition{r, s}), ab);
      break;
  }
  LinComb<PackedWord> out;
  for (auto& w : pword_interval(lo, hi, OrderKind::Bruhat)) out.add(w, 1);
  return out;
}

}  // namespace

LinComb<PackedWord> pword_product(const PackedWord& a, const PackedWord& b, TriOp op,
                                  PwordMethod method) {
  if (a.empty() || b.empty()) {
    require_non_unit(true, op);
    return LinComb<PackedWord>(a.empty() ? b : a);
  }
  if (a.degree() + b.degree() > kMaxSearchDegree)
    fail(Errc::CapExceeded, "product degree above the ceiling");
  return method == PwordMethod::Shuffle ? pword_shuffle_product(a, b, op)
                                        : pword_interval_product(a, b, op);
}

LinComb<PackedWord> pword_product(const LinComb<PackedWord>& a, const LinComb<PackedWord>& b,
                                  TriOp op, PwordMethod method) {
  LinComb<PackedWord> out;
  for (auto& [x, cx] : a.terms())
    for (auto& [y, cy] : b.terms()) {
      LinComb<PackedWord> p = pword_product(x, y, op, method);
      p *= cx * cy;
      out += p;
    }
  return out;
}

namespace {

// Wedge extended linearly in one slot.
LinComb<PlanarTree> wedge_linear(const std::vector<PlanarTree>& prefix,
                                 const LinComb<PlanarTree>& slot,
                                 const std::vector<PlanarTree>& suffix) {
  LinComb<PlanarTree> out;
  for (auto& [t, c] : slot.terms()) {
    std::vector<PlanarTree> parts(prefix);
    parts.push_back(t);
    parts.insert(parts.end(), suffix.begin(), suffix.end());
    out.add(tree_wedge(std::move(parts)), c);
  }
  return out;
}

LinComb<PlanarTree> tree_recursion_product(const PlanarTree& a, const PlanarTree& b, TriOp op);

LinComb<PlanarTree> tree_star_recursive(const PlanarTree& a, const PlanarTree& b) {
  if (a.is_leaf()) return LinComb<PlanarTree>(b);
  if (b.is_leaf()) return LinComb<PlanarTree>(a);
  LinComb<PlanarTree> out = tree_recursion_product(a, b, TriOp::Succ);
  out += tree_recursion_product(a, b, TriOp::Dot);
  out += tree_recursion_product(a, b, TriOp::Prec);
  return out;
}

LinComb<PlanarTree> tree_recursion_product(const PlanarTree& a, const PlanarTree& b, TriOp op) {
  if (op == TriOp::Star) return tree_star_recursive(a, b);
  const auto& as = a.children();
  const auto& bs = b.children();
  switch (op) {
    case TriOp::Succ: {
      // a succ b = wedge(a * b0, b1, ..., bh)
      LinComb<PlanarTree> inner = tree_star_recursive(a, bs.front());
      return wedge_linear({}, inner, std::vector<PlanarTree>(bs.begin() + 1, bs.end()));
    }
    case TriOp::Dot: {
      // a dot b = wedge(a0, ..., a_{k-1}, ak * b0, b1, ..., bh)
      LinComb<PlanarTree> inner = tree_star_recursive(as.back(), bs.front());
      return wedge_linear(std::vector<PlanarTree>(as.begin(), as.end() - 1), inner,
                          std::vector<PlanarTree>(bs.begin() + 1, bs.end()));
    }
    case TriOp::Prec: {
      // a prec b = wedge(a0, ..., a_{k-1}, ak * b)
      LinComb<PlanarTree> inner = tree_star_recursive(as.back(), b);
      return wedge_linear(std::vector<PlanarTree>(as.begin(), as.end() - 1), inner, {});
    }
    default: break;
  }
  return {};
}

LinComb<PlanarTree> tree_fiber_product(const PlanarTree& a, const PlanarTree& b, TriOp op) {
  std::set<PlanarTree> seen;
  for (auto& g : fiber(a))
    for (auto& d : fiber(b)) {
      LinComb<PackedWord> prod = pword_product(g, d, op, PwordMethod::Shuffle);
      for (auto& [w, c] : prod.terms()) {
        (void)c;
        seen.insert(to_tree(w));
      }
    }
  LinComb<PlanarTree> out;
  for (auto& t : seen) out.add(t, 1);
  return out;
}

LinComb<PlanarTree> tree_interval_product(const PlanarTree& a, const PlanarTree& b, TriOp op) {
  const auto& as = a.children();
  const auto& bs = b.children();
  PlanarTree lo, hi;
  switch (op) {
    case TriOp::Succ: {
      lo = over(a, b);
      std::vector<PlanarTree> parts{under(a, bs.front())};
      parts.insert(parts.end(), bs.begin() + 1, bs.end());
      hi = tree_wedge(std::move(parts));
      break;
    }
    case TriOp::Dot: {
      std::vector<PlanarTree> lo_parts(as.begin(), as.end() - 1);
      lo_parts.push_back(over(as.back(), bs.front()));
      lo_parts.insert(lo_parts.end(), bs.begin() + 1, bs.end());
      lo = tree_wedge(std::move(lo_parts));
      std::vector<PlanarTree> hi_parts(as.begin(), as.end() - 1);
      hi_parts.push_back(under(as.back(), bs.front()));
      hi_parts.insert(hi_parts.end(), bs.begin() + 1, bs.end());
      hi = tree_wedge(std::move(hi_parts));
      break;
    }
    case TriOp::Prec: {
      std::vector<PlanarTree> lo_parts(as.begin(), as.end() - 1);
      lo_parts.push_back(over(as.back(), b));
      lo = tree_wedge(std::move(lo_parts));
      hi = under(a, b);
      break;
    }
    case TriOp::Star:
      lo = over(a, b);
      hi = under(a, b);
      break;
  }
  LinComb<PlanarTree> out;
  for (auto& t : tree_interval(lo, hi, OrderKind::Bruhat)) out.add(t, 1);
  return out;
}

}  // namespace

LinComb<PlanarTree> tree_product(const PlanarTree& a, const PlanarTree& b, TriOp op,
                                 TreeMethod method) {
  if (a.is_leaf() || b.is_leaf()) {
    require_non_unit(true, op);
    return LinComb<PlanarTree>(a.is_leaf() ? b : a);
  }
  if (a.degree() + b.degree() > kMaxTreeDegree)
    fail(Errc::CapExceeded, "product degree above the ceiling");
  switch (method) {
    case TreeMethod::Fiber: return tree_fiber_product(a, b, op);
    case TreeMethod::Recursion: return tree_recursion_product(a, b, op);
    case TreeMethod::Interval: return tree_interval_product(a, b, op);
  }
  return {};
}

LinComb<PlanarTree> tree_product(const LinComb<PlanarTree>& a, const LinComb<PlanarTree>& b,
                                 TriOp op, TreeMethod method) {
  LinComb<PlanarTree> out;
  for (auto& [x, cx] : a.terms())
    for (auto& [y, cy] : b.terms()) {
      LinComb<PlanarTree> p = tree_product(x, y, op, method);
      p *= cx * cy;
      out += p;
    }
  return out;
}

bool over_under_check(const PlanarTree& t, const PlanarTree& z) {
  PlanarTree o = over(t, z);
  PlanarTree u = under(t, z);
  for (auto& g : fiber(t))
    for (auto& d : fiber(z)) {
      PackedWord gd = cross(g, d);
      if (to_tree(gd) != o) return false;
      if (to_tree(compose(xi(Composition{g.rank(), d.rank()}), gd)) != u) return false;
    }
  return true;
}

namespace {

template <typename T, typename Prod>
AxiomsReport axioms_check_impl(const std::vector<std::vector<T>>& graded, int degree_cap,
                               Prod prod) {
  AxiomsReport report;
  using LC = LinComb<T>;
  auto star = [&](const LC& x, const LC& y) {
    LC out = prod(x, y, TriOp::Succ);
    out += prod(x, y, TriOp::Dot);
    out += prod(x, y, TriOp::Prec);
    return out;
  };
  for (int da = 1; da <= degree_cap - 2; ++da)
    for (int db = 1; da + db <= degree_cap - 1; ++db)
      for (int dc = 1; da + db + dc <= degree_cap; ++dc)
        for (auto& xa : graded[static_cast<std::size_t>(da)])
          for (auto& xb : graded[static_cast<std::size_t>(db)])
            for (auto& xc : graded[static_cast<std::size_t>(dc)]) {
              ++report.triples;
              LC a(xa), b(xb), c(xc);
              auto check = [&](bool okay, const char* name) {
                if (!okay && !report.counterexample)
                  report.counterexample = std::string(name) + " fails at (" + xa.to_string() +
                                          ", " + xb.to_string() + ", " + xc.to_string() + ")";
              };
              check(prod(a, prod(b, c, TriOp::Succ), TriOp::Succ) ==
                        prod(star(a, b), c, TriOp::Succ),
                    "succ/succ");
              check(prod(a, prod(b, c, TriOp::Prec), TriOp::Succ) ==
                        prod(prod(a, b, TriOp::Succ), c, TriOp::Prec),
                    "succ/prec");
              check(prod(a, star(b, c), TriOp::Prec) ==
                        prod(prod(a, b, TriOp::Prec), c, TriOp::Prec),
                    "prec/star");
              check(prod(a, prod(b, c, TriOp::Dot), TriOp::Dot) ==
                        prod(prod(a, b, TriOp::Dot), c, TriOp::Dot),
                    "dot/dot");
              check(prod(a, prod(b, c, TriOp::Dot), TriOp::Succ) ==
                        prod(prod(a, b, TriOp::Succ), c, TriOp::Dot),
                    "succ/dot");
              check(prod(a, prod(b, c, TriOp::Succ), TriOp::Dot) ==
                        prod(prod(a, b, TriOp::Prec), c, TriOp::Dot),
                    "dot/succ");
              check(prod(a, prod(b, c, TriOp::Prec), TriOp::Dot) ==
                        prod(prod(a, b, TriOp::Dot), c, TriOp::Prec),
                    "dot/prec");
              if (report.counterexample) return report;
            }
  return report;
}

}  // namespace

AxiomsReport axioms_check(Basis basis, int degree_cap) {
  if (basis == Basis::PWord) {
    std::vector<std::vector<PackedWord>> graded;
    for (int d = 0; d <= degree_cap; ++d) graded.push_back(enumerate_pwords(d));
    return axioms_check_impl<PackedWord>(
        graded, degree_cap, [](const LinComb<PackedWord>& x, const LinComb<PackedWord>& y,
                               TriOp op) { return pword_product(x, y, op); });
  }
  std::vector<std::vector<PlanarTree>> graded;
  for (int d = 0; d <= degree_cap; ++d) graded.push_back(enumerate_trees(d));
  return axioms_check_impl<PlanarTree>(
      graded, degree_cap, [](const LinComb<PlanarTree>& x, const LinComb<PlanarTree>& y,
                             TriOp op) { return tree_product(x, y, op); });
}

SpanReport freeness_span_check(int n) {
  if (n < 1 || n > 4) fail(Errc::CapExceeded, "span rank is computed for 1 <= n <= 4");
  // All complete bracketings of n copies of the one-vertex tree under the
  // three operations, evaluated in the degree-n tree space.
  std::vector<std::vector<LinComb<PlanarTree>>> exprs(static_cast<std::size_t>(n) + 1);
  exprs[1] = {LinComb<PlanarTree>(corolla(1))};
  for (int k = 2; k <= n; ++k)
    for (int i = 1; i < k; ++i)
      for (auto& lhs : exprs[static_cast<std::size_t>(i)])
        for (auto& rhs : exprs[static_cast<std::size_t>(k - i)])
          for (TriOp op : {TriOp::Succ, TriOp::Dot, TriOp::Prec})
            exprs[static_cast<std::size_t>(k)].push_back(tree_product(lhs, rhs, op));

  std::vector<PlanarTree> basis = enumerate_trees(n);
  std::map<PlanarTree, std::size_t> basis_index;
  for (std::size_t i = 0; i < basis.size(); ++i) basis_index.emplace(basis[i], i);

  std::vector<std::vector<Rational>> rows;
  for (auto& e : exprs[static_cast<std::size_t>(n)]) {
    std::vector<Rational> row(basis.size(), 0);
    for (auto& [t, c] : e.terms()) row[basis_index.at(t)] = Rational(c);
    rows.push_back(std::move(row));
  }

  // Exact Gaussian elimination.
  int rank = 0;
  std::size_t col = 0;
  for (; col < basis.size() && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    const std::vector<Rational>& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / prow[col];
      for (std::size_t cc = col; cc < basis.size(); ++cc) rows[r][cc] -= f * prow[cc];
    }
    ++rank;
  }
  return {rank, static_cast<int>(basis.size())};
}

}  // namespace bruhat
