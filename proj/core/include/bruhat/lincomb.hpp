#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace bruhat {

using Int = boost::multiprecision::cpp_int;

// A finite formal sum of basis elements with exact integer coefficients.
// Zero coefficients are never stored; term order follows the canonical
// order of the basis type, so textual output is deterministic.
template <typename T>
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(const T& basis_elem) { terms_[basis_elem] = 1; }

  static LinComb zero() { return LinComb{}; }

  const std::map<T, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Int coeff(const T& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add(const T& x, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(x, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (auto& [x, c] : o.terms_) add(x, c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }

  LinComb& operator*=(const Int& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [x, c] : terms_) c *= s;
    return *this;
  }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

 private:
  std::map<T, Int> terms_;
};

// The fixed textual schema used by the command line and the test suites:
// {"basis":"<name>","terms":[{"elem":"<string form>","coeff":"<integer>"}]}
template <typename T>
std::string lincomb_to_json(const LinComb<T>& v, const std::string& basis_name) {
  std::string out = "{\"basis\":\"" + basis_name + "\",\"terms\":[";
  bool first = true;
  for (auto& [x, c] : v.terms()) {
    if (!first) out += ',';
    first = false;
    out += "{\"elem\":\"" + x.to_string() + "\",\"coeff\":\"" + c.str() + "\"}";
  }
  out += "]}";
  return out;
}

}  // namespace bruhat
