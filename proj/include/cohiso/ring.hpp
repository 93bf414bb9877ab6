#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohiso {

enum class MonomialOrder { GrevLex, Lex };

/// Variable list plus term order; every polynomial carries one and all
/// arithmetic requires both sides to agree.
struct RingSignature {
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::GrevLex;

  RingSignature() = default;
  RingSignature(std::vector<std::string> vars, MonomialOrder ord = MonomialOrder::GrevLex)
      : variables(std::move(vars)), order(ord) {
    std::set<std::string> seen(variables.begin(), variables.end());
    if (seen.size() != variables.size())
      throw std::invalid_argument("ring signature has duplicate variable names");
  }

  std::size_t arity() const { return variables.size(); }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
      if (variables[i] == name) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const RingSignature& a, const RingSignature& b) {
    return a.order == b.order && a.variables == b.variables;
  }
  friend bool operator!=(const RingSignature& a, const RingSignature& b) { return !(a == b); }
};

/// Exponent vector; length always equals the signature arity.
struct Monomial {
  std::vector<std::uint32_t> exp;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exp(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {}

  static Monomial one(std::size_t n) { return Monomial(n); }

  std::uint64_t degree() const {
    return std::accumulate(exp.begin(), exp.end(), std::uint64_t{0});
  }

  bool is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](std::uint32_t e) { return e == 0; });
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > m.exp[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
    return r;
  }

  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= m.exp[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exp.size(); ++i)
      if (a.exp[i] != 0 && b.exp[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Strict comparison in the signature's order: negative, zero or positive
/// as a < b, a == b, a > b.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < a.exp.size(); ++i) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
    }
    return 0;
  }
  // graded reverse lexicographic
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.exp.size(); i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

inline bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
  return compare(a, b, order) < 0;
}

inline std::string to_string(const Monomial& m, const RingSignature& sig) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += sig.variables[i];
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

}  // namespace cohiso
